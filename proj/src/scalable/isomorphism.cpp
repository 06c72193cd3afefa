#include <algorithm>
#include <numeric>
#include <tuple>

#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"

namespace qcalc::scalable {

std::vector<std::uint32_t> canonical_form(const FiniteScalableMonoid& x) {
  const std::size_t n = x.size();
  if (n > kCanonicalFormLimit)
    throw SizeGuardExceeded("canonical form is limited to " + std::to_string(kCanonicalFormLimit) + " elements");
  std::vector<Element> perm(n);  // old index -> new index
  std::iota(perm.begin(), perm.end(), 0U);
  std::vector<std::uint32_t> best, current(2 + n * n + x.modulus() * n);
  do {
    current[0] = x.modulus();
    current[1] = perm[x.identity()];
    for (Element a = 0; a < n; ++a) {
      for (Element b = 0; b < n; ++b) current[2 + perm[a] * n + perm[b]] = perm[x.mul(a, b)];
      for (Scalar l = 0; l < x.modulus(); ++l) current[2 + n * n + l * n + perm[a]] = perm[x.scale(l, a)];
    }
    if (best.empty() || current < best) best = current;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

// Isomorphism-invariant fingerprint of an element.
using Fingerprint = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, bool>;

std::vector<Fingerprint> fingerprints(const FiniteScalableMonoid& x) {
  std::vector<Fingerprint> out(x.size());
  for (Element e = 0; e < x.size(); ++e) {
    std::vector<char> orbit(x.size(), 0);
    std::size_t orbit_size = 0, fixing = 0;
    for (Scalar l = 0; l < x.modulus(); ++l) {
      const Element s = x.scale(l, e);
      if (!orbit[s]) ++orbit_size;
      orbit[s] = 1;
      if (s == e) ++fixing;
    }
    // Power sequence e, e^2, ... : index of first repeat and period.
    std::vector<std::size_t> seen_at(x.size(), 0);
    Element p = e;
    std::size_t step = 1;
    while (seen_at[p] == 0) {
      seen_at[p] = step++;
      p = x.mul(p, e);
    }
    const std::size_t preperiod = seen_at[p] - 1;
    const std::size_t period = step - seen_at[p];
    out[e] = {orbit_size, fixing, preperiod, period, e == x.identity()};
  }
  return out;
}

// How each element is first reached from the identity: by scaling a parent
// or by right-multiplying it with a generator.
struct Derivation {
  Element parent;
  bool by_scaling;
  std::uint32_t operand;  // scalar or generator position
};

struct Closure {
  std::vector<Element> order;  // identity first, then derivation order
  std::vector<Derivation> how;
};

Closure closure_of(const FiniteScalableMonoid& x, const std::vector<Element>& gens) {
  Closure c;
  c.how.assign(x.size(), Derivation{0, false, ~std::uint32_t{0}});
  std::vector<char> in(x.size(), 0);
  in[x.identity()] = 1;
  c.order.push_back(x.identity());
  for (std::size_t i = 0; i < c.order.size(); ++i) {
    const Element e = c.order[i];
    for (Scalar l = 0; l < x.modulus(); ++l) {
      const Element s = x.scale(l, e);
      if (!in[s]) {
        in[s] = 1;
        c.how[s] = {e, true, l};
        c.order.push_back(s);
      }
    }
    for (std::uint32_t g = 0; g < gens.size(); ++g) {
      const Element s = x.mul(e, gens[g]);
      if (!in[s]) {
        in[s] = 1;
        c.how[s] = {e, false, g};
        c.order.push_back(s);
      }
    }
  }
  return c;
}

std::vector<Element> greedy_generators(const FiniteScalableMonoid& x) {
  std::vector<Element> gens;
  std::size_t covered = closure_of(x, gens).order.size();
  while (covered < x.size()) {
    Element best = 0;
    std::size_t best_size = 0;
    for (Element e = 0; e < x.size(); ++e) {
      gens.push_back(e);
      const std::size_t s = closure_of(x, gens).order.size();
      gens.pop_back();
      if (s > best_size) {
        best_size = s;
        best = e;
      }
    }
    gens.push_back(best);
    covered = best_size;
  }
  return gens;
}

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y)
      : x_(x), y_(y), gens_(greedy_generators(x)), fx_(fingerprints(x)), fy_(fingerprints(y)) {}

  std::optional<std::vector<Element>> run() {
    images_.clear();
    if (search()) return map_;
    return std::nullopt;
  }

 private:
  // Maps the closure of the first images_.size() generators and checks that
  // the partial map respects every operation that stays inside it.
  bool consistent_partial_map() {
    const std::vector<Element> prefix(gens_.begin(), gens_.begin() + static_cast<std::ptrdiff_t>(images_.size()));
    const Closure c = closure_of(x_, prefix);
    constexpr Element unset = ~Element{0};
    map_.assign(x_.size(), unset);
    std::vector<char> used(y_.size(), 0);
    for (Element e : c.order) {
      Element image;
      if (e == x_.identity()) {
        image = y_.identity();
      } else {
        const Derivation& d = c.how[e];
        image = d.by_scaling ? y_.scale(d.operand, map_[d.parent]) : y_.mul(map_[d.parent], images_[d.operand]);
      }
      if (used[image] || fx_[e] != fy_[image]) return false;
      used[image] = 1;
      map_[e] = image;
    }
    for (Element e : c.order) {
      for (Scalar l = 0; l < x_.modulus(); ++l)
        if (map_[x_.scale(l, e)] != y_.scale(l, map_[e])) return false;
      for (std::size_t g = 0; g < prefix.size(); ++g)
        if (map_[x_.mul(e, prefix[g])] != y_.mul(map_[e], images_[g])) return false;
    }
    return true;
  }

  bool search() {
    if (!consistent_partial_map()) return false;
    if (images_.size() == gens_.size()) return is_homomorphism(x_, y_, map_);
    const Element g = gens_[images_.size()];
    for (Element candidate = 0; candidate < y_.size(); ++candidate) {
      if (fx_[g] != fy_[candidate]) continue;
      images_.push_back(candidate);
      if (search()) return true;
      images_.pop_back();
    }
    return false;
  }

  const FiniteScalableMonoid& x_;
  const FiniteScalableMonoid& y_;
  std::vector<Element> gens_;
  std::vector<Fingerprint> fx_, fy_;
  std::vector<Element> images_;
  std::vector<Element> map_;
};

}  // namespace

std::optional<std::vector<Element>> find_isomorphism(const FiniteScalableMonoid& x,
                                                     const FiniteScalableMonoid& y) {
  if (x.modulus() != y.modulus() || x.size() != y.size()) return std::nullopt;
  auto fx = fingerprints(x), fy = fingerprints(y);
  std::sort(fx.begin(), fx.end());
  std::sort(fy.begin(), fy.end());
  if (fx != fy) return std::nullopt;
  return IsomorphismSearch(x, y).run();
}

bool isomorphic(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y) {
  if (x.modulus() != y.modulus() || x.size() != y.size()) return false;
  if (x.size() <= kCanonicalFormLimit) return canonical_form(x) == canonical_form(y);
  return find_isomorphism(x, y).has_value();
}

}  // namespace qcalc::scalable
