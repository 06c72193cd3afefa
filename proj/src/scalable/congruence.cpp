#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "detail.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"

namespace qcalc::scalable {

using detail::Bitset;

std::vector<std::vector<Element>> Partition::classes() const {
  std::vector<std::vector<Element>> out(count);
  for (Element e = 0; e < class_of.size(); ++e) out[class_of[e]].push_back(e);
  return out;
}

Partition Partition::from_class_ids(const std::vector<std::uint32_t>& ids) {
  Partition p;
  p.class_of.resize(ids.size());
  std::map<std::uint32_t, std::uint32_t> renumber;
  for (std::size_t e = 0; e < ids.size(); ++e) {
    auto [it, inserted] = renumber.try_emplace(ids[e], static_cast<std::uint32_t>(renumber.size()));
    p.class_of[e] = it->second;
  }
  p.count = renumber.size();
  return p;
}

namespace detail {

std::vector<Bitset> scaling_orbits(const FiniteScalableMonoid& x) {
  std::vector<Bitset> orbits(x.size(), Bitset(x.size()));
  for (Element e = 0; e < x.size(); ++e)
    for (Scalar l = 0; l < x.modulus(); ++l) orbits[e].set(x.scale(l, e));
  return orbits;
}

Partition partition_from_orbits(const FiniteScalableMonoid& x, const std::vector<Bitset>& orbits,
                                const char* relation) {
  const auto n = static_cast<Element>(x.size());
  UnionFind uf(n);
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (orbits[a].intersects(orbits[b])) uf.unite(a, b);
  Partition p = Partition::from_class_ids(uf.roots());
  for (Element a = 0; a < n; ++a)
    for (Element b = a + 1; b < n; ++b)
      if (p.same(a, b) && !orbits[a].intersects(orbits[b]))
        throw WellDefinednessError(std::string(relation) + " is not transitive at " + x.label(a) + ", " +
                                   x.label(b));
  return p;
}

}  // namespace detail

Partition commensurability_classes(const FiniteScalableMonoid& x) {
  return detail::partition_from_orbits(x, detail::scaling_orbits(x), "commensurability");
}

bool is_congruence(const FiniteScalableMonoid& x, const Partition& p) {
  if (p.class_of.size() != x.size()) throw InvalidArgument("partition does not cover the carrier");
  // Comparing against a fixed representative per class suffices: the
  // relation is an equivalence, so pairwise compatibility follows.
  std::vector<Element> rep(p.count, static_cast<Element>(x.size()));
  for (Element e = 0; e < x.size(); ++e)
    if (rep[p.class_of[e]] == x.size()) rep[p.class_of[e]] = e;
  for (Element a = 0; a < x.size(); ++a) {
    const Element ra = rep[p.class_of[a]];
    for (Element b = 0; b < x.size(); ++b) {
      const Element rb = rep[p.class_of[b]];
      if (!p.same(x.mul(a, b), x.mul(ra, rb))) return false;
    }
    for (Scalar l = 0; l < x.modulus(); ++l)
      if (!p.same(x.scale(l, a), x.scale(l, ra))) return false;
  }
  return true;
}

Quotient quotient_by_congruence(const FiniteScalableMonoid& x, const Partition& p) {
  if (!is_congruence(x, p)) throw WellDefinednessError("partition is not a congruence");
  const std::size_t k = p.count;
  std::vector<Element> rep(k, static_cast<Element>(x.size()));
  for (Element e = 0; e < x.size(); ++e)
    if (rep[p.class_of[e]] == x.size()) rep[p.class_of[e]] = e;
  std::vector<Element> mul(k * k);
  std::vector<Element> scale(static_cast<std::size_t>(x.modulus()) * k);
  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) {
    labels[c] = "[" + x.label(rep[c]) + "]";
    for (std::size_t d = 0; d < k; ++d) mul[c * k + d] = p.class_of[x.mul(rep[c], rep[d])];
    for (Scalar l = 0; l < x.modulus(); ++l) scale[l * k + c] = p.class_of[x.scale(l, rep[c])];
  }
  FiniteScalableMonoid q(x.modulus(), k, std::move(mul), std::move(scale), p.class_of[x.identity()],
                         std::move(labels));
  return Quotient{std::move(q), p.class_of};
}

Quotient canonical_quotient(const FiniteScalableMonoid& x) {
  Quotient q = quotient_by_congruence(x, commensurability_classes(x));
  if (!is_homomorphism(x, q.monoid, q.projection))
    throw WellDefinednessError("canonical projection is not a homomorphism");
  if (!q.monoid.is_trivially_scalable()) throw WellDefinednessError("canonical quotient is not trivially scalable");
  return q;
}

bool strongly_commensurable(const FiniteScalableMonoid& x, Element a, Element b) {
  for (Element t = 0; t < x.size(); ++t) {
    bool hits_a = false, hits_b = false;
    for (Scalar l = 0; l < x.modulus(); ++l) {
      const Element s = x.scale(l, t);
      hits_a = hits_a || s == a;
      hits_b = hits_b || s == b;
    }
    if (hits_a && hits_b) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// Submonoids

std::vector<Element> generated_submonoid(const FiniteScalableMonoid& x, std::span<const Element> gens) {
  std::vector<char> in(x.size(), 0);
  std::vector<Element> members{x.identity()};
  in[x.identity()] = 1;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (Element g : gens) {
      if (g >= x.size()) throw InvalidArgument("generator index out of range");
      for (Element next : {x.mul(members[i], g), x.mul(g, members[i])}) {
        if (!in[next]) {
          in[next] = 1;
          members.push_back(next);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

bool is_normal_submonoid(const FiniteScalableMonoid& x, std::span<const Element> submonoid) {
  for (Element e = 0; e < x.size(); ++e) {
    std::set<Element> left, right;
    for (Element m : submonoid) {
      left.insert(x.mul(e, m));
      right.insert(x.mul(m, e));
    }
    if (left != right) return false;
  }
  return true;
}

bool is_scalable_subset(const FiniteScalableMonoid& x, std::span<const Element> subset) {
  std::vector<char> in(x.size(), 0);
  for (Element e : subset) in[e] = 1;
  for (Element e : subset)
    for (Scalar l = 0; l < x.modulus(); ++l)
      if (!in[x.scale(l, e)]) return false;
  return true;
}

Partition submonoid_classes(const FiniteScalableMonoid& x, std::span<const Element> submonoid) {
  std::vector<Bitset> orbits(x.size(), Bitset(x.size()));
  for (Element e = 0; e < x.size(); ++e)
    for (Element m : submonoid) orbits[e].set(x.mul(m, e));
  return detail::partition_from_orbits(x, orbits, "submonoid relation");
}

Quotient submonoid_quotient(const FiniteScalableMonoid& x, std::span<const Element> gens) {
  const auto m = generated_submonoid(x, gens);
  if (!is_normal_submonoid(x, m)) throw InvalidArgument("generated submonoid is not normal");
  Quotient q = quotient_by_congruence(x, submonoid_classes(x, m));
  if (!is_homomorphism(x, q.monoid, q.projection))
    throw WellDefinednessError("submonoid projection is not a homomorphism");
  return q;
}

std::vector<Element> scalar_line(const FiniteScalableMonoid& x) {
  std::set<Element> line;
  for (Scalar l = 0; l < x.modulus(); ++l) line.insert(x.scale(l, x.identity()));
  return {line.begin(), line.end()};
}

}  // namespace qcalc::scalable
