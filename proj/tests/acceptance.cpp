// Acceptance run: one PASS/FAIL line per criterion; exit status 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <json.hpp>
#include <numeric>
#include <sstream>
#include <string>

#include "qcalc/lattice.hpp"
#include "qcalc/parse.hpp"
#include "qcalc/qspace.hpp"
#include "qcalc/scalable.hpp"
#include "qcli.hpp"
#include "support/generators.hpp"

using namespace qcalc;
using namespace qcalc::scalable;
using qcalc::testing::Gen;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  // Records the first failure only.
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

template <class T>
std::string show(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::vector<MonomialSpec> axiom_instances() {
  std::vector<MonomialSpec> out;
  for (std::uint32_t m = 2; m <= 6; ++m)
    for (std::uint32_t n = 1; n <= 3; ++n)
      for (std::size_t d = 1; d <= 2; ++d) out.push_back({m, n, d});
  return out;
}

std::string name(const MonomialSpec& s) {
  return "(" + std::to_string(s.modulus) + "," + std::to_string(s.exponent_modulus) + "," + std::to_string(s.arity) +
         ")";
}

// ---------------------------------------------------------------------------

// Direct check of the monoid and scaling laws on the tables.
bool lawful(const FiniteScalableMonoid& x) {
  const Element one = x.identity();
  for (Element a = 0; a < x.size(); ++a) {
    if (x.mul(one, a) != a || x.mul(a, one) != a || x.scale(1 % x.modulus(), a) != a) return false;
    for (Scalar p = 0; p < x.modulus(); ++p)
      for (Scalar q = 0; q < x.modulus(); ++q)
        if (x.scale(p, x.scale(q, a)) != x.scale(x.ring_mul(p, q), a)) return false;
    for (Element b = 0; b < x.size(); ++b) {
      for (Scalar p = 0; p < x.modulus(); ++p) {
        const Element lhs = x.scale(p, x.mul(a, b));
        if (lhs != x.mul(x.scale(p, a), b) || lhs != x.mul(a, x.scale(p, b))) return false;
      }
      for (Element c = 0; c < x.size(); ++c)
        if (x.mul(x.mul(a, b), c) != x.mul(a, x.mul(b, c))) return false;
    }
  }
  return true;
}

Outcome ac1() {
  Outcome o;
  const auto specs = axiom_instances();
  for (const auto& s : specs) {
    const AxiomReport r = verify_axioms(monomial_instance(s));
    o.require(r.pass(), "instance " + name(s) + " fails " + (r.pass() ? "" : r.first_failure()->law));
  }
  // A mutated entry can land on another lawful table (on a two-element
  // carrier, 0.1 := 1 makes the scaling trivial), so every mutation is judged
  // against the direct law check and only unlawful ones must be rejected.
  Gen g(101);
  constexpr int kMutations = 200;
  int rejected = 0, still_lawful = 0;
  for (int i = 0; i < kMutations; ++i) {
    const MonomialSpec& s = specs[static_cast<std::size_t>(g.integer(0, static_cast<std::int64_t>(specs.size()) - 1))];
    const auto x = monomial_instance(s);
    const auto size = static_cast<std::int64_t>(x.size());
    std::optional<FiniteScalableMonoid> broken;
    std::string where;
    if (g.coin()) {
      const auto a = static_cast<Element>(g.integer(0, size - 1)), b = static_cast<Element>(g.integer(0, size - 1));
      auto v = static_cast<Element>(g.integer(0, size - 2));
      if (v >= x.mul(a, b)) ++v;
      broken.emplace(x.with_mul_entry(a, b, v));
      where = "mul[" + x.label(a) + "," + x.label(b) + "]";
    } else {
      const auto l = static_cast<Scalar>(g.integer(0, s.modulus - 1));
      const auto a = static_cast<Element>(g.integer(0, size - 1));
      auto v = static_cast<Element>(g.integer(0, size - 2));
      if (v >= x.scale(l, a)) ++v;
      broken.emplace(x.with_scale_entry(l, a, v));
      where = "scale[" + std::to_string(l) + "," + x.label(a) + "]";
    }
    const AxiomReport r = verify_axioms(*broken);
    const bool expected = lawful(*broken);
    o.require(r.pass() == expected, "mutation " + where + " of " + name(s) + (expected ? " wrongly rejected" : " went undetected"));
    o.require(r.pass() || !r.first_failure()->counterexample.empty(), "rejection of " + where + " has no counterexample");
    rejected += !r.pass();
    still_lawful += expected;
  }
  o.require(rejected >= 20, "only " + std::to_string(rejected) + " unlawful mutations");
  if (o.pass)
    o.detail = std::to_string(specs.size()) + " instances pass; " + std::to_string(rejected) + "/" +
               std::to_string(kMutations) + " mutations rejected with counterexamples, " + std::to_string(still_lawful) +
               " left a lawful table and were accepted";
  return o;
}

Outcome ac2() {
  Outcome o;
  for (const auto& s : axiom_instances()) {
    const auto x = monomial_instance(s);
    // Oracle: union-find closure of "s.a = t.b for some s, t".
    std::vector<Element> parent(x.size());
    std::iota(parent.begin(), parent.end(), 0U);
    std::function<Element(Element)> find = [&](Element e) { return parent[e] == e ? e : parent[e] = find(parent[e]); };
    for (Element a = 0; a < x.size(); ++a)
      for (Element b = 0; b < x.size(); ++b)
        for (Scalar p = 0; p < x.modulus(); ++p)
          for (Scalar q = 0; q < x.modulus(); ++q)
            if (x.scale(p, a) == x.scale(q, b)) parent[find(a)] = find(b);
    std::vector<std::uint32_t> ids(x.size());
    for (Element e = 0; e < x.size(); ++e) ids[e] = find(e);
    const Partition brute = Partition::from_class_ids(ids);
    const Partition p = commensurability_classes(x);
    bool agree = p.count == brute.count;
    for (Element a = 0; agree && a < x.size(); ++a)
      for (Element b = 0; b < x.size(); ++b) agree = agree && p.same(a, b) == brute.same(a, b);
    o.require(agree, "partition differs from brute force on " + name(s));
    o.require(is_congruence(x, brute), "brute-force partition is not a congruence on " + name(s));
    const Quotient q = canonical_quotient(x);
    o.require(q.monoid.is_trivially_scalable(), "quotient of " + name(s) + " is not trivially scalable");
    o.require(q.monoid.size() == brute.count, "quotient size mismatch on " + name(s));
  }
  if (o.pass) o.detail = std::to_string(axiom_instances().size()) + " instances, exhaustive";
  return o;
}

Outcome ac3() {
  Outcome o;
  int cases = 0;
  for (std::uint32_t m : {2U, 3U, 5U, 6U}) {
    for (std::uint32_t n : {2U, 3U}) {
      const MonomialSpec one{m, n, 1}, two{m, n, 2};
      const auto x = monomial_instance(one);
      const TensorProduct t = tensor_product(x, x);
      for (Scalar l = 0; l < m; ++l)
        for (Element a = 0; a < x.size(); ++a)
          for (Element b = 0; b < x.size(); ++b)
            o.require(t.tensor(x.scale(l, a), b) == t.tensor(a, x.scale(l, b)),
                      "balanced law fails on " + name(one) + " at " + x.label(a) + "," + x.label(b));
      // Canonical forms are limited to tiny carriers, so the match is a
      // verified bijective homomorphism from the search instead.
      o.require(find_isomorphism(t.monoid, monomial_instance(two)).has_value(),
                "tensor of " + name(one) + " is not isomorphic to " + name(two));
      ++cases;
    }
  }
  if (o.pass) o.detail = std::to_string(cases) + " tensor squares isomorphic to the two-variable instance";
  return o;
}

Outcome ac4() {
  Outcome o;
  const auto x = monomial_instance({5, 2, 1});
  std::size_t pairs = 0;
  for (const Orbitoid& c : orbitoids(x)) {
    const OrbitoidStructure st = orbitoid_structure(x, c);
    for (Element u : st.units)
      for (Element v : st.units)
        for (Element a : c.members)
          for (Element b : c.members) {
            o.require(orbitoid_add(x, a, b, u) == orbitoid_add(x, a, b, v),
                      "sum " + x.label(a) + "+" + x.label(b) + " depends on the unit");
            ++pairs;
          }
  }
  const MonomialSpec six{6, 2, 1};
  const auto y = monomial_instance(six);
  std::size_t units = 0;
  for (Element u = 0; u < y.size(); ++u) {
    // Definition: R.u covers the class of u and lambda -> lambda.u is injective.
    const Orbitoid c = orbitoid_of(y, u);
    std::vector<Element> image;
    for (Scalar l = 0; l < y.modulus(); ++l) image.push_back(y.scale(l, u));
    std::vector<Element> sorted = image, members = c.members;
    std::sort(sorted.begin(), sorted.end());
    std::sort(members.begin(), members.end());
    const bool injective = std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    const bool by_definition = injective && sorted == members;
    o.require(is_unit_element(y, u) == by_definition, "unit census disagrees at " + y.label(u));
    units += by_definition;
  }
  for (std::uint32_t mu : {0U, 2U, 3U, 4U})
    for (std::uint32_t k : {0U, 1U})
      o.require(!is_unit_element(y, monomial_element(six, mu, {k})), "zero-divisor-scaled element counted as unit");
  if (o.pass)
    o.detail = std::to_string(pairs) + " unit/operand combinations agree; " + std::to_string(units) +
               " units in (6,2,1) match the definition";
  return o;
}

Outcome ac5() {
  Outcome o;
  const auto s = QuantitySpace::make("rules", {"a", "b", "c", "d"});
  Gen g(105);
  constexpr int kCases = 10000;
  for (int i = 0; i < kCases && o.pass; ++i) {
    const Quantity x = g.nonzero_quantity(s), y = g.nonzero_quantity(s), z = g.nonzero_quantity(s);
    const Quantity p = g.quantity(s), q = g.quantity(s);
    const ExponentVector k = g.exponents(4);
    const Quantity r1 = s.quantity(g.rational(), k), r2 = s.quantity(g.rational(), k), r3 = s.quantity(g.rational(), k);
    const Rational a = g.rational(), b = g.rational();
    const Quantity zero = q_scale(0, r1);
    const std::string at = " (case " + std::to_string(i) + ")";

    o.require(q_mul(q_mul(x, y), z) == q_mul(x, q_mul(y, z)) && q_mul(x, y) == q_mul(y, x) &&
                  q_mul(x, s.one()) == x && q_mul(x, q_inv(x)) == s.one(),
              "nonzero quantities are not an abelian group" + at);
    o.require(q_scale(1, p) == p && q_scale(a, q_scale(b, p)) == q_scale(a * b, p) &&
                  q_scale(a, q_mul(p, q)) == q_mul(q_scale(a, p), q) && q_scale(a, q_mul(p, q)) == q_mul(p, q_scale(a, q)),
              "scaling axioms" + at);
    bool threw = false;
    try {
      q_add(p, q);
    } catch (const Incommensurable&) {
      threw = true;
    }
    o.require(threw == (p.exponents() != q.exponents()), "commensurability is not exponent equality" + at);
    o.require(q_add(q_add(r1, r2), r3) == q_add(r1, q_add(r2, r3)) && q_add(r1, r2) == q_add(r2, r1) &&
                  q_add(r1, zero) == r1 && q_add(r1, q_neg(r1)) == zero,
              "same-dimension quantities are not an additive group" + at);
    o.require(q_scale(a, q_add(r1, r2)) == q_add(q_scale(a, r1), q_scale(a, r2)) &&
                  q_scale(a + b, r1) == q_add(q_scale(a, r1), q_scale(b, r1)),
              "scaling does not distribute over addition" + at);
    const Quantity ratio = q_mul(x, q_scale(g.nonzero_rational(), q_inv(x)));
    o.require(ratio.exponents().is_zero() && dimension_of(ratio).is_dimensionless(),
              "dimensionless class has nonzero exponents" + at);
    const Dimension d = dimension_of(p), e = dimension_of(q);
    Dimension combo = s.dimension(ExponentVector(4));
    const auto basis = s.dim_group_basis();
    for (std::size_t j = 0; j < 4; ++j) combo = combo + basis[j].scaled(p.exponents()[j]);
    o.require(combo == d && (d + e).exponents() == p.exponents() + q.exponents() && d + (-d) == s.dimension(ExponentVector(4)),
              "dimensions are not the free group on the basis" + at);
    o.require(dimension_of(q_mul(p, q)) == d + e, "dim(pq) != dim p + dim q" + at);
    o.require(q_mul(coherent_unit(d), coherent_unit(e)) == coherent_unit(d + e) && coherent_unit(d).measure() == Rational(1),
              "coherent units are not multiplicative" + at);
    o.require(dimension_of(q_scale(a, p)) == d, "scaling changes dimension" + at);
    o.require(q_mul(p, q_add(r1, r2)) == q_add(q_mul(p, r1), q_mul(p, r2)), "multiplication does not distribute" + at);
    o.require(q_mul(p, q).is_zero() == (p.is_zero() || q.is_zero()), "zero divisor found" + at);
    o.require(measure(q_mul(p, q)) == measure(p) * measure(q) && measure(q_scale(a, p)) == a * measure(p) &&
                  measure(q_add(r1, r2)) == measure(r1) + measure(r2),
              "measure is not a homomorphism" + at);
  }
  if (o.pass) o.detail = "13 properties on " + std::to_string(kCases) + " random cases, rank 4, exponents in [-6,6]";
  return o;
}

BasisTransform random_transform(Gen& g, std::size_t n) {
  BasisTransform t{g.unimodular(n), {}};
  for (std::size_t j = 0; j < n; ++j) t.scales.push_back(g.nonzero_rational(9));
  return t;
}

Outcome ac6() {
  Outcome o;
  const auto s = QuantitySpace::make("four", {"a", "b", "c", "d"});
  Gen g(106);
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    std::vector<Rational> scales;
    for (int j = 0; j < 4; ++j) scales.push_back(g.nonzero_rational(9));
    const Quantity x = g.quantity(s);
    Rational expected = x.measure();
    for (std::size_t j = 0; j < 4; ++j) {
      const std::int64_t k = x.exponents()[j];
      for (std::int64_t n = 0; n < (k < 0 ? -k : k); ++n) expected = k < 0 ? expected * scales[j] : expected / scales[j];
    }
    const auto scaling = BasisTransform::scaling(scales);
    o.require(measure_in(x, scaling) == expected, "scaling formula fails at case " + std::to_string(i));
    o.require(measure_in(s.one(), scaling) == Rational(1), "measure of 1 under scaling is not 1");

    const BasisTransform t = random_transform(g, 4);
    o.require(measure_in(s.one(), t) == Rational(1), "measure of 1 is not 1 after rebase");
    const Quantity dimensionless = s.quantity(g.rational(), ExponentVector(4));
    o.require(measure_in(dimensionless, t) == dimensionless.measure(),
              "dimensionless measure changed under rebase at case " + std::to_string(i));
  }
  if (o.pass) o.detail = std::to_string(kCases) + " scaling cases and " + std::to_string(kCases) + " unimodular rebases";
  return o;
}

Outcome ac7() {
  Outcome o;
  const auto s = QuantitySpace::make("mechanics", {"L", "T", "M"});
  const Quantity force = s.quantity(1, {1, -2, 1});
  const auto r = rebase(s, BasisTransform::from_quantities({s.basis_element(0), s.basis_element(1), force}), {"L", "T", "F"});
  const Quantity mass = r.recoordinate(s.basis_element(2));
  // Substituting F = M L T^-2 into L^a T^b F^c must give M.
  const ExponentVector expanded = s.basis_element(0).exponents().scaled(mass.exponents()[0]) +
                                  s.basis_element(1).exponents().scaled(mass.exponents()[1]) +
                                  force.exponents().scaled(mass.exponents()[2]);
  o.require(mass.exponents() == ExponentVector{-1, 2, 1}, "M maps to " + show(mass.exponents()));
  o.require(expanded == ExponentVector{0, 0, 1} && mass.measure() == Rational(1), "substitution oracle disagrees");

  const auto four = QuantitySpace::make("four", {"a", "b", "c", "d"});
  Gen g(107);
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    const auto rb = rebase(four, random_transform(g, 4), {"w", "x", "y", "z"});
    const Quantity x = g.quantity(four);
    o.require(rb.restore(rb.recoordinate(x)) == x, "roundtrip fails at case " + std::to_string(i));
  }
  if (o.pass) o.detail = "M -> (-1,2,1); " + std::to_string(kCases) + " roundtrips exact";
  return o;
}

Outcome ac8() {
  Outcome o;
  const auto xyz = QuantitySpace::make("xyz", {"x", "y", "z"});
  const QuotientSpace q1(xyz, {xyz.basis_element(0), xyz.basis_element(1)});
  o.require(q1.rank() == 1, "rank is " + std::to_string(q1.rank()));
  o.require(q1.project(xyz.basis_element(2)) == q1.space().basis_element(0), "z does not project to z");

  const auto lt = QuantitySpace::make("lt", {"L", "T"});
  const Quantity c = lt.quantity(299792458L, {1, -1});
  const QuotientSpace q2(lt, {c});
  o.require(q2.project(lt.basis_element(1)) == q2.space().quantity(299792458L, {1}),
            "T projects to " + q2.space().format(q2.project(lt.basis_element(1))));
  o.require(q2.project(c) == q2.space().one(), "c does not project to 1");

  bool nonfree = false;
  try {
    QuotientSpace(lt, {lt.quantity(1, {2, 0})});
  } catch (const NonFreeQuotient&) {
    nonfree = true;
  }
  o.require(nonfree, "killing L^2 did not raise NonFreeQuotient");

  const auto four = QuantitySpace::make("four", {"a", "b", "c", "d"});
  const std::vector<QuotientSpace> quotients = {
      QuotientSpace(four, {four.quantity(Rational(3, 2), {1, -1, 0, 0})}),
      QuotientSpace(four, {four.quantity(7, {2, 1, 0, 0}), four.quantity(Rational(1, 5), {0, 0, 1, 3})}),
      QuotientSpace(four, {four.quantity(2, {2, 3, 0, 0})}),
  };
  Gen g(108);
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases; ++i) {
    const QuotientSpace& q = quotients[static_cast<std::size_t>(i) % quotients.size()];
    const Quantity x = g.quantity(four), y = g.quantity(four);
    const Rational l = g.rational();
    o.require(q.project(q_mul(x, y)) == q_mul(q.project(x), q.project(y)) &&
                  q.project(q_scale(l, x)) == q_scale(l, q.project(x)) && q.project(four.one()) == q.space().one(),
              "projection is not a homomorphism at case " + std::to_string(i));
  }
  if (o.pass) o.detail = "examples exact; " + std::to_string(kCases) + " homomorphism cases";
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = qcli::run(args, out, err);
  return {code, out.str()};
}

Outcome ac9() {
  Outcome o;
  const CliRun energy = cli({"check", "--machine", "--bind", "E=J", "--bind", "m=M", "--bind", "v=L/T", "E = m*v^2/2"});
  o.require(energy.code == 0, "E = m*v^2/2 exit " + std::to_string(energy.code));
  if (energy.code == 0) {
    const auto j = nlohmann::json::parse(energy.out);
    const auto dims = nlohmann::json::array({2, -2, 1});
    o.require(j.at("verdict") == "homogeneous" && j.at("lhs").at("dimension") == dims && j.at("rhs").at("dimension") == dims,
              "E = m*v^2/2 report: " + energy.out);
  }
  const CliRun nj = cli({"check", "--machine", "N = J"});
  o.require(nj.code == 1, "N = J exit " + std::to_string(nj.code));
  if (nj.code == 1) {
    const auto j = nlohmann::json::parse(nj.out);
    o.require(j.at("conflict").at("lhs").at("dimension") == nlohmann::json::array({1, -2, 1}) &&
                  j.at("conflict").at("rhs").at("dimension") == nlohmann::json::array({2, -2, 1}),
              "N = J report: " + nj.out);
  }

  static const char* kDims[] = {"L", "T", "M", "L/T", "M*L", "L^2", "T^-1", "1"};
  static const char* kShapes[] = {"a = b", "a + b = c", "a*b = c - a", "a/b = c^2", "a - b*c = a"};
  Gen g(109);
  constexpr int kCases = 100;
  int heterogeneous = 0;
  for (int i = 0; i < kCases; ++i) {
    const std::string shape = kShapes[g.integer(0, 4)];
    std::vector<std::string> dims;
    for (int v = 0; v < 3; ++v) dims.push_back(kDims[g.integer(0, 7)]);
    auto args_with = [&](bool rescale) {
      std::vector<std::string> args = {"check", "--machine"};
      for (int v = 0; v < 3; ++v) {
        std::string value = "(" + dims[static_cast<std::size_t>(v)] + ")";
        if (rescale) value = "(" + g.nonzero_rational(99).str() + ")*" + value;
        args.push_back("--bind");
        args.push_back(std::string(1, static_cast<char>('a' + v)) + "=" + value);
      }
      args.push_back(shape);
      return args;
    };
    const CliRun base = cli(args_with(false)), scaled = cli(args_with(true));
    o.require(base.code == scaled.code && base.code != 2, "verdict changed under rescaling at case " + std::to_string(i));
    if (base.code == scaled.code && base.code != 2) {
      const auto x = nlohmann::json::parse(base.out), y = nlohmann::json::parse(scaled.out);
      o.require(x.at("terms") == y.at("terms") && x.at("verdict") == y.at("verdict"),
                "report changed under rescaling at case " + std::to_string(i));
    }
    heterogeneous += base.code == 1;
  }
  if (o.pass)
    o.detail = "golden checks hold; " + std::to_string(kCases) + " rescaling cases (" + std::to_string(heterogeneous) +
               " heterogeneous) unchanged";
  return o;
}

Outcome ac10() {
  Outcome o;
  Gen g(110);
  constexpr int kCases = 1000;
  for (int i = 0; i < kCases && o.pass; ++i) {
    const auto rows = static_cast<std::size_t>(g.integer(1, 5)), cols = static_cast<std::size_t>(g.integer(1, 5));
    const IntMatrix m = g.matrix(rows, cols);
    const std::string at = " (case " + std::to_string(i) + ": " + m.str() + ")";

    const SmithForm s = smith_normal_form(m);
    o.require(s.left * m * s.right == s.diagonal, "U M V != D" + at);
    o.require(is_unimodular(s.left) && is_unimodular(s.right), "Smith transforms not unimodular" + at);
    o.require(s.diagonal.is_diagonal(), "D is not diagonal" + at);
    const BigVector d = s.diagonal_entries();
    for (std::size_t k = 0; k + 1 < d.size(); ++k) {
      o.require(d[k] >= 0, "negative invariant factor" + at);
      o.require(d[k + 1] == 0 ? true : (d[k] != 0 && d[k + 1] % d[k] == 0), "divisibility chain broken" + at);
    }

    const HermiteForm h = hermite_form(m);
    o.require(h.transform * m == h.form && is_unimodular(h.transform), "H != W G or W not unimodular" + at);
    for (std::size_t r = h.rank; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) o.require(h.form(r, c) == 0, "nonzero row past the rank" + at);

    std::vector<ExponentVector> gens;
    for (std::size_t r = 0; r < rows; ++r) {
      ExponentVector v(cols);
      for (std::size_t c = 0; c < cols; ++c) v[c] = m(r, c).get_si();
      gens.push_back(v);
    }
    const LatticeQuotient lq(gens, cols);
    for (int j = 0; j < 5; ++j) {
      const ExponentVector v = g.exponents(cols);
      const ExponentVector red = lq.reduce(v);
      o.require(lq.reduce(red) == red, "reduce is not idempotent" + at);
      o.require(lq.contains(v - red), "v - reduce(v) is outside the lattice" + at);
    }
  }
  if (o.pass) o.detail = std::to_string(kCases) + " random matrices up to 5x5, exact";
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<int, Outcome (*)()>> criteria = {{1, ac1}, {2, ac2}, {3, ac3}, {4, ac4}, {5, ac5},
                                                               {6, ac6}, {7, ac7}, {8, ac8}, {9, ac9}, {10, ac10}};
  int failed = 0;
  const auto start = std::chrono::steady_clock::now();
  for (const auto& [number, run] : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("AC %d: %s  %s  [%.2fs]\n", number, o.pass ? "PASS" : "FAIL", o.detail.c_str(), secs);
    failed += !o.pass;
  }
  const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%d/%zu criteria passed in %.2fs\n", static_cast<int>(criteria.size()) - failed, criteria.size(), total);
  return failed == 0 ? 0 : 1;
}
