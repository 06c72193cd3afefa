#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"
#include "support/generators.hpp"

using namespace qcalc::scalable;

namespace {

MonomialSpec spec(std::uint32_t m, std::uint32_t n, std::size_t d) { return {m, n, d}; }

// Commensurability straight from the definition, without orbit sets.
bool commensurable(const FiniteScalableMonoid& x, Element a, Element b) {
  for (Scalar s = 0; s < x.modulus(); ++s)
    for (Scalar t = 0; t < x.modulus(); ++t)
      if (x.scale(s, a) == x.scale(t, b)) return true;
  return false;
}

// Unit element straight from the definition: R.u covers [u], lambda -> lambda.u injective.
bool unit_by_definition(const FiniteScalableMonoid& x, Element u) {
  for (Element z = 0; z < x.size(); ++z) {
    if (!commensurable(x, u, z)) continue;
    bool reached = false;
    for (Scalar s = 0; s < x.modulus(); ++s) reached = reached || x.scale(s, u) == z;
    if (!reached) return false;
  }
  for (Scalar s = 0; s < x.modulus(); ++s)
    for (Scalar t = s + 1; t < x.modulus(); ++t)
      if (x.scale(s, u) == x.scale(t, u)) return false;
  return true;
}

FiniteScalableMonoid cyclic(std::uint32_t modulus, std::uint32_t order) {
  std::vector<Element> mul(order * order);
  for (Element a = 0; a < order; ++a)
    for (Element b = 0; b < order; ++b) mul[a * order + b] = (a + b) % order;
  return trivially_scalable(modulus, order, std::move(mul), 0);
}

std::vector<Element> all_elements(const FiniteScalableMonoid& x) {
  std::vector<Element> v(x.size());
  std::iota(v.begin(), v.end(), 0U);
  return v;
}

}  // namespace

TEST(Axioms, MonomialInstancesPass) {
  EXPECT_TRUE(verify_axioms(monomial_instance(spec(6, 3, 1))).pass());
  EXPECT_TRUE(verify_axioms(monomial_instance(spec(4, 2, 2))).pass());
  EXPECT_TRUE(verify_axioms(trivial_monoid(3)).pass());
  EXPECT_TRUE(verify_axioms(multiplicative_residues(6, 4)).pass());
}

TEST(Axioms, MutationIsReportedWithCounterexample) {
  const auto x = monomial_instance(spec(6, 3, 1));
  const Element a = monomial_element(spec(6, 3, 1), 2, {1});
  const Element b = monomial_element(spec(6, 3, 1), 1, {1});
  const auto broken = x.with_mul_entry(a, b, x.mul(a, x.identity()));
  const AxiomReport report = verify_axioms(broken);
  ASSERT_FALSE(report.pass());
  EXPECT_FALSE(report.first_failure()->counterexample.empty());
}

TEST(Axioms, SizeGuard) {
  EXPECT_THROW(verify_axioms(monomial_instance(spec(6, 6, 3))), qcalc::SizeGuardExceeded);
}

TEST(Commensurability, Examples) {
  const auto x = monomial_instance(spec(6, 3, 1));
  const Partition p = commensurability_classes(x);
  EXPECT_EQ(p.count, 3U);
  for (Element a = 0; a < x.size(); ++a)
    for (Element b = 0; b < x.size(); ++b) EXPECT_EQ(p.same(a, b), commensurable(x, a, b));
  EXPECT_EQ(commensurability_classes(trivial_monoid(4)).count, 1U);
  EXPECT_EQ(commensurability_classes(multiplicative_residues(3, 3)).count, 3U);
}

TEST(Commensurability, ScalingStaysInClassAndStrongImpliesWeak) {
  for (const auto s : {spec(6, 2, 1), spec(4, 3, 1), spec(5, 2, 1), spec(6, 2, 2)}) {
    const auto x = monomial_instance(s);
    const Partition p = commensurability_classes(x);
    for (Element a = 0; a < x.size(); ++a) {
      for (Scalar l = 0; l < x.modulus(); ++l) EXPECT_TRUE(p.same(a, x.scale(l, a)));
      for (Element b = 0; b < x.size(); ++b)
        if (strongly_commensurable(x, a, b)) EXPECT_TRUE(p.same(a, b));
    }
  }
}

TEST(StrongCommensurability, Examples) {
  const auto s = spec(6, 2, 1);
  const auto x = monomial_instance(s);
  EXPECT_TRUE(strongly_commensurable(x, monomial_element(s, 4, {1}), monomial_element(s, 4, {1})));
  EXPECT_TRUE(strongly_commensurable(x, monomial_element(s, 2, {1}), monomial_element(s, 3, {1})));
  EXPECT_FALSE(strongly_commensurable(x, monomial_element(s, 1, {0}), monomial_element(s, 1, {1})));
}

TEST(Congruence, Examples) {
  const auto x = monomial_instance(spec(6, 3, 1));
  EXPECT_TRUE(is_congruence(x, commensurability_classes(x)));
  std::vector<std::uint32_t> singletons(x.size());
  std::iota(singletons.begin(), singletons.end(), 0U);
  EXPECT_TRUE(is_congruence(x, Partition::from_class_ids(singletons)));
  // Merging (1,0) with (1,1) alone breaks multiplication by (1,1).
  auto merged = singletons;
  merged[monomial_element(spec(6, 3, 1), 1, {1})] = monomial_element(spec(6, 3, 1), 1, {0});
  const Partition bad = Partition::from_class_ids(merged);
  EXPECT_FALSE(is_congruence(x, bad));
  EXPECT_THROW(quotient_by_congruence(x, bad), qcalc::WellDefinednessError);
}

TEST(CanonicalQuotient, Examples) {
  const auto x = monomial_instance(spec(6, 3, 1));
  const Quotient q = canonical_quotient(x);
  EXPECT_TRUE(q.monoid.is_trivially_scalable());
  EXPECT_TRUE(is_homomorphism(x, q.monoid, q.projection));
  EXPECT_TRUE(isomorphic(q.monoid, cyclic(6, 3)));
  EXPECT_EQ(canonical_quotient(trivial_monoid(5)).monoid.size(), 1U);
  EXPECT_EQ(canonical_quotient(monomial_instance(spec(4, 1, 2))).monoid.size(), 1U);
}

TEST(Products, DirectProduct) {
  const auto x = monomial_instance(spec(6, 2, 1));
  const auto p = direct_product(x, x);
  EXPECT_EQ(p.size(), 144U);
  EXPECT_TRUE(verify_axioms(p).pass());
  EXPECT_TRUE(isomorphic(direct_product(trivial_monoid(6), x), x));
  EXPECT_THROW(direct_product(x, trivial_monoid(5)), qcalc::MismatchError);
}

TEST(Products, TensorIsBalancedAndMatchesTwoVariableInstance) {
  for (std::uint32_t m : {2U, 3U, 5U, 6U}) {
    const auto x = monomial_instance(spec(m, 2, 1));
    const auto t = tensor_product(x, x);
    for (Scalar l = 0; l < m; ++l)
      for (Element a = 0; a < x.size(); ++a)
        for (Element b = 0; b < x.size(); ++b)
          EXPECT_EQ(t.tensor(x.scale(l, a), b), t.tensor(a, x.scale(l, b)));
    EXPECT_TRUE(verify_axioms(t.monoid).pass());
    EXPECT_TRUE(find_isomorphism(t.monoid, monomial_instance(spec(m, 2, 2))).has_value()) << "m=" << m;
  }
}

TEST(Products, TensorIsAssociativeUpToIsomorphism) {
  const auto x = monomial_instance(spec(2, 2, 1));
  const auto left = tensor_product(tensor_product(x, x).monoid, x).monoid;
  const auto right = tensor_product(x, tensor_product(x, x).monoid).monoid;
  EXPECT_TRUE(isomorphic(left, right));
}

// The relation written as (a.x1, b.y1) = (b.x2, a.y2) for some a, b admits
// a = b = 0, which relates every pair whose zero images agree. Its
// equivalence closure collapses Z_5 x Z_2 (x) itself to 4 classes instead of
// the 20 of the two-variable instance, which is why the generated relation
// (l.x, y) ~ (x, l.y) is used instead.
TEST(Products, LiteralRelationCollapsesClasses) {
  const auto x = monomial_instance(spec(5, 2, 1));
  const std::size_t n = x.size();
  std::vector<std::uint32_t> cls(n * n);
  std::iota(cls.begin(), cls.end(), 0U);
  auto find = [&](std::uint32_t v) {
    while (cls[v] != v) v = cls[v] = cls[cls[v]];
    return v;
  };
  for (Element x1 = 0; x1 < n; ++x1)
    for (Element y1 = 0; y1 < n; ++y1)
      for (Element x2 = 0; x2 < n; ++x2)
        for (Element y2 = 0; y2 < n; ++y2)
          for (Scalar a = 0; a < 5; ++a)
            for (Scalar b = 0; b < 5; ++b)
              if (x.scale(a, x1) == x.scale(b, x2) && x.scale(b, y1) == x.scale(a, y2)) {
                const auto r1 = find(x1 * n + y1), r2 = find(x2 * n + y2);
                cls[std::max(r1, r2)] = std::min(r1, r2);
              }
  std::size_t classes = 0;
  for (std::uint32_t v = 0; v < n * n; ++v) classes += find(v) == v;
  EXPECT_EQ(classes, 4U);
  EXPECT_EQ(tensor_product(x, x).monoid.size(), 20U);
}

TEST(SubmonoidQuotient, Examples) {
  const auto s = spec(6, 3, 1);
  const auto x = monomial_instance(s);
  const std::vector<Element> none;
  EXPECT_TRUE(isomorphic(submonoid_quotient(x, none).monoid, x));

  const auto line = scalar_line(x);
  EXPECT_EQ(submonoid_classes(x, generated_submonoid(x, line)), commensurability_classes(x));
  EXPECT_TRUE(is_scalable_subset(x, line));
  EXPECT_TRUE(submonoid_quotient(x, line).monoid.is_trivially_scalable());

  // Commensurable elements stay related modulo a scalable submonoid.
  const Partition by_line = submonoid_classes(x, generated_submonoid(x, line));
  const Partition by_scaling = commensurability_classes(x);
  for (Element a = 0; a < x.size(); ++a)
    for (Element b = 0; b < x.size(); ++b)
      if (by_scaling.same(a, b)) EXPECT_TRUE(by_line.same(a, b));
  EXPECT_TRUE(is_normal_submonoid(x, generated_submonoid(x, std::vector<Element>{monomial_element(s, 1, {1})})));
}

TEST(SubmonoidQuotient, RejectsNonNormalSubmonoid) {
  // Left-zero semigroup {a, b} with an adjoined identity: aM = {a} but Ma = {a, b}.
  const std::vector<Element> mul = {0, 1, 2, 1, 1, 1, 2, 2, 2};
  const auto x = trivially_scalable(2, 3, mul, 0, {"1", "a", "b"});
  ASSERT_TRUE(verify_axioms(x).pass());
  const std::vector<Element> gens = {2};
  EXPECT_FALSE(is_normal_submonoid(x, generated_submonoid(x, gens)));
  EXPECT_THROW(submonoid_quotient(x, gens), qcalc::InvalidArgument);
}

TEST(Orbitoids, UnitCensus) {
  const auto f = spec(5, 2, 1);
  const auto x = monomial_instance(f);
  const auto c = orbitoid_of(x, monomial_element(f, 1, {1}));
  const auto st = orbitoid_structure(x, c);
  EXPECT_EQ(st.zero, monomial_element(f, 0, {1}));
  EXPECT_EQ(st.units.size(), 4U);
  for (auto u : st.units) EXPECT_NE(u, st.zero);

  const auto r = spec(6, 2, 1);
  const auto y = monomial_instance(r);
  for (Element e = 0; e < y.size(); ++e) EXPECT_EQ(is_unit_element(y, e), unit_by_definition(y, e)) << y.label(e);
  for (std::uint32_t mu : {0U, 2U, 3U, 4U}) EXPECT_FALSE(is_unit_element(y, monomial_element(r, mu, {1})));
  for (std::uint32_t mu : {1U, 5U}) EXPECT_TRUE(is_unit_element(y, monomial_element(r, mu, {1})));

  const auto trivial = orbitoid_structure(y, Orbitoid{{monomial_element(r, 0, {0})}});
  EXPECT_TRUE(trivial.units.empty());
}

TEST(Orbitoids, Addition) {
  const auto f = spec(5, 2, 1);
  const auto x = monomial_instance(f);
  auto el = [&](std::uint32_t mu) { return monomial_element(f, mu, {1}); };
  EXPECT_EQ(orbitoid_add(x, el(2), el(1), el(1)), el(3));
  for (std::uint32_t mu = 0; mu < 5; ++mu) {
    EXPECT_EQ(orbitoid_add(x, el(mu), el(0), el(1)), el(mu));
    EXPECT_EQ(orbitoid_add(x, el(mu), x.scale(4, el(mu)), el(1)), el(0));
  }
  EXPECT_THROW(orbitoid_add(x, el(1), el(1), el(0)), qcalc::InvalidArgument);
  EXPECT_THROW(orbitoid_add(x, el(1), monomial_element(f, 1, {0}), el(1)), qcalc::InvalidArgument);
}

TEST(Orbitoids, AdditionLaws) {
  const auto f = spec(5, 2, 1);
  const auto x = monomial_instance(f);
  for (const auto& c : orbitoids(x)) {
    const auto units = orbitoid_structure(x, c).units;
    const Element u = units.front();
    for (Element a : c.members)
      for (Element b : c.members) {
        const Element sum = orbitoid_add(x, a, b, u);
        for (Element v : units) EXPECT_EQ(orbitoid_add(x, a, b, v), sum);
        EXPECT_EQ(sum, orbitoid_add(x, b, a, u));
        for (Element z : c.members) EXPECT_EQ(orbitoid_add(x, sum, z, u), orbitoid_add(x, a, orbitoid_add(x, b, z, u), u));
        for (Scalar l = 0; l < 5; ++l) {
          EXPECT_EQ(x.scale(l, sum), orbitoid_add(x, x.scale(l, a), x.scale(l, b), u));
          for (Scalar k = 0; k < 5; ++k)
            EXPECT_EQ(x.scale(x.ring_add(l, k), a), orbitoid_add(x, x.scale(l, a), x.scale(k, a), u));
        }
      }
  }
}

TEST(Orbitoids, CoherentUnitsGiveDistributivity) {
  const auto f = spec(5, 3, 1);
  const auto x = monomial_instance(f);
  std::vector<Element> units;
  for (std::uint32_t k = 0; k < 3; ++k) units.push_back(monomial_element(f, 1, {k}));
  EXPECT_TRUE(is_coherent_unit_system(x, units));
  EXPECT_FALSE(distributivity_counterexample(x, units).has_value());
  std::vector<Element> scaled = units;
  scaled[1] = monomial_element(f, 2, {1});
  EXPECT_FALSE(is_closed(x, scaled));
  EXPECT_TRUE(is_dense(x, scaled));
  EXPECT_TRUE(is_sparse(x, scaled));
  EXPECT_FALSE(is_sparse(x, all_elements(x)));
}

TEST(Homomorphisms, Examples) {
  const auto x = monomial_instance(spec(6, 3, 1));
  const auto id = all_elements(x);
  EXPECT_TRUE(is_homomorphism(x, x, id));
  const Quotient q = canonical_quotient(x);
  EXPECT_TRUE(is_homomorphism(x, q.monoid, q.projection));
  std::vector<Element> constant(x.size(), monomial_element(spec(6, 3, 1), 0, {0}));
  EXPECT_FALSE(is_homomorphism(x, x, constant));
}

TEST(Isomorphism, CanonicalFormAndSearchAgree) {
  qcalc::testing::Gen g(21);
  const auto base = monomial_instance(spec(3, 2, 1));
  for (int i = 0; i < 20; ++i) {
    std::vector<Element> perm = all_elements(base);
    std::shuffle(perm.begin(), perm.end(), g.engine());
    std::vector<Element> mul(base.size() * base.size()), scale(3 * base.size());
    for (Element a = 0; a < base.size(); ++a) {
      for (Element b = 0; b < base.size(); ++b) mul[perm[a] * base.size() + perm[b]] = perm[base.mul(a, b)];
      for (Scalar l = 0; l < 3; ++l) scale[l * base.size() + perm[a]] = perm[base.scale(l, a)];
    }
    const FiniteScalableMonoid relabelled(3, base.size(), mul, scale, perm[base.identity()]);
    EXPECT_EQ(canonical_form(relabelled), canonical_form(base));
    const auto map = find_isomorphism(base, relabelled);
    ASSERT_TRUE(map.has_value());
    EXPECT_TRUE(is_homomorphism(base, relabelled, *map));
  }
  EXPECT_FALSE(isomorphic(monomial_instance(spec(2, 4, 1)), monomial_instance(spec(2, 2, 2))));
  EXPECT_THROW(canonical_form(monomial_instance(spec(3, 3, 1))), qcalc::SizeGuardExceeded);
}
