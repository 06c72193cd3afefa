#pragma once

// Finite scalable monoids over Z/mZ, checked by exhaustive enumeration.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace qcalc::scalable {

/// Dense index into a carrier.
using Element = std::uint32_t;
/// Ring element of Z/mZ, stored as its representative in [0, m).
using Scalar = std::uint32_t;

/// Budget for exhaustive checks, measured as |carrier|^2 * |ring|.
inline constexpr std::uint64_t kEvaluationBudget = 10'000'000;

/// A monoid with an explicit multiplication table and a scaling action of
/// the ring Z/mZ, also given as a table. Immutable after construction.
class FiniteScalableMonoid {
 public:
  /// mul_table is size x size (row = left factor), scale_table is
  /// modulus x size (row = scalar). Throws InvalidArgument on malformed
  /// tables; the algebraic laws are NOT checked here (see verify_axioms).
  FiniteScalableMonoid(std::uint32_t modulus, std::size_t size, std::vector<Element> mul_table,
                       std::vector<Element> scale_table, Element identity,
                       std::vector<std::string> labels = {});

  std::size_t size() const noexcept { return size_; }
  std::uint32_t modulus() const noexcept { return modulus_; }
  Element identity() const noexcept { return identity_; }

  Element mul(Element a, Element b) const { return mul_[static_cast<std::size_t>(a) * size_ + b]; }
  Element scale(Scalar lambda, Element x) const {
    return scale_[static_cast<std::size_t>(lambda) * size_ + x];
  }
  Scalar ring_add(Scalar a, Scalar b) const { return (a + b) % modulus_; }
  Scalar ring_mul(Scalar a, Scalar b) const { return (a * b) % modulus_; }
  Scalar ring_neg(Scalar a) const { return (modulus_ - a) % modulus_; }

  const std::string& label(Element x) const { return labels_.at(x); }
  std::optional<Element> find_label(const std::string& label) const;

  bool is_commutative() const;
  /// lambda . x = x for all lambda, x.
  bool is_trivially_scalable() const;

  const std::vector<Element>& mul_table() const noexcept { return mul_; }
  const std::vector<Element>& scale_table() const noexcept { return scale_; }

  /// Copies with one table entry replaced (fault injection).
  FiniteScalableMonoid with_mul_entry(Element a, Element b, Element value) const;
  FiniteScalableMonoid with_scale_entry(Scalar lambda, Element x, Element value) const;

 private:
  std::uint32_t modulus_;
  std::size_t size_;
  std::vector<Element> mul_;
  std::vector<Element> scale_;
  Element identity_;
  std::vector<std::string> labels_;
};

// ---------------------------------------------------------------------------
// Instances

/// Z_m x (Z_N)^d with (mu,k)(nu,l) = (mu nu, k+l mod N) and
/// lambda.(mu,k) = (lambda mu, k): a truncated Laurent-monomial monoid.
struct MonomialSpec {
  std::uint32_t modulus = 2;
  std::uint32_t exponent_modulus = 1;
  std::size_t arity = 1;
};

FiniteScalableMonoid monomial_instance(const MonomialSpec& spec);
Element monomial_element(const MonomialSpec& spec, std::uint32_t measure,
                         const std::vector<std::uint32_t>& exponents);

/// The one-element monoid {1} over Z_m.
FiniteScalableMonoid trivial_monoid(std::uint32_t modulus);

/// A plain monoid turned into a scalable one by lambda.x = x.
FiniteScalableMonoid trivially_scalable(std::uint32_t modulus, std::size_t size,
                                        std::vector<Element> mul_table, Element identity,
                                        std::vector<std::string> labels = {});

/// Z_k under multiplication mod k, trivially scaled by Z_m.
FiniteScalableMonoid multiplicative_residues(std::uint32_t k, std::uint32_t modulus);

// ---------------------------------------------------------------------------
// Axioms

struct LawResult {
  std::string law;
  bool pass = true;
  std::string counterexample;  // empty when pass
};

struct AxiomReport {
  std::vector<LawResult> laws;
  bool pass() const;
  /// First failing law, if any.
  const LawResult* first_failure() const;
};

/// Checks the monoid laws, the scaling axioms and the derived identities
/// (a.x)(b.y) = ab.xy and a.(b.x) = b.(a.x) over every tuple.
/// Throws SizeGuardExceeded when |X|^2 |R| exceeds kEvaluationBudget.
AxiomReport verify_axioms(const FiniteScalableMonoid& x);

// ---------------------------------------------------------------------------
// Partitions, congruences and quotients

struct Partition {
  std::vector<std::uint32_t> class_of;  // element -> class id
  std::size_t count = 0;

  std::vector<std::vector<Element>> classes() const;
  bool same(Element a, Element b) const { return class_of[a] == class_of[b]; }
  /// Class ids ordered by the smallest member, so equal partitions compare equal.
  static Partition from_class_ids(const std::vector<std::uint32_t>& ids);
  friend bool operator==(const Partition&, const Partition&) = default;
};

/// x ~ y iff a.x = b.y for some scalars a, b (brute force over R^2).
/// Throws WellDefinednessError if the brute-force relation is not transitive.
Partition commensurability_classes(const FiniteScalableMonoid& x);

/// Compatibility of the partition with multiplication and with every scaling.
bool is_congruence(const FiniteScalableMonoid& x, const Partition& p);

struct Quotient {
  FiniteScalableMonoid monoid;
  std::vector<Element> projection;  // element of X -> class element
};

/// Quotient by a congruence partition. Throws WellDefinednessError if the
/// partition is not a congruence.
Quotient quotient_by_congruence(const FiniteScalableMonoid& x, const Partition& p);

/// X / ~, with the projection verified to be a homomorphism and the result
/// verified to be trivially scalable.
Quotient canonical_quotient(const FiniteScalableMonoid& x);

/// x = a.t and y = b.t for some t, a, b.
bool strongly_commensurable(const FiniteScalableMonoid& x, Element a, Element b);

/// Closure of {1} and gens under multiplication.
std::vector<Element> generated_submonoid(const FiniteScalableMonoid& x, std::span<const Element> gens);
/// xM = Mx as sets, for every x.
bool is_normal_submonoid(const FiniteScalableMonoid& x, std::span<const Element> submonoid);
/// Closed under every scaling.
bool is_scalable_subset(const FiniteScalableMonoid& x, std::span<const Element> subset);

/// x ~_M y iff m x = n y for some m, n in M.
Partition submonoid_classes(const FiniteScalableMonoid& x, std::span<const Element> submonoid);

/// X / M for the submonoid M generated by gens. Throws InvalidArgument when M
/// is not normal.
Quotient submonoid_quotient(const FiniteScalableMonoid& x, std::span<const Element> gens);

/// R . 1_X as an element list.
std::vector<Element> scalar_line(const FiniteScalableMonoid& x);

// ---------------------------------------------------------------------------
// Products

/// Componentwise operations; element (a, b) has index a * |Y| + b.
FiniteScalableMonoid direct_product(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y);

struct TensorProduct {
  FiniteScalableMonoid monoid;
  std::size_t right_size = 0;
  std::vector<Element> class_of_pair;  // a * right_size + b -> x (x) y

  Element tensor(Element a, Element b) const { return class_of_pair[a * right_size + b]; }
};

/// X (x) Y: pairs modulo the equivalence generated by (l.x, y) ~ (x, l.y),
/// with (x1(x)y1)(x2(x)y2) = x1x2 (x) y1y2 and l.(x(x)y) = (l.x)(x)y.
/// Well-definedness of both operations is checked on every pair; a failure
/// throws WellDefinednessError.
TensorProduct tensor_product(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y);

// ---------------------------------------------------------------------------
// Orbitoids, unit elements and addition

struct Orbitoid {
  std::vector<Element> members;
};

std::vector<Orbitoid> orbitoids(const FiniteScalableMonoid& x);
/// The commensurability class of a single element.
Orbitoid orbitoid_of(const FiniteScalableMonoid& x, Element e);

struct OrbitoidStructure {
  Element zero = 0;
  std::vector<Element> generators;  // u with R.u covering the class
  std::vector<Element> units;       // generators with lambda -> lambda.u injective
};

/// Throws WellDefinednessError if 0.x is not the same for all members.
OrbitoidStructure orbitoid_structure(const FiniteScalableMonoid& x, const Orbitoid& c);

bool is_unit_element(const FiniteScalableMonoid& x, Element u);

/// x + y = (rho + sigma).u where x = rho.u, y = sigma.u. Throws
/// InvalidArgument if u is not a unit element or x, y lie outside [u].
Element orbitoid_add(const FiniteScalableMonoid& x, Element a, Element b, Element u);

/// Dense: meets every class. Sparse: no two members commensurable.
/// Closed: closed under multiplication.
bool is_dense(const FiniteScalableMonoid& x, std::span<const Element> set);
bool is_sparse(const FiniteScalableMonoid& x, std::span<const Element> set);
bool is_closed(const FiniteScalableMonoid& x, std::span<const Element> set);
/// A submonoid that is a dense, sparse set of unit elements.
bool is_coherent_unit_system(const FiniteScalableMonoid& x, std::span<const Element> set);

/// (x+y)z = xz+yz and z(x+y) = zx+zy for all commensurable x, y and all z,
/// with sums taken relative to the unit elements of `units` (which must be
/// dense). Returns the first counterexample, or nullopt.
std::optional<std::string> distributivity_counterexample(const FiniteScalableMonoid& x,
                                                         std::span<const Element> units);

// ---------------------------------------------------------------------------
// Homomorphisms and isomorphism

/// f(xy) = f(x)f(y), f(l.x) = l.f(x), f(1) = 1, checked on every tuple.
bool is_homomorphism(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y,
                     std::span<const Element> map);

/// Lexicographically least relabelled table encoding; limited to carriers of
/// at most kCanonicalFormLimit elements.
inline constexpr std::size_t kCanonicalFormLimit = 8;
std::vector<std::uint32_t> canonical_form(const FiniteScalableMonoid& x);

/// Backtracking search over images of a small generating set; any map found
/// is a verified bijective homomorphism.
std::optional<std::vector<Element>> find_isomorphism(const FiniteScalableMonoid& x,
                                                     const FiniteScalableMonoid& y);
bool isomorphic(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y);

}  // namespace qcalc::scalable
