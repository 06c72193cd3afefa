#pragma once

// Finitely generated quantity spaces over Q in the canonical representation
// x = mu * e_1^k_1 ... e_n^k_n.

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qcalc/errors.hpp"
#include "qcalc/lattice.hpp"
#include "qcalc/scalars.hpp"

namespace qcalc {

/// Identity of a quantity space; every constructed space gets a fresh one.
struct SpaceId {
  std::uint64_t value = 0;
  friend bool operator==(SpaceId, SpaceId) = default;
  friend auto operator<=>(SpaceId, SpaceId) = default;
};

class Dimension {
 public:
  Dimension(ExponentVector exponents, SpaceId space) : exponents_(std::move(exponents)), space_(space) {}

  const ExponentVector& exponents() const noexcept { return exponents_; }
  SpaceId space() const noexcept { return space_; }
  bool is_dimensionless() const noexcept { return exponents_.is_zero(); }

  Dimension operator+(const Dimension& rhs) const;
  Dimension operator-(const Dimension& rhs) const;
  Dimension operator-() const { return {-exponents_, space_}; }
  Dimension scaled(std::int64_t k) const { return {exponents_.scaled(k), space_}; }

  friend bool operator==(const Dimension&, const Dimension&) = default;

 private:
  ExponentVector exponents_;
  SpaceId space_;
};

/// A quantity in its unique expansion (measure, exponents) relative to the
/// basis of its space. Zero quantities of different dimensions are distinct.
class Quantity {
 public:
  Quantity(Rational measure, ExponentVector exponents, SpaceId space)
      : measure_(std::move(measure)), exponents_(std::move(exponents)), space_(space) {}

  const Rational& measure() const noexcept { return measure_; }
  const ExponentVector& exponents() const noexcept { return exponents_; }
  SpaceId space() const noexcept { return space_; }
  bool is_zero() const { return measure_.is_zero(); }

  friend bool operator==(const Quantity&, const Quantity&) = default;

 private:
  Rational measure_;
  ExponentVector exponents_;
  SpaceId space_;
};

/// Addition or comparison of quantities of different dimensions.
class Incommensurable : public Error {
 public:
  Incommensurable(ExponentVector lhs, ExponentVector rhs);
  const ExponentVector& lhs() const noexcept { return lhs_; }
  const ExponentVector& rhs() const noexcept { return rhs_; }

 private:
  ExponentVector lhs_;
  ExponentVector rhs_;
};

/// Named quantity registered in a space (derived unit or constant).
struct NamedQuantity {
  std::string name;
  Quantity value;
};

class QuantitySpace {
 public:
  /// Throws InvalidArgument on duplicate or empty names.
  static QuantitySpace make(std::string name, std::vector<std::string> basis_names);

  SpaceId id() const noexcept { return id_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t rank() const noexcept { return basis_names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return basis_names_; }
  const std::vector<std::string>& basis_descriptions() const noexcept { return descriptions_; }
  void set_description(std::size_t index, std::string text) { descriptions_.at(index) = std::move(text); }

  /// 1_Q
  Quantity one() const;
  /// 1 * e_i
  Quantity basis_element(std::size_t index) const;
  /// Throws ShapeError when the exponent count differs from the rank.
  Quantity quantity(Rational measure, ExponentVector exponents) const;
  Dimension dimension(ExponentVector exponents) const;

  /// Derived units must be nonzero (units are invertible).
  void define_unit(const std::string& name, const Quantity& value);
  void define_constant(const std::string& name, const Quantity& value);
  const std::vector<NamedQuantity>& units() const noexcept { return units_; }
  const std::vector<NamedQuantity>& constants() const noexcept { return constants_; }

  std::optional<std::size_t> basis_index(const std::string& name) const;
  /// Basis symbol, unit or constant by name.
  std::optional<Quantity> lookup(const std::string& name) const;
  bool has_name(const std::string& name) const;

  /// Unit vectors of the dimension group, one per basis element.
  std::vector<Dimension> dim_group_basis() const;
  /// Same rank (the scalar field is always Q).
  bool isomorphic_to(const QuantitySpace& other) const { return rank() == other.rank(); }

  /// First registered unit whose dimension equals `d`, if any.
  const NamedQuantity* unit_for(const ExponentVector& d) const;

  void require_member(const Quantity& x) const;

  /// "L² T⁻¹" in basis order; "[1]" for the dimensionless class.
  std::string format_dimension(const ExponentVector& k) const;
  /// "<measure> · <dimension>"
  std::string format(const Quantity& x) const;

 private:
  QuantitySpace(std::string name, std::vector<std::string> basis_names);
  void require_fresh_name(const std::string& name) const;

  SpaceId id_;
  std::string name_;
  std::vector<std::string> basis_names_;
  std::vector<std::string> descriptions_;
  std::vector<NamedQuantity> units_;
  std::vector<NamedQuantity> constants_;
};

// ---------------------------------------------------------------------------
// Arithmetic

Quantity q_mul(const Quantity& x, const Quantity& y);
Quantity q_scale(const Rational& lambda, const Quantity& x);
/// Throws NotInvertible for zero quantities.
Quantity q_inv(const Quantity& x);
Quantity q_div(const Quantity& x, const Quantity& y);
Quantity q_pow(const Quantity& x, std::int64_t k);
/// Throws Incommensurable when the exponent vectors differ.
Quantity q_add(const Quantity& x, const Quantity& y);
Quantity q_sub(const Quantity& x, const Quantity& y);
Quantity q_neg(const Quantity& x);

Dimension dimension_of(const Quantity& x);
/// The measure-1 quantity of the given dimension.
Quantity coherent_unit(const Dimension& d);

/// Measure relative to the space's own basis.
inline const Rational& measure(const Quantity& x) { return x.measure(); }

// ---------------------------------------------------------------------------
// Basis changes

/// New basis element j is scales[j] * e^(column j of matrix).
struct BasisTransform {
  IntMatrix matrix;
  std::vector<Rational> scales;

  /// Pure rescaling e_i -> scales[i] * e_i.
  static BasisTransform scaling(std::vector<Rational> scales);
  /// Columns and scales read off the given quantities.
  static BasisTransform from_quantities(const std::vector<Quantity>& new_basis);

  /// Throws NotUnimodular or InvalidArgument (zero scale, shape).
  void validate() const;
  BasisTransform inverse() const;
  std::size_t rank() const { return matrix.rows(); }
};

/// Measure of x relative to the transformed basis.
Rational measure_in(const Quantity& x, const BasisTransform& t);
/// Exponents of x relative to the transformed basis.
ExponentVector exponents_in(const Quantity& x, const BasisTransform& t);

class Rebased {
 public:
  Rebased(const QuantitySpace& source, BasisTransform transform, std::vector<std::string> new_names);

  const QuantitySpace& space() const noexcept { return target_; }
  const BasisTransform& transform() const noexcept { return transform_; }
  SpaceId source_id() const noexcept { return source_; }

  /// Source-space quantity -> same quantity in target coordinates.
  Quantity recoordinate(const Quantity& x) const;
  /// Inverse of recoordinate.
  Quantity restore(const Quantity& y) const;

 private:
  SpaceId source_;
  BasisTransform transform_;
  BasisTransform inverse_;
  QuantitySpace target_;
};

Rebased rebase(const QuantitySpace& space, const BasisTransform& t, std::vector<std::string> new_names);

// ---------------------------------------------------------------------------
// Tensor product of spaces

class TensorSpaces {
 public:
  TensorSpaces(const QuantitySpace& a, const QuantitySpace& b);

  const QuantitySpace& space() const noexcept { return product_; }
  Quantity embed_left(const Quantity& x) const;
  Quantity embed_right(const Quantity& y) const;

 private:
  SpaceId left_, right_;
  std::size_t left_rank_, right_rank_;
  QuantitySpace product_;
};

// ---------------------------------------------------------------------------
// Spans

class Span {
 public:
  Span(const QuantitySpace& space, const std::vector<Quantity>& generators);

  const QuantitySpace& space() const noexcept { return sub_; }
  std::size_t rank() const noexcept { return sub_.rank(); }
  /// Exponent vectors (parent coordinates) of the sub-space basis.
  const std::vector<ExponentVector>& basis() const noexcept { return basis_; }

  bool contains(const Quantity& x) const;
  /// Parent quantity -> sub-space coordinates. Throws InvalidArgument if x is
  /// outside the span.
  Quantity restrict(const Quantity& x) const;
  Quantity include(const Quantity& y) const;

 private:
  SpaceId parent_;
  std::size_t parent_rank_;
  LatticeQuotient lattice_;
  std::vector<ExponentVector> basis_;
  QuantitySpace sub_;
};

// ---------------------------------------------------------------------------
// Quotients by constants

/// The space obtained by declaring the given nonzero constants equal to 1.
class QuotientSpace {
 public:
  /// Throws NonFreeQuotient, ContradictoryConstant or InvalidArgument.
  QuotientSpace(const QuantitySpace& parent, std::vector<Quantity> constants);

  SpaceId parent() const noexcept { return parent_; }
  std::size_t parent_rank() const noexcept { return lattice_.ambient_rank(); }
  const QuantitySpace& space() const noexcept { return quotient_; }
  std::size_t rank() const noexcept { return quotient_.rank(); }
  const LatticeQuotient& lattice() const noexcept { return lattice_; }
  const std::vector<Quantity>& constants() const noexcept { return constants_; }
  /// True when every basis element of the quotient is an original basis
  /// element (all Hermite pivots are 1).
  bool keeps_original_basis() const noexcept { return keeps_basis_; }

  /// Canonical representative of x's class, in parent coordinates.
  Quantity representative(const Quantity& x) const;
  /// x -> [x], in quotient coordinates.
  Quantity project(const Quantity& x) const;

 private:
  // Coefficients a with k - section(k) = sum_i a_i k_i, and the section.
  std::pair<BigVector, ExponentVector> split(const ExponentVector& k) const;
  ExponentVector coordinates(const ExponentVector& section) const;

  SpaceId parent_;
  std::vector<Quantity> constants_;
  LatticeQuotient lattice_;
  bool keeps_basis_ = true;
  std::vector<std::size_t> surviving_;  // parent basis indices (keeps_basis_)
  QuantitySpace quotient_;
};

QuotientSpace quotient_by_constants(const QuantitySpace& space, const std::vector<Quantity>& constants);

}  // namespace qcalc
