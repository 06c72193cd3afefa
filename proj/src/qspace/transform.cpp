#include <algorithm>

#include "qcalc/qspace.hpp"

namespace qcalc {

namespace {

Rational power_product(const std::vector<Rational>& bases, const ExponentVector& k, int sign) {
  Rational out(1);
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k[j] != 0) out *= bases[j].pow(sign * k[j]);
  return out;
}

void require_rank(const BasisTransform& t, const Quantity& x) {
  if (x.exponents().size() != t.rank()) throw ShapeError("transform rank does not match quantity");
}

}  // namespace

BasisTransform BasisTransform::scaling(std::vector<Rational> scales) {
  return {IntMatrix::identity(scales.size()), std::move(scales)};
}

BasisTransform BasisTransform::from_quantities(const std::vector<Quantity>& new_basis) {
  std::vector<ExponentVector> columns;
  std::vector<Rational> scales;
  const std::size_t n = new_basis.empty() ? 0 : new_basis.front().exponents().size();
  for (const auto& q : new_basis) {
    if (q.space() != new_basis.front().space()) throw MismatchError("basis quantities from different spaces");
    columns.push_back(q.exponents());
    scales.push_back(q.measure());
  }
  return {IntMatrix::from_columns(columns, n), std::move(scales)};
}

void BasisTransform::validate() const {
  if (!matrix.is_square() || scales.size() != matrix.cols())
    throw ShapeError("basis transform must be square with one scale per column");
  for (std::size_t j = 0; j < scales.size(); ++j)
    if (scales[j].is_zero()) throw InvalidArgument("basis element " + std::to_string(j + 1) + " has zero scale");
  const BigInt d = det_int(matrix);
  if (d != 1 && d != -1)
    throw NotUnimodular("basis change is not unimodular (determinant " + d.get_str() + ")", d.get_str());
}

BasisTransform BasisTransform::inverse() const {
  validate();
  IntMatrix inv = inverse_unimodular(matrix);
  // Old e_i in new coordinates is column i of inv; its new-basis measure is
  // prod_j scales_j^-inv(j,i), so e_i = that scale times the new monomial.
  std::vector<Rational> inv_scales(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    ExponentVector col = to_exponents(inv.column(i));
    inv_scales[i] = power_product(scales, col, -1);
  }
  return {std::move(inv), std::move(inv_scales)};
}

ExponentVector exponents_in(const Quantity& x, const BasisTransform& t) {
  require_rank(t, x);
  return solve_unimodular(t.matrix, x.exponents());
}

Rational measure_in(const Quantity& x, const BasisTransform& t) {
  require_rank(t, x);
  if (t.scales.size() != t.rank()) throw ShapeError("one scale per basis element expected");
  return x.measure() * power_product(t.scales, exponents_in(x, t), -1);
}

// ---------------------------------------------------------------------------

Rebased::Rebased(const QuantitySpace& source, BasisTransform transform, std::vector<std::string> new_names)
    : source_(source.id()),
      transform_(std::move(transform)),
      inverse_(transform_.inverse()),
      target_(QuantitySpace::make(source.name(), std::move(new_names))) {
  if (target_.rank() != source.rank() || transform_.rank() != source.rank())
    throw ShapeError("rebase needs exactly " + std::to_string(source.rank()) + " basis elements");
  // A unit that becomes a basis symbol of the same name is absorbed; any other
  // name clash is an error.
  for (const auto& u : source.units()) {
    Quantity v = recoordinate(u.value);
    if (auto i = target_.basis_index(u.name)) {
      if (v == target_.basis_element(*i)) continue;
      throw InvalidArgument("new basis symbol '" + u.name + "' clashes with a unit of a different value");
    }
    target_.define_unit(u.name, v);
  }
  for (const auto& c : source.constants()) {
    if (target_.basis_index(c.name)) throw InvalidArgument("new basis symbol '" + c.name + "' clashes with a constant");
    target_.define_constant(c.name, recoordinate(c.value));
  }
}

Quantity Rebased::recoordinate(const Quantity& x) const {
  if (x.space() != source_) throw MismatchError("quantity does not belong to the source space");
  return {measure_in(x, transform_), exponents_in(x, transform_), target_.id()};
}

Quantity Rebased::restore(const Quantity& y) const {
  target_.require_member(y);
  return {measure_in(y, inverse_), exponents_in(y, inverse_), source_};
}

Rebased rebase(const QuantitySpace& space, const BasisTransform& t, std::vector<std::string> new_names) {
  return Rebased(space, t, std::move(new_names));
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::string> tensor_basis_names(const QuantitySpace& a, const QuantitySpace& b) {
  const std::string pa = a.name() == b.name() ? "l" : a.name();
  const std::string pb = a.name() == b.name() ? "r" : b.name();
  std::vector<std::string> names;
  for (const auto& n : a.basis_names()) names.push_back(b.has_name(n) ? pa + "." + n : n);
  for (const auto& n : b.basis_names()) names.push_back(a.has_name(n) ? pb + "." + n : n);
  return names;
}

ExponentVector padded(const ExponentVector& k, std::size_t before, std::size_t after) {
  std::vector<std::int64_t> e(before, 0);
  e.insert(e.end(), k.begin(), k.end());
  e.resize(before + k.size() + after, 0);
  return ExponentVector(std::move(e));
}

}  // namespace

TensorSpaces::TensorSpaces(const QuantitySpace& a, const QuantitySpace& b)
    : left_(a.id()),
      right_(b.id()),
      left_rank_(a.rank()),
      right_rank_(b.rank()),
      product_(QuantitySpace::make(a.name() + "(x)" + b.name(), tensor_basis_names(a, b))) {
  const std::string pa = a.name() == b.name() ? "l" : a.name();
  const std::string pb = a.name() == b.name() ? "r" : b.name();
  auto carry = [&](const std::vector<NamedQuantity>& named, const std::string& prefix, bool left, bool unit) {
    for (const auto& q : named) {
      const std::string name = product_.has_name(q.name) || (left && b.has_name(q.name)) ? prefix + "." + q.name
                                                                                         : q.name;
      const Quantity v = left ? embed_left(q.value) : embed_right(q.value);
      unit ? product_.define_unit(name, v) : product_.define_constant(name, v);
    }
  };
  carry(a.units(), pa, true, true);
  carry(b.units(), pb, false, true);
  carry(a.constants(), pa, true, false);
  carry(b.constants(), pb, false, false);
}

Quantity TensorSpaces::embed_left(const Quantity& x) const {
  if (x.space() != left_) throw MismatchError("quantity does not belong to the left factor");
  return {x.measure(), padded(x.exponents(), 0, right_rank_), product_.id()};
}

Quantity TensorSpaces::embed_right(const Quantity& y) const {
  if (y.space() != right_) throw MismatchError("quantity does not belong to the right factor");
  return {y.measure(), padded(y.exponents(), left_rank_, 0), product_.id()};
}

// ---------------------------------------------------------------------------

namespace {

std::vector<ExponentVector> exponents_of(const QuantitySpace& space, const std::vector<Quantity>& qs) {
  std::vector<ExponentVector> out;
  for (const auto& q : qs) {
    space.require_member(q);
    out.push_back(q.exponents());
  }
  return out;
}

std::vector<ExponentVector> hermite_rows(const LatticeQuotient& l) {
  std::vector<ExponentVector> rows;
  for (std::size_t i = 0; i < l.sublattice_rank(); ++i) rows.push_back(to_exponents(l.hermite().form.row(i)));
  return rows;
}

std::vector<std::string> span_names(const QuantitySpace& parent, const std::vector<ExponentVector>& basis) {
  std::vector<std::string> names;
  for (std::size_t j = 0; j < basis.size(); ++j) {
    std::string name = "g" + std::to_string(j + 1);
    for (std::size_t i = 0; i < parent.rank(); ++i)
      if (basis[j] == ExponentVector::unit(parent.rank(), i)) name = parent.basis_names()[i];
    names.push_back(std::move(name));
  }
  return names;
}

}  // namespace

Span::Span(const QuantitySpace& space, const std::vector<Quantity>& generators)
    : parent_(space.id()),
      parent_rank_(space.rank()),
      lattice_(exponents_of(space, generators), space.rank()),
      basis_(hermite_rows(lattice_)),
      sub_(QuantitySpace::make(space.name() + "/span", span_names(space, basis_))) {}

bool Span::contains(const Quantity& x) const {
  if (x.space() != parent_) throw MismatchError("quantity does not belong to the parent space");
  return lattice_.contains(x.exponents());
}

Quantity Span::restrict(const Quantity& x) const {
  if (x.space() != parent_) throw MismatchError("quantity does not belong to the parent space");
  return {x.measure(), to_exponents(lattice_.hermite_coordinates(x.exponents())), sub_.id()};
}

Quantity Span::include(const Quantity& y) const {
  sub_.require_member(y);
  ExponentVector k(parent_rank_);
  for (std::size_t j = 0; j < basis_.size(); ++j) k = k + basis_[j].scaled(y.exponents()[j]);
  return {y.measure(), std::move(k), parent_};
}

}  // namespace qcalc
