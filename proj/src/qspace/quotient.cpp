#include <algorithm>
#include <sstream>

#include "qcalc/qspace.hpp"

namespace qcalc {

namespace {

std::int64_t small(const BigInt& v) {
  if (!v.fits_slong_p()) throw OverflowError("exponent " + v.get_str() + " does not fit in 64 bits");
  return v.get_si();
}

// prod_i measures_i^(sign * a_i)
Rational power_product(const std::vector<Quantity>& constants, const BigVector& a, int sign) {
  Rational out(1);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0) out *= constants[i].measure().pow(sign * small(a[i]));
  return out;
}

std::vector<ExponentVector> checked_exponents(const QuantitySpace& parent, const std::vector<Quantity>& constants) {
  std::vector<ExponentVector> out;
  for (const auto& c : constants) {
    parent.require_member(c);
    if (c.is_zero()) throw InvalidArgument("cannot set a zero constant to 1");
    out.push_back(c.exponents());
  }
  return out;
}

bool unit_pivots(const LatticeQuotient& l) {
  const HermiteForm& h = l.hermite();
  for (std::size_t i = 0; i < h.rank; ++i)
    if (h.form(i, h.pivot_columns[i]) != 1) return false;
  return true;
}

std::vector<std::string> quotient_names(const QuantitySpace& parent, const LatticeQuotient& l, bool keeps_basis) {
  std::vector<std::string> names;
  if (keeps_basis) {
    const auto& pivots = l.hermite().pivot_columns;
    for (std::size_t c = 0; c < parent.rank(); ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) names.push_back(parent.basis_names()[c]);
  } else {
    for (std::size_t j = 0; j < l.free_rank(); ++j) names.push_back("q" + std::to_string(j + 1));
  }
  return names;
}

}  // namespace

QuotientSpace::QuotientSpace(const QuantitySpace& parent, std::vector<Quantity> constants)
    : parent_(parent.id()),
      constants_(std::move(constants)),
      lattice_(checked_exponents(parent, constants_), parent.rank()),
      keeps_basis_(unit_pivots(lattice_)),
      quotient_(QuantitySpace::make(parent.name() + "/~", quotient_names(parent, lattice_, keeps_basis_))) {
  if (!lattice_.is_free()) {
    std::ostringstream os;
    os << "quotient has torsion (invariant factors";
    for (const auto& d : lattice_.invariant_factors()) os << ' ' << d.get_str();
    os << "); no quantity space results";
    throw NonFreeQuotient(os.str());
  }
  // Every integer relation among the constants' dimensions must also hold
  // among their measures, otherwise 1 = (some rational != 1) would follow.
  for (const auto& r : lattice_.relations()) {
    const Rational forced = power_product(constants_, r, 1);
    if (forced != 1) {
      std::ostringstream os;
      os << "constants are contradictory: the dimensionless combination with exponents (";
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << r[i].get_str();
      os << ") has measure " << forced.str() << ", not 1";
      throw ContradictoryConstant(os.str());
    }
  }
  if (keeps_basis_) {
    const auto& pivots = lattice_.hermite().pivot_columns;
    for (std::size_t c = 0; c < parent.rank(); ++c)
      if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) surviving_.push_back(c);
  }
  for (std::size_t i = 0; i < quotient_.rank(); ++i) {
    if (keeps_basis_) quotient_.set_description(i, parent.basis_descriptions()[surviving_[i]]);
  }
  for (const auto& u : parent.units()) quotient_.define_unit(u.name, project(u.value));
  for (const auto& c : parent.constants()) quotient_.define_constant(c.name, project(c.value));
}

std::pair<BigVector, ExponentVector> QuotientSpace::split(const ExponentVector& k) const {
  if (keeps_basis_) return {lattice_.combination(k), lattice_.reduce(k)};
  // Smith coordinates y = k V. With U G V = D and unit invariant factors,
  // a = (y_1..y_s, 0..) U gives a * G = k - section(k), linear in k.
  const SmithForm& s = lattice_.smith();
  const std::size_t n = lattice_.ambient_rank(), g = constants_.size(), r = lattice_.sublattice_rank();
  BigVector y(n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) y[j] += k[i] * s.right(i, j);
  BigVector a(g);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < g; ++c) a[c] += y[i] * s.left(i, c);
  BigVector section = to_big(k);
  for (std::size_t c = 0; c < g; ++c)
    for (std::size_t j = 0; j < n; ++j) section[j] -= a[c] * constants_[c].exponents()[j];
  return {std::move(a), to_exponents(section)};
}

ExponentVector QuotientSpace::coordinates(const ExponentVector& section) const {
  std::vector<std::int64_t> out;
  if (keeps_basis_) {
    for (std::size_t c : surviving_) out.push_back(section[c]);
    return ExponentVector(std::move(out));
  }
  const SmithForm& s = lattice_.smith();
  const std::size_t n = lattice_.ambient_rank(), r = lattice_.sublattice_rank();
  for (std::size_t j = r; j < n; ++j) {
    BigInt y = 0;
    for (std::size_t i = 0; i < n; ++i) y += section[i] * s.right(i, j);
    out.push_back(small(y));
  }
  return ExponentVector(std::move(out));
}

Quantity QuotientSpace::representative(const Quantity& x) const {
  if (x.space() != parent_) throw MismatchError("quantity does not belong to the parent space");
  auto [a, section] = split(x.exponents());
  return {x.measure() * power_product(constants_, a, -1), std::move(section), parent_};
}

Quantity QuotientSpace::project(const Quantity& x) const {
  Quantity rep = representative(x);
  return {rep.measure(), coordinates(rep.exponents()), quotient_.id()};
}

QuotientSpace quotient_by_constants(const QuantitySpace& space, const std::vector<Quantity>& constants) {
  return QuotientSpace(space, constants);
}

}  // namespace qcalc
