#include <algorithm>
#include <atomic>

#include "qcalc/qspace.hpp"

namespace qcalc {

namespace {

std::atomic<std::uint64_t> next_space_id{1};

void require_same_space(SpaceId a, SpaceId b) {
  if (a != b) throw MismatchError("quantities belong to different spaces");
}

std::string superscript(std::int64_t k) {
  static const char* digits[] = {"⁰", "¹", "²", "³", "⁴", "⁵", "⁶", "⁷", "⁸", "⁹"};
  std::string out = k < 0 ? "⁻" : "";
  for (char c : std::to_string(k < 0 ? -k : k)) out += digits[c - '0'];
  return out;
}

}  // namespace

Incommensurable::Incommensurable(ExponentVector lhs, ExponentVector rhs)
    : Error("incommensurable quantities: dimensions " + lhs.str() + " and " + rhs.str()),
      lhs_(std::move(lhs)),
      rhs_(std::move(rhs)) {}

Dimension Dimension::operator+(const Dimension& rhs) const {
  require_same_space(space_, rhs.space_);
  return {exponents_ + rhs.exponents_, space_};
}

Dimension Dimension::operator-(const Dimension& rhs) const {
  require_same_space(space_, rhs.space_);
  return {exponents_ - rhs.exponents_, space_};
}

QuantitySpace::QuantitySpace(std::string name, std::vector<std::string> basis_names)
    : id_{next_space_id.fetch_add(1)},
      name_(std::move(name)),
      basis_names_(std::move(basis_names)),
      descriptions_(basis_names_.size()) {}

QuantitySpace QuantitySpace::make(std::string name, std::vector<std::string> basis_names) {
  for (std::size_t i = 0; i < basis_names.size(); ++i) {
    if (basis_names[i].empty()) throw InvalidArgument("empty basis name");
    for (std::size_t j = 0; j < i; ++j)
      if (basis_names[i] == basis_names[j]) throw InvalidArgument("duplicate basis name '" + basis_names[i] + "'");
  }
  return QuantitySpace(std::move(name), std::move(basis_names));
}

Quantity QuantitySpace::one() const { return {Rational(1), ExponentVector(rank()), id_}; }

Quantity QuantitySpace::basis_element(std::size_t index) const {
  if (index >= rank()) throw InvalidArgument("basis index out of range");
  return {Rational(1), ExponentVector::unit(rank(), index), id_};
}

Quantity QuantitySpace::quantity(Rational measure, ExponentVector exponents) const {
  if (exponents.size() != rank())
    throw ShapeError("expected " + std::to_string(rank()) + " exponents, got " + std::to_string(exponents.size()));
  return {std::move(measure), std::move(exponents), id_};
}

Dimension QuantitySpace::dimension(ExponentVector exponents) const {
  if (exponents.size() != rank()) throw ShapeError("dimension length does not match rank");
  return {std::move(exponents), id_};
}

void QuantitySpace::require_member(const Quantity& x) const {
  if (x.space() != id_) throw MismatchError("quantity does not belong to space '" + name_ + "'");
}

void QuantitySpace::require_fresh_name(const std::string& name) const {
  if (name.empty()) throw InvalidArgument("empty name");
  if (has_name(name)) throw InvalidArgument("name '" + name + "' is already defined");
}

void QuantitySpace::define_unit(const std::string& name, const Quantity& value) {
  require_member(value);
  require_fresh_name(name);
  if (value.is_zero()) throw InvalidArgument("unit '" + name + "' has zero measure");
  units_.push_back({name, value});
}

void QuantitySpace::define_constant(const std::string& name, const Quantity& value) {
  require_member(value);
  require_fresh_name(name);
  constants_.push_back({name, value});
}

std::optional<std::size_t> QuantitySpace::basis_index(const std::string& name) const {
  auto it = std::find(basis_names_.begin(), basis_names_.end(), name);
  if (it == basis_names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - basis_names_.begin());
}

std::optional<Quantity> QuantitySpace::lookup(const std::string& name) const {
  if (auto i = basis_index(name)) return basis_element(*i);
  for (const auto& u : units_)
    if (u.name == name) return u.value;
  for (const auto& c : constants_)
    if (c.name == name) return c.value;
  return std::nullopt;
}

bool QuantitySpace::has_name(const std::string& name) const { return lookup(name).has_value(); }

std::vector<Dimension> QuantitySpace::dim_group_basis() const {
  std::vector<Dimension> out;
  for (std::size_t i = 0; i < rank(); ++i) out.emplace_back(ExponentVector::unit(rank(), i), id_);
  return out;
}

const NamedQuantity* QuantitySpace::unit_for(const ExponentVector& d) const {
  for (const auto& u : units_)
    if (u.value.exponents() == d) return &u;
  return nullptr;
}

std::string QuantitySpace::format_dimension(const ExponentVector& k) const {
  if (k.size() != rank()) throw ShapeError("dimension length does not match rank");
  std::string out;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (k[i] == 0) continue;
    if (!out.empty()) out += ' ';
    out += basis_names_[i];
    if (k[i] != 1) out += superscript(k[i]);
  }
  return out.empty() ? "[1]" : out;
}

std::string QuantitySpace::format(const Quantity& x) const {
  require_member(x);
  return x.measure().str() + " · " + format_dimension(x.exponents());
}

// ---------------------------------------------------------------------------

Quantity q_mul(const Quantity& x, const Quantity& y) {
  require_same_space(x.space(), y.space());
  return {x.measure() * y.measure(), x.exponents() + y.exponents(), x.space()};
}

Quantity q_scale(const Rational& lambda, const Quantity& x) {
  return {lambda * x.measure(), x.exponents(), x.space()};
}

Quantity q_inv(const Quantity& x) {
  if (x.is_zero()) throw NotInvertible("zero quantity has no inverse");
  return {x.measure().inverse(), -x.exponents(), x.space()};
}

Quantity q_div(const Quantity& x, const Quantity& y) { return q_mul(x, q_inv(y)); }

Quantity q_pow(const Quantity& x, std::int64_t k) {
  if (k < 0 && x.is_zero()) throw NotInvertible("zero quantity raised to a negative power");
  return {x.measure().pow(k), x.exponents().scaled(k), x.space()};
}

Quantity q_add(const Quantity& x, const Quantity& y) {
  require_same_space(x.space(), y.space());
  if (x.exponents() != y.exponents()) throw Incommensurable(x.exponents(), y.exponents());
  return {x.measure() + y.measure(), x.exponents(), x.space()};
}

Quantity q_sub(const Quantity& x, const Quantity& y) { return q_add(x, q_neg(y)); }

Quantity q_neg(const Quantity& x) { return {-x.measure(), x.exponents(), x.space()}; }

Dimension dimension_of(const Quantity& x) { return {x.exponents(), x.space()}; }

Quantity coherent_unit(const Dimension& d) { return {Rational(1), d.exponents(), d.space()}; }

}  // namespace qcalc
