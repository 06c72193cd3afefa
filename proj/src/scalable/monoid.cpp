#include <string>

#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"

namespace qcalc::scalable {

FiniteScalableMonoid::FiniteScalableMonoid(std::uint32_t modulus, std::size_t size,
                                           std::vector<Element> mul_table,
                                           std::vector<Element> scale_table, Element identity,
                                           std::vector<std::string> labels)
    : modulus_(modulus),
      size_(size),
      mul_(std::move(mul_table)),
      scale_(std::move(scale_table)),
      identity_(identity),
      labels_(std::move(labels)) {
  if (modulus_ < 2) throw InvalidArgument("scalar ring modulus must be at least 2");
  if (size_ == 0) throw InvalidArgument("carrier must be non-empty");
  if (mul_.size() != size_ * size_) throw InvalidArgument("multiplication table has wrong size");
  if (scale_.size() != static_cast<std::size_t>(modulus_) * size_)
    throw InvalidArgument("scaling table has wrong size");
  if (identity_ >= size_) throw InvalidArgument("identity index out of range");
  for (auto e : mul_)
    if (e >= size_) throw InvalidArgument("multiplication table entry out of range");
  for (auto e : scale_)
    if (e >= size_) throw InvalidArgument("scaling table entry out of range");
  if (labels_.empty()) {
    labels_.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i) labels_.push_back("#" + std::to_string(i));
  } else if (labels_.size() != size_) {
    throw InvalidArgument("label count does not match carrier size");
  }
}

std::optional<Element> FiniteScalableMonoid::find_label(const std::string& label) const {
  for (std::size_t i = 0; i < size_; ++i)
    if (labels_[i] == label) return static_cast<Element>(i);
  return std::nullopt;
}

bool FiniteScalableMonoid::is_commutative() const {
  for (Element a = 0; a < size_; ++a)
    for (Element b = a + 1; b < size_; ++b)
      if (mul(a, b) != mul(b, a)) return false;
  return true;
}

bool FiniteScalableMonoid::is_trivially_scalable() const {
  for (Scalar l = 0; l < modulus_; ++l)
    for (Element x = 0; x < size_; ++x)
      if (scale(l, x) != x) return false;
  return true;
}

FiniteScalableMonoid FiniteScalableMonoid::with_mul_entry(Element a, Element b, Element value) const {
  auto table = mul_;
  table.at(static_cast<std::size_t>(a) * size_ + b) = value;
  return {modulus_, size_, std::move(table), scale_, identity_, labels_};
}

FiniteScalableMonoid FiniteScalableMonoid::with_scale_entry(Scalar lambda, Element x, Element value) const {
  auto table = scale_;
  table.at(static_cast<std::size_t>(lambda) * size_ + x) = value;
  return {modulus_, size_, mul_, std::move(table), identity_, labels_};
}

// ---------------------------------------------------------------------------

FiniteScalableMonoid monomial_instance(const MonomialSpec& spec) {
  const std::uint32_t m = spec.modulus;
  const std::uint32_t n_exp = spec.exponent_modulus;
  if (m < 2) throw InvalidArgument("monomial instance needs modulus >= 2");
  if (n_exp < 1) throw InvalidArgument("exponent modulus must be positive");
  std::size_t exponent_count = 1;
  for (std::size_t i = 0; i < spec.arity; ++i) exponent_count *= n_exp;
  const std::size_t size = m * exponent_count;

  // index = mu + m * (k_1 + N * (k_2 + ...))
  auto decode = [&](std::size_t idx, std::uint32_t& mu, std::vector<std::uint32_t>& ks) {
    mu = static_cast<std::uint32_t>(idx % m);
    idx /= m;
    for (std::size_t i = 0; i < spec.arity; ++i) {
      ks[i] = static_cast<std::uint32_t>(idx % n_exp);
      idx /= n_exp;
    }
  };

  std::vector<Element> mul(size * size);
  std::vector<Element> scale(m * size);
  std::vector<std::string> labels(size);
  std::vector<std::uint32_t> ka(spec.arity), kb(spec.arity), kc(spec.arity);
  for (std::size_t a = 0; a < size; ++a) {
    std::uint32_t mu = 0;
    decode(a, mu, ka);
    std::string label = "(" + std::to_string(mu);
    for (auto k : ka) label += "," + std::to_string(k);
    labels[a] = label + ")";
    for (std::size_t b = 0; b < size; ++b) {
      std::uint32_t nu = 0;
      decode(b, nu, kb);
      for (std::size_t i = 0; i < spec.arity; ++i) kc[i] = (ka[i] + kb[i]) % n_exp;
      mul[a * size + b] = monomial_element(spec, (mu * nu) % m, kc);
    }
    for (std::uint32_t l = 0; l < m; ++l) scale[l * size + a] = monomial_element(spec, (l * mu) % m, ka);
  }
  const Element identity = monomial_element(spec, 1, std::vector<std::uint32_t>(spec.arity, 0));
  return {m, size, std::move(mul), std::move(scale), identity, std::move(labels)};
}

Element monomial_element(const MonomialSpec& spec, std::uint32_t measure,
                         const std::vector<std::uint32_t>& exponents) {
  if (exponents.size() != spec.arity) throw InvalidArgument("exponent count does not match arity");
  std::size_t idx = 0;
  for (std::size_t i = spec.arity; i-- > 0;) idx = idx * spec.exponent_modulus + exponents[i] % spec.exponent_modulus;
  return static_cast<Element>(measure % spec.modulus + spec.modulus * idx);
}

FiniteScalableMonoid trivial_monoid(std::uint32_t modulus) {
  return {modulus, 1, {0}, std::vector<Element>(modulus, 0), 0, {"1"}};
}

FiniteScalableMonoid trivially_scalable(std::uint32_t modulus, std::size_t size,
                                        std::vector<Element> mul_table, Element identity,
                                        std::vector<std::string> labels) {
  std::vector<Element> scale(static_cast<std::size_t>(modulus) * size);
  for (std::size_t l = 0; l < modulus; ++l)
    for (std::size_t x = 0; x < size; ++x) scale[l * size + x] = static_cast<Element>(x);
  return {modulus, size, std::move(mul_table), std::move(scale), identity, std::move(labels)};
}

FiniteScalableMonoid multiplicative_residues(std::uint32_t k, std::uint32_t modulus) {
  std::vector<Element> mul(static_cast<std::size_t>(k) * k);
  std::vector<std::string> labels;
  for (std::uint32_t a = 0; a < k; ++a) {
    labels.push_back(std::to_string(a));
    for (std::uint32_t b = 0; b < k; ++b) mul[a * k + b] = (a * b) % k;
  }
  return trivially_scalable(modulus, k, std::move(mul), 1 % k, std::move(labels));
}

}  // namespace qcalc::scalable
