#include <string>

#include "detail.hpp"
#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"

namespace qcalc::scalable {

namespace {
void require_same_ring(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y) {
  if (x.modulus() != y.modulus())
    throw MismatchError("scalar rings differ (Z_" + std::to_string(x.modulus()) + " vs Z_" +
                        std::to_string(y.modulus()) + ")");
}
}  // namespace

FiniteScalableMonoid direct_product(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y) {
  require_same_ring(x, y);
  const std::size_t nx = x.size(), ny = y.size(), n = nx * ny;
  auto pair = [ny](std::size_t a, std::size_t b) { return static_cast<Element>(a * ny + b); };
  std::vector<Element> mul(n * n);
  std::vector<Element> scale(static_cast<std::size_t>(x.modulus()) * n);
  std::vector<std::string> labels(n);
  for (Element a1 = 0; a1 < nx; ++a1)
    for (Element b1 = 0; b1 < ny; ++b1) {
      const Element p = pair(a1, b1);
      labels[p] = "<" + x.label(a1) + "," + y.label(b1) + ">";
      for (Element a2 = 0; a2 < nx; ++a2)
        for (Element b2 = 0; b2 < ny; ++b2) mul[p * n + pair(a2, b2)] = pair(x.mul(a1, a2), y.mul(b1, b2));
      for (Scalar l = 0; l < x.modulus(); ++l) scale[l * n + p] = pair(x.scale(l, a1), y.scale(l, b1));
    }
  return {x.modulus(), n, std::move(mul), std::move(scale), pair(x.identity(), y.identity()),
          std::move(labels)};
}

TensorProduct tensor_product(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y) {
  require_same_ring(x, y);
  const std::size_t nx = x.size(), ny = y.size(), n = nx * ny;
  const std::uint64_t cost = static_cast<std::uint64_t>(n) * n + static_cast<std::uint64_t>(x.modulus()) * n;
  if (cost > kEvaluationBudget)
    throw SizeGuardExceeded("tensor product needs " + std::to_string(cost) + " evaluations");
  auto pair = [ny](std::size_t a, std::size_t b) { return static_cast<Element>(a * ny + b); };

  detail::UnionFind uf(n);
  for (Scalar l = 0; l < x.modulus(); ++l)
    for (Element a = 0; a < nx; ++a)
      for (Element b = 0; b < ny; ++b) uf.unite(pair(x.scale(l, a), b), pair(a, y.scale(l, b)));
  Partition p = Partition::from_class_ids(uf.roots());

  const std::size_t k = p.count;
  constexpr Element unset = ~Element{0};
  std::vector<Element> rep(k, unset);
  for (Element e = 0; e < n; ++e)
    if (rep[p.class_of[e]] == unset) rep[p.class_of[e]] = e;

  std::vector<Element> mul(k * k, unset);
  std::vector<Element> scale(static_cast<std::size_t>(x.modulus()) * k, unset);
  auto record = [](Element& slot, Element value, const char* op) {
    if (slot == unset) {
      slot = value;
    } else if (slot != value) {
      throw WellDefinednessError(std::string("tensor ") + op + " is not constant on classes");
    }
  };
  for (Element a1 = 0; a1 < nx; ++a1)
    for (Element b1 = 0; b1 < ny; ++b1) {
      const Element c1 = p.class_of[pair(a1, b1)];
      for (Element a2 = 0; a2 < nx; ++a2)
        for (Element b2 = 0; b2 < ny; ++b2) {
          const Element c2 = p.class_of[pair(a2, b2)];
          record(mul[c1 * k + c2], p.class_of[pair(x.mul(a1, a2), y.mul(b1, b2))], "multiplication");
        }
      for (Scalar l = 0; l < x.modulus(); ++l)
        record(scale[l * k + c1], p.class_of[pair(x.scale(l, a1), b1)], "scaling");
    }

  std::vector<std::string> labels(k);
  for (std::size_t c = 0; c < k; ++c) labels[c] = x.label(rep[c] / ny) + "(x)" + y.label(rep[c] % ny);
  FiniteScalableMonoid monoid(x.modulus(), k, std::move(mul), std::move(scale),
                              p.class_of[pair(x.identity(), y.identity())], std::move(labels));
  return TensorProduct{std::move(monoid), ny, std::move(p.class_of)};
}

}  // namespace qcalc::scalable
