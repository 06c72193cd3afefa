#include "qcalc/errors.hpp"
#include "qcalc/scalable.hpp"

namespace qcalc::scalable {

bool AxiomReport::pass() const { return first_failure() == nullptr; }

const LawResult* AxiomReport::first_failure() const {
  for (const auto& law : laws)
    if (!law.pass) return &law;
  return nullptr;
}

namespace {

class LawChecker {
 public:
  explicit LawChecker(const FiniteScalableMonoid& x) : x_(x) {}

  // Records the first violation only.
  template <typename Describe>
  void expect(LawResult& law, bool holds, Describe&& describe) const {
    if (holds || !law.pass) return;
    law.pass = false;
    law.counterexample = describe();
  }

  std::string l(Element e) const { return x_.label(e); }

 private:
  const FiniteScalableMonoid& x_;
};

LawResult law(std::string name) { return LawResult{std::move(name), true, {}}; }

}  // namespace

AxiomReport verify_axioms(const FiniteScalableMonoid& x) {
  const std::uint64_t n = x.size();
  const std::uint64_t m = x.modulus();
  const std::uint64_t cost = n * n * m;
  if (cost > kEvaluationBudget)
    throw SizeGuardExceeded("axiom check over " + std::to_string(n) + " elements and " + std::to_string(m) +
                            " scalars exceeds the budget (|X|^2 |R| = " + std::to_string(cost) + " > " +
                            std::to_string(kEvaluationBudget) + ")");

  LawChecker check(x);
  LawResult assoc = law("associativity (xy)z = x(yz)");
  LawResult left_id = law("left identity 1x = x");
  LawResult right_id = law("right identity x1 = x");
  LawResult scale_one = law("unit scaling 1.x = x");
  LawResult scale_compose = law("scaling composition a.(b.x) = ab.x");
  LawResult scale_left = law("left compatibility a.(xy) = (a.x)y");
  LawResult scale_right = law("right compatibility a.(xy) = x(a.y)");
  LawResult scaled_product = law("scaled product (a.x)(b.y) = ab.xy");
  LawResult scale_commute = law("scalar commutation a.(b.x) = b.(a.x)");

  const Element one = x.identity();
  for (Element a = 0; a < n; ++a) {
    check.expect(left_id, x.mul(one, a) == a, [&] {
      return "x=" + check.l(a) + ": 1x=" + check.l(x.mul(one, a));
    });
    check.expect(right_id, x.mul(a, one) == a, [&] {
      return "x=" + check.l(a) + ": x1=" + check.l(x.mul(a, one));
    });
    check.expect(scale_one, x.scale(1, a) == a, [&] {
      return "x=" + check.l(a) + ": 1.x=" + check.l(x.scale(1, a));
    });
    for (Element b = 0; b < n; ++b) {
      const Element ab = x.mul(a, b);
      for (Element c = 0; c < n; ++c) {
        const Element lhs = x.mul(ab, c);
        const Element rhs = x.mul(a, x.mul(b, c));
        check.expect(assoc, lhs == rhs, [&] {
          return "x=" + check.l(a) + ", y=" + check.l(b) + ", z=" + check.l(c) + ": (xy)z=" + check.l(lhs) +
                 ", x(yz)=" + check.l(rhs);
        });
      }
    }
  }

  for (Scalar alpha = 0; alpha < m; ++alpha) {
    for (Scalar beta = 0; beta < m; ++beta) {
      const Scalar ab = x.ring_mul(alpha, beta);
      for (Element a = 0; a < n; ++a) {
        const Element nested = x.scale(alpha, x.scale(beta, a));
        const Element direct = x.scale(ab, a);
        check.expect(scale_compose, nested == direct, [&] {
          return "a=" + std::to_string(alpha) + ", b=" + std::to_string(beta) + ", x=" + check.l(a) +
                 ": a.(b.x)=" + check.l(nested) + ", ab.x=" + check.l(direct);
        });
        const Element swapped = x.scale(beta, x.scale(alpha, a));
        check.expect(scale_commute, nested == swapped, [&] {
          return "a=" + std::to_string(alpha) + ", b=" + std::to_string(beta) + ", x=" + check.l(a) +
                 ": a.(b.x)=" + check.l(nested) + ", b.(a.x)=" + check.l(swapped);
        });
        for (Element b = 0; b < n; ++b) {
          const Element lhs = x.mul(x.scale(alpha, a), x.scale(beta, b));
          const Element rhs = x.scale(ab, x.mul(a, b));
          check.expect(scaled_product, lhs == rhs, [&] {
            return "a=" + std::to_string(alpha) + ", b=" + std::to_string(beta) + ", x=" + check.l(a) +
                   ", y=" + check.l(b) + ": (a.x)(b.y)=" + check.l(lhs) + ", ab.xy=" + check.l(rhs);
          });
        }
      }
    }
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) {
        const Element scaled = x.scale(alpha, x.mul(a, b));
        const Element left = x.mul(x.scale(alpha, a), b);
        const Element right = x.mul(a, x.scale(alpha, b));
        check.expect(scale_left, scaled == left, [&] {
          return "a=" + std::to_string(alpha) + ", x=" + check.l(a) + ", y=" + check.l(b) +
                 ": a.(xy)=" + check.l(scaled) + ", (a.x)y=" + check.l(left);
        });
        check.expect(scale_right, scaled == right, [&] {
          return "a=" + std::to_string(alpha) + ", x=" + check.l(a) + ", y=" + check.l(b) +
                 ": a.(xy)=" + check.l(scaled) + ", x(a.y)=" + check.l(right);
        });
      }
  }

  return AxiomReport{{assoc, left_id, right_id, scale_one, scale_compose, scale_left, scale_right,
                      scaled_product, scale_commute}};
}

bool is_homomorphism(const FiniteScalableMonoid& x, const FiniteScalableMonoid& y,
                     std::span<const Element> map) {
  if (x.modulus() != y.modulus()) throw MismatchError("homomorphism between different scalar rings");
  if (map.size() != x.size()) throw InvalidArgument("map must assign an image to every element");
  for (auto e : map)
    if (e >= y.size()) return false;
  if (map[x.identity()] != y.identity()) return false;
  for (Element a = 0; a < x.size(); ++a) {
    for (Element b = 0; b < x.size(); ++b)
      if (map[x.mul(a, b)] != y.mul(map[a], map[b])) return false;
    for (Scalar l = 0; l < x.modulus(); ++l)
      if (map[x.scale(l, a)] != y.scale(l, map[a])) return false;
  }
  return true;
}

}  // namespace qcalc::scalable
