#include "qcalc/parse.hpp"

namespace qcalc::parse {

std::optional<Quantity> Environment::lookup(const std::string& name) const {
  if (auto it = bindings.find(name); it != bindings.end()) return it->second;
  if (space) return space->lookup(name);
  return std::nullopt;
}

namespace {

const QuantitySpace& space_of(const Environment& env) {
  if (!env.space) throw InvalidArgument("evaluation needs a quantity space");
  return *env.space;
}

Quantity resolve(const Expr& e, const Environment& env) {
  auto q = env.lookup(e.name);
  if (!q) throw UnboundIdentifier(e.name, e.span);
  return *q;
}

}  // namespace

Quantity eval(const Expr& e, const Environment& env) {
  switch (e.kind) {
    case Expr::Kind::Number: return q_scale(e.number, space_of(env).one());
    case Expr::Kind::Ref: return resolve(e, env);
    case Expr::Kind::Neg: return q_neg(eval(*e.lhs, env));
    case Expr::Kind::Pow: return q_pow(eval(*e.lhs, env), e.exponent);
    case Expr::Kind::Mul: return q_mul(eval(*e.lhs, env), eval(*e.rhs, env));
    case Expr::Kind::Div: return q_div(eval(*e.lhs, env), eval(*e.rhs, env));
    case Expr::Kind::Add:
    case Expr::Kind::Sub: {
      const Quantity a = eval(*e.lhs, env);
      const Quantity b = eval(*e.rhs, env);
      if (a.exponents() != b.exponents())
        throw IncommensurableTerms(a.exponents(), b.exponents(), e.lhs->span, e.rhs->span);
      return e.kind == Expr::Kind::Add ? q_add(a, b) : q_sub(a, b);
    }
  }
  throw InvalidArgument("unknown expression node");
}

namespace {

class DimensionChecker {
 public:
  DimensionChecker(const Environment& env, HomogeneityReport& report) : env_(env), report_(report) {}

  ExponentVector dim(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::Number: return ExponentVector(space_of(env_).rank());
      case Expr::Kind::Ref: return resolve(e, env_).exponents();
      case Expr::Kind::Neg: return dim(*e.lhs);
      case Expr::Kind::Pow: return dim(*e.lhs).scaled(e.exponent);
      case Expr::Kind::Mul: return dim(*e.lhs) + dim(*e.rhs);
      case Expr::Kind::Div: return dim(*e.lhs) - dim(*e.rhs);
      case Expr::Kind::Add:
      case Expr::Kind::Sub: {
        ExponentVector a = dim(*e.lhs);
        ExponentVector b = dim(*e.rhs);
        join({e.lhs->span, a}, {e.rhs->span, b});
        return a;
      }
    }
    throw InvalidArgument("unknown expression node");
  }

  // Records both operands and the first mismatch.
  void join(TermDimension a, TermDimension b) {
    const bool equal = a.dimension == b.dimension;
    report_.terms.push_back(a);
    report_.terms.push_back(b);
    if (!equal && report_.homogeneous) {
      report_.homogeneous = false;
      report_.conflict_lhs = std::move(a);
      report_.conflict_rhs = std::move(b);
    }
  }

 private:
  const Environment& env_;
  HomogeneityReport& report_;
};

}  // namespace

HomogeneityReport check_homogeneity(const Expr& lhs, const Expr& rhs, const Environment& env) {
  HomogeneityReport report;
  DimensionChecker checker(env, report);
  report.lhs_dimension = checker.dim(lhs);
  report.rhs_dimension = checker.dim(rhs);
  checker.join({lhs.span, report.lhs_dimension}, {rhs.span, report.rhs_dimension});
  return report;
}

}  // namespace qcalc::parse
