#include "qcli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fixtures.hpp"
#include "qcalc/parse.hpp"
#include "qcalc/qspace.hpp"
#include "qcalc/scalable.hpp"

namespace qcli {

namespace {

using json = nlohmann::json;
using namespace qcalc;

/// Bad invocation or unreadable input; exit status 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string space_file;
  bool machine = false;
  std::vector<std::string> args;
  std::vector<std::string> tail;  // after "--"
  std::vector<std::string> binds;
  std::vector<std::string> sets;
  bool units = false;
  std::string tensor;
};

std::optional<std::string> bundled(const std::string& name) {
  if (name == "si_mechanics") return std::string(kSiMechanics);
  return std::nullopt;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read space file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// --space wins; otherwise a leading argument naming a bundled space or an
// existing file is consumed; otherwise the bundled si_mechanics space is used.
parse::SpaceDef load_space(Options& o) {
  std::string text;
  if (!o.space_file.empty()) {
    text = bundled(o.space_file).value_or("");
    if (text.empty()) text = read_file(o.space_file);
  } else if (!o.args.empty() && bundled(o.args.front())) {
    text = *bundled(o.args.front());
    o.args.erase(o.args.begin());
  } else if (!o.args.empty() && std::filesystem::is_regular_file(o.args.front())) {
    text = read_file(o.args.front());
    o.args.erase(o.args.begin());
  } else {
    text = kSiMechanics;
  }
  return parse::parse_space_file(text);
}

std::string caret(const std::string& text, parse::Span span) {
  const std::size_t width = std::max<std::size_t>(1, span.end - span.begin);
  return "\n  " + text + "\n  " + std::string(span.begin, ' ') + std::string(width, '^');
}

parse::ExprPtr parse_expression(const std::string& text) {
  try {
    return parse::parse_expr(text);
  } catch (const parse::SyntaxError& e) {
    throw InputError(e.what() + caret(text, e.span()));
  }
}

parse::Equation parse_equation(const std::string& text) {
  try {
    return parse::parse_equation(text);
  } catch (const parse::SyntaxError& e) {
    throw InputError(e.what() + caret(text, e.span()));
  }
}

Quantity evaluate(const std::string& text, const parse::Environment& env) {
  parse::ExprPtr e = parse_expression(text);
  try {
    return parse::eval(*e, env);
  } catch (const parse::UnboundIdentifier& u) {
    throw InputError(u.what() + caret(text, u.span()));
  } catch (const parse::IncommensurableTerms& t) {
    throw std::runtime_error(t.what() + caret(text, t.lhs_span()) + caret(text, t.rhs_span()).substr(text.size() + 3));
  }
}

std::pair<std::string, std::string> split_definition(const std::string& arg) {
  const std::size_t eq = arg.find('=');
  if (eq == std::string::npos || eq == 0) throw InputError("expected NAME=EXPR, got '" + arg + "'");
  return {arg.substr(0, eq), arg.substr(eq + 1)};
}

parse::Environment environment(const QuantitySpace& space, const std::vector<std::string>& binds) {
  parse::Environment env{&space, {}};
  for (const auto& b : binds) {
    auto [name, expr] = split_definition(b);
    env.bindings.insert_or_assign(name, evaluate(expr, env));
  }
  return env;
}

json exponents_json(const ExponentVector& k) { return json(k.entries()); }

std::string dimension_text(const QuantitySpace& space, const ExponentVector& k) {
  return space.format_dimension(k) + " " + k.str();
}

std::string approximate(const Rational& r) { return r.is_integer() ? "" : "  ≈ " + r.approx() + " (approximate)"; }

// "(= 6 J)" when a registered unit has exactly this dimension.
std::string named_unit(const QuantitySpace& space, const Quantity& q, std::string* name = nullptr) {
  if (q.exponents().is_zero()) return "";
  const NamedQuantity* u = space.unit_for(q.exponents());
  if (!u) return "";
  if (name) *name = u->name;
  return " (= " + (q.measure() / u->value.measure()).str() + " " + u->name + ")";
}

std::string pair_text(const QuantitySpace& space, const Quantity& q) {
  return "(" + q.measure().str() + ", " + space.format_dimension(q.exponents()) + ")";
}

void require_args(const Options& o, std::size_t min, std::size_t max, const std::string& usage) {
  if (o.args.size() < min || o.args.size() > max) throw InputError("usage: qspace " + usage);
}

// ---------------------------------------------------------------------------

int cmd_check(Options& o, std::ostream& out) {
  parse::SpaceDef def = load_space(o);
  require_args(o, 1, 1, "check [SPACE] [--bind NAME=EXPR]... EQUATION");
  const parse::Environment env = environment(def.space, o.binds);
  const std::string& text = o.args.front();
  parse::Equation eq = parse_equation(text);
  parse::HomogeneityReport report;
  try {
    report = parse::check_homogeneity(*eq.lhs, *eq.rhs, env);
  } catch (const parse::UnboundIdentifier& u) {
    throw InputError(u.what() + caret(text, u.span()));
  }
  auto excerpt = [&](parse::Span s) { return text.substr(s.begin, s.end - s.begin); };
  auto term_json = [&](const parse::TermDimension& t) {
    return json{{"text", excerpt(t.span)}, {"span", {t.span.begin, t.span.end}}, {"dimension", exponents_json(t.dimension)}};
  };
  const std::string verdict = report.homogeneous ? "homogeneous" : "heterogeneous";
  if (o.machine) {
    json terms = json::array();
    for (const auto& t : report.terms) terms.push_back(term_json(t));
    json rec{{"command", "check"},
             {"verdict", verdict},
             {"basis", def.space.basis_names()},
             {"lhs", term_json({eq.lhs->span, report.lhs_dimension})},
             {"rhs", term_json({eq.rhs->span, report.rhs_dimension})},
             {"terms", terms},
             {"conflict", nullptr}};
    if (!report.homogeneous)
      rec["conflict"] = json{{"lhs", term_json(*report.conflict_lhs)}, {"rhs", term_json(*report.conflict_rhs)}};
    out << rec.dump() << '\n';
  } else {
    out << verdict << '\n';
    out << "  lhs  " << excerpt(eq.lhs->span) << "  " << dimension_text(def.space, report.lhs_dimension) << '\n';
    out << "  rhs  " << excerpt(eq.rhs->span) << "  " << dimension_text(def.space, report.rhs_dimension) << '\n';
    if (!report.homogeneous) {
      const auto& a = *report.conflict_lhs;
      const auto& b = *report.conflict_rhs;
      out << "  conflict: " << excerpt(a.span) << " [" << a.span.begin << "," << a.span.end << ") has "
          << dimension_text(def.space, a.dimension) << ", " << excerpt(b.span) << " [" << b.span.begin << ","
          << b.span.end << ") has " << dimension_text(def.space, b.dimension) << '\n';
    }
  }
  return report.homogeneous ? kOk : kFailure;
}

int cmd_eval(Options& o, std::ostream& out) {
  parse::SpaceDef def = load_space(o);
  require_args(o, 1, SIZE_MAX, "eval [SPACE] [--bind NAME=EXPR]... EXPR...");
  const parse::Environment env = environment(def.space, o.binds);
  for (const auto& text : o.args) {
    const Quantity q = evaluate(text, env);
    std::string unit;
    const std::string suffix = named_unit(def.space, q, &unit);
    if (o.machine) {
      out << json{{"command", "eval"},
                  {"expr", text},
                  {"value", def.space.format(q)},
                  {"measure", q.measure().str()},
                  {"dimension", exponents_json(q.exponents())},
                  {"basis", def.space.basis_names()},
                  {"unit", unit.empty() ? json(nullptr) : json(unit)}}
                 .dump()
          << '\n';
    } else {
      out << def.space.format(q) << suffix << approximate(q.measure()) << '\n';
    }
  }
  return kOk;
}

int cmd_convert(Options& o, std::ostream& out) {
  parse::SpaceDef def = load_space(o);
  require_args(o, 2, 2, "convert [SPACE] [--bind NAME=EXPR]... EXPR TARGET");
  const parse::Environment env = environment(def.space, o.binds);
  const Quantity source = evaluate(o.args[0], env);
  const Quantity target = evaluate(o.args[1], env);
  if (target.is_zero()) throw NotInvertible("target '" + o.args[1] + "' is zero");
  if (source.exponents() != target.exponents())
    throw Error("dimension mismatch: " + dimension_text(def.space, source.exponents()) + " vs " +
                dimension_text(def.space, target.exponents()));
  const Rational ratio = q_div(source, target).measure();
  if (o.machine) {
    out << json{{"command", "convert"},
                {"expr", o.args[0]},
                {"target", o.args[1]},
                {"measure", ratio.str()},
                {"dimension", exponents_json(source.exponents())}}
               .dump()
        << '\n';
  } else {
    out << ratio.str() << approximate(ratio) << '\n';
  }
  return kOk;
}

int cmd_quotient(Options& o, std::ostream& out) {
  parse::SpaceDef def = load_space(o);
  if (o.sets.empty()) throw InputError("usage: qspace quotient [SPACE] --set CONSTANT|EXPR... [EXPR...]");
  const parse::Environment env = environment(def.space, o.binds);
  // A constant's name or any expression for a nonzero quantity.
  std::vector<Quantity> constants;
  for (const auto& text : o.sets) constants.push_back(evaluate(text, env));
  const QuotientSpace q(def.space, constants);
  const QuantitySpace& qs = q.space();
  std::string joined;
  for (const auto& s : o.sets) joined += (joined.empty() ? "" : ", ") + s + " = 1";
  if (o.machine) {
    out << json{{"command", "quotient"},
                {"set", o.sets},
                {"rank_before", def.space.rank()},
                {"rank_after", qs.rank()},
                {"basis", qs.basis_names()}}
               .dump()
        << '\n';
  } else {
    out << "quotient of " << def.space.name() << " by " << joined << ": rank " << def.space.rank() << " -> "
        << qs.rank() << '\n';
    std::string basis;
    for (const auto& n : qs.basis_names()) basis += " " + n;
    out << "basis:" << (basis.empty() ? " (none)" : basis) << '\n';
  }
  for (const auto& text : o.args) {
    const Quantity image = q.project(evaluate(text, env));
    if (o.machine) {
      out << json{{"command", "quotient"},
                  {"expr", text},
                  {"value", qs.format(image)},
                  {"measure", image.measure().str()},
                  {"dimension", exponents_json(image.exponents())}}
                 .dump()
          << '\n';
    } else {
      out << text << " ↦ " << pair_text(qs, image) << approximate(image.measure()) << '\n';
    }
  }
  return kOk;
}

int cmd_rebase(Options& o, std::ostream& out) {
  parse::SpaceDef def = load_space(o);
  const QuantitySpace& space = def.space;
  if (o.args.size() != space.rank())
    throw InputError("rebase needs exactly " + std::to_string(space.rank()) +
                     " NAME=EXPR definitions (one per basis element), got " + std::to_string(o.args.size()));
  const parse::Environment env = environment(space, o.binds);
  std::vector<std::string> names;
  std::vector<Quantity> elements;
  for (const auto& arg : o.args) {
    auto [name, expr] = split_definition(arg);
    names.push_back(name);
    elements.push_back(evaluate(expr, env));
  }
  const Rebased r = rebase(space, BasisTransform::from_quantities(elements), names);
  const BasisTransform& t = r.transform();
  if (o.machine) {
    std::vector<std::vector<std::string>> matrix(t.rank());
    for (std::size_t i = 0; i < t.rank(); ++i)
      for (std::size_t j = 0; j < t.rank(); ++j) matrix[i].push_back(t.matrix(i, j).get_str());
    std::vector<std::string> scales;
    for (const auto& s : t.scales) scales.push_back(s.str());
    out << json{{"command", "rebase"}, {"basis", names}, {"matrix", matrix}, {"scales", scales}}.dump() << '\n';
  } else {
    std::string from, to, scales;
    for (const auto& n : space.basis_names()) from += " " + n;
    for (const auto& n : names) to += " " + n;
    for (const auto& s : t.scales) scales += " " + s.str();
    out << "rebase " << space.name() << ":" << from << " ->" << to << '\n';
    out << "matrix " << t.matrix.str() << '\n';
    out << "scales" << scales << '\n';
  }
  for (const auto& text : o.tail) {
    const Quantity y = r.recoordinate(evaluate(text, env));
    if (o.machine) {
      out << json{{"command", "rebase"},
                  {"expr", text},
                  {"value", r.space().format(y)},
                  {"measure", y.measure().str()},
                  {"dimension", exponents_json(y.exponents())}}
                 .dump()
          << '\n';
    } else {
      out << text << " ↦ " << r.space().format(y) << "  exponents " << y.exponents().str() << '\n';
    }
  }
  return kOk;
}

// ---------------------------------------------------------------------------

scalable::MonomialSpec instance_spec(const std::string& text) {
  std::vector<long> parts;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      parts.push_back(std::stol(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::logic_error&) {
      throw InputError("instance must be m,N,d with integers, got '" + text + "'");
    }
  }
  if (parts.size() != 3 || parts[0] < 2 || parts[1] < 1 || parts[2] < 0)
    throw InputError("instance must be m,N,d with m >= 2, N >= 1, d >= 0, got '" + text + "'");
  long double size = static_cast<long double>(parts[0]);
  for (long i = 0; i < parts[2]; ++i) size *= static_cast<long double>(parts[1]);
  if (size * size * static_cast<long double>(parts[0]) > static_cast<long double>(scalable::kEvaluationBudget))
    throw SizeGuardExceeded("instance " + text + " is too large for exhaustive checks");
  return {static_cast<std::uint32_t>(parts[0]), static_cast<std::uint32_t>(parts[1]),
          static_cast<std::size_t>(parts[2])};
}

std::string instance_name(const scalable::MonomialSpec& s) {
  return "MonomialInstance(" + std::to_string(s.modulus) + "," + std::to_string(s.exponent_modulus) + "," +
         std::to_string(s.arity) + ")";
}

class LabReport {
 public:
  LabReport(std::ostream& out, bool machine) : out_(out), machine_(machine) {}

  void line(const std::string& text, json record) {
    if (machine_) {
      record["command"] = "lab";
      out_ << record.dump() << '\n';
    } else {
      out_ << text << '\n';
    }
  }

  void check(const std::string& what, bool pass, const std::string& detail = "") {
    ok_ = ok_ && pass;
    line(std::string(pass ? "  pass  " : "  FAIL  ") + what + (detail.empty() ? "" : ": " + detail),
         json{{"check", what}, {"pass", pass}, {"detail", detail}});
  }

  bool ok() const { return ok_; }

 private:
  std::ostream& out_;
  bool machine_;
  bool ok_ = true;
};

int cmd_lab(Options& o, std::ostream& out) {
  if (o.args.size() != 1) throw InputError("usage: qspace lab m,N,d [--units] [--tensor m,N,d]");
  const scalable::MonomialSpec spec = instance_spec(o.args.front());
  const auto x = scalable::monomial_instance(spec);
  LabReport report(out, o.machine);
  report.line(instance_name(spec) + ": " + std::to_string(x.size()) + " elements over Z_" +
                  std::to_string(spec.modulus),
              json{{"instance", instance_name(spec)}, {"elements", x.size()}});

  for (const auto& law : scalable::verify_axioms(x).laws) report.check(law.law, law.pass, law.counterexample);

  const auto classes = scalable::commensurability_classes(x);
  report.line("commensurability classes: " + std::to_string(classes.count), json{{"classes", classes.count}});
  report.check("commensurability is a congruence", scalable::is_congruence(x, classes));
  const auto quotient = scalable::canonical_quotient(x);
  report.line("canonical quotient: " + std::to_string(quotient.monoid.size()) + " classes",
              json{{"quotient_classes", quotient.monoid.size()}});
  report.check("canonical quotient is trivially scalable", quotient.monoid.is_trivially_scalable());

  if (o.units) {
    for (const auto& c : scalable::orbitoids(x)) {
      const auto s = scalable::orbitoid_structure(x, c);
      const std::string name = x.label(s.units.empty() ? c.members.front() : s.units.front());
      std::string labels;
      std::vector<std::string> unit_labels;
      for (auto u : s.units) {
        labels += " " + x.label(u);
        unit_labels.push_back(x.label(u));
      }
      report.line("  orbitoid of " + name + ": " + std::to_string(c.members.size()) +
                      " elements, zero " + x.label(s.zero) + ", " + std::to_string(s.units.size()) + " units:" +
                      labels,
                  json{{"orbitoid", name},
                       {"elements", c.members.size()},
                       {"zero", x.label(s.zero)},
                       {"units", unit_labels}});
    }
  }

  if (!o.tensor.empty()) {
    const scalable::MonomialSpec other = instance_spec(o.tensor);
    const auto y = scalable::monomial_instance(other);
    const auto t = scalable::tensor_product(x, y);
    report.line("tensor with " + instance_name(other) + ": " + std::to_string(t.monoid.size()) + " classes",
                json{{"tensor", instance_name(other)}, {"classes", t.monoid.size()}});
    bool balanced = true;
    for (scalable::Scalar l = 0; l < x.modulus(); ++l)
      for (scalable::Element a = 0; a < x.size(); ++a)
        for (scalable::Element b = 0; b < y.size(); ++b)
          balanced = balanced && t.tensor(x.scale(l, a), b) == t.tensor(a, y.scale(l, b));
    report.check("(l.x)(x)y = x(x)(l.y)", balanced);
    report.check("tensor product satisfies the axioms", scalable::verify_axioms(t.monoid).pass());
    if (other.modulus == spec.modulus && other.exponent_modulus == spec.exponent_modulus) {
      const scalable::MonomialSpec joint{spec.modulus, spec.exponent_modulus, spec.arity + other.arity};
      report.check("tensor is isomorphic to " + instance_name(joint),
                   scalable::isomorphic(t.monoid, scalable::monomial_instance(joint)));
    }
  }
  return report.ok() ? kOk : kFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  auto dash = std::find(args.begin(), args.end(), "--");
  std::vector<std::string> head(args.begin(), dash);
  if (dash != args.end()) o.tail.assign(dash + 1, args.end());

  CLI::App app{"Exact quantity calculus over finitely generated quantity spaces", "qspace"};
  app.require_subcommand(1, 1);
  auto common = [&](CLI::App* sub, const std::string& positional) {
    sub->add_option("--space", o.space_file, "space definition file or bundled space name");
    sub->add_flag("--machine", o.machine, "one JSON record per result");
    sub->add_option("args", o.args, positional);
    return sub;
  };
  auto binds = [&](CLI::App* sub) {
    sub->add_option("--bind", o.binds, "bind NAME=EXPR before evaluating (repeatable)")->allow_extra_args(false);
    return sub;
  };
  CLI::App* check = binds(common(app.add_subcommand("check", "check an equation for dimensional homogeneity"),
                                 "[SPACE] EQUATION"));
  CLI::App* eval = binds(common(app.add_subcommand("eval", "evaluate expressions exactly"), "[SPACE] EXPR..."));
  CLI::App* convert =
      binds(common(app.add_subcommand("convert", "measure of EXPR in units of TARGET"), "[SPACE] EXPR TARGET"));
  CLI::App* quotient = binds(common(app.add_subcommand("quotient", "set constants to 1 and project expressions"),
                                    "[SPACE] EXPR..."));
  quotient->add_option("--set", o.sets, "constant or expression to set to 1 (repeatable)")->allow_extra_args(false);
  CLI::App* rebase_cmd = binds(common(app.add_subcommand("rebase", "change basis; expressions to re-coordinate follow --"),
                                      "[SPACE] NAME=EXPR..."));
  CLI::App* lab = app.add_subcommand("lab", "exhaustive checks on a truncated monomial instance");
  lab->add_flag("--machine", o.machine, "one JSON record per result");
  lab->add_option("args", o.args, "m,N,d");
  lab->add_flag("--units", o.units, "unit-element census per orbitoid");
  lab->add_option("--tensor", o.tensor, "tensor with a second instance m,N,d");

  try {
    std::vector<std::string> reversed(head.rbegin(), head.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  if (!app.got_subcommand(rebase_cmd)) o.args.insert(o.args.end(), o.tail.begin(), o.tail.end());

  try {
    if (app.got_subcommand(check)) return cmd_check(o, out);
    if (app.got_subcommand(eval)) return cmd_eval(o, out);
    if (app.got_subcommand(convert)) return cmd_convert(o, out);
    if (app.got_subcommand(quotient)) return cmd_quotient(o, out);
    if (app.got_subcommand(rebase_cmd)) return cmd_rebase(o, out);
    if (app.got_subcommand(lab)) return cmd_lab(o, out);
  } catch (const InputError& e) {
    err << "qspace: error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "qspace: error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "qspace: error: " << e.what() << '\n';
    return kFailure;
  }
  return kUsage;
}

}  // namespace qcli
