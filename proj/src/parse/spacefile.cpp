#include <cctype>
#include <map>
#include <sstream>

#include "qcalc/parse.hpp"

namespace qcalc::parse {

SpaceFileError::SpaceFileError(std::size_t line, const std::string& what)
    : ParseError("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

// Drops a '#' comment that is not inside a quoted description.
std::string strip_comment(const std::string& line) {
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') quoted = !quoted;
    if (line[i] == '#' && !quoted) return line.substr(0, i);
  }
  return line;
}

bool is_identifier(const std::string& s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s[0]))) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

void collect_refs(const Expr& e, std::vector<const Expr*>& out) {
  if (e.kind == Expr::Kind::Ref) out.push_back(&e);
  if (e.lhs) collect_refs(*e.lhs, out);
  if (e.rhs) collect_refs(*e.rhs, out);
}

struct PendingDefinition {
  Definition def;
  bool is_unit;
};

}  // namespace

SpaceDef parse_space_file(std::string_view text) {
  SpaceDef out;
  std::map<std::string, std::size_t> declared_at;  // name -> line
  std::vector<PendingDefinition> pending;
  bool have_space = false;

  auto declare = [&](const std::string& name, std::size_t line) {
    if (!is_identifier(name)) throw SpaceFileError(line, "invalid name '" + name + "'");
    if (auto it = declared_at.find(name); it != declared_at.end())
      throw SpaceFileError(line, "duplicate name '" + name + "' (first declared on line " +
                                     std::to_string(it->second) + ")");
    declared_at[name] = line;
  };

  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t line = 0;
  while (std::getline(in, raw)) {
    ++line;
    const std::string content = trim(strip_comment(raw));
    if (content.empty()) continue;
    const std::size_t cut = content.find_first_of(" \t");
    const std::string keyword = content.substr(0, cut);
    const std::string rest = cut == std::string::npos ? "" : trim(std::string_view(content).substr(cut));

    if (!have_space && keyword != "space") throw SpaceFileError(line, "the first declaration must be 'space <name>'");
    if (keyword == "space") {
      if (have_space) throw SpaceFileError(line, "more than one 'space' line");
      if (!is_identifier(rest)) throw SpaceFileError(line, "expected 'space <name>'");
      out.name = rest;
      have_space = true;
    } else if (keyword == "base") {
      const std::size_t q = rest.find('"');
      BaseDecl base{trim(std::string_view(rest).substr(0, q)), ""};
      if (q != std::string::npos) {
        const std::size_t close = rest.find('"', q + 1);
        if (close == std::string::npos || !trim(std::string_view(rest).substr(close + 1)).empty())
          throw SpaceFileError(line, "malformed description; expected base <symbol> \"<description>\"");
        base.description = rest.substr(q + 1, close - q - 1);
      }
      declare(base.symbol, line);
      out.bases.push_back(std::move(base));
    } else if (keyword == "unit" || keyword == "constant") {
      const std::size_t eq = rest.find('=');
      if (eq == std::string::npos) throw SpaceFileError(line, "expected '" + keyword + " <name> = <expr>'");
      Definition def{trim(std::string_view(rest).substr(0, eq)), trim(std::string_view(rest).substr(eq + 1)), line};
      declare(def.name, line);
      pending.push_back({std::move(def), keyword == "unit"});
    } else {
      throw SpaceFileError(line, "unknown declaration '" + keyword + "'");
    }
  }
  if (!have_space) throw SpaceFileError(line == 0 ? 1 : line, "missing 'space <name>' line");

  std::vector<std::string> symbols;
  for (const auto& b : out.bases) symbols.push_back(b.symbol);
  out.space = QuantitySpace::make(out.name, std::move(symbols));
  for (std::size_t i = 0; i < out.bases.size(); ++i) out.space.set_description(i, out.bases[i].description);

  for (auto& p : pending) {
    const Definition& def = p.def;
    ExprPtr expr;
    try {
      expr = parse_expr(def.source);
    } catch (const SyntaxError& e) {
      throw SpaceFileError(def.line, e.what());
    }
    std::vector<const Expr*> refs;
    collect_refs(*expr, refs);
    for (const Expr* r : refs) {
      auto it = declared_at.find(r->name);
      if (it == declared_at.end()) throw SpaceFileError(def.line, "unknown name '" + r->name + "'");
      if (it->second >= def.line)
        throw SpaceFileError(def.line, "forward reference to '" + r->name + "' (declared on line " +
                                           std::to_string(it->second) + ")");
    }
    Quantity value = out.space.one();
    try {
      value = eval(*expr, Environment{&out.space, {}});
    } catch (const Error& e) {
      throw SpaceFileError(def.line, e.what());
    }
    if (p.is_unit) {
      if (value.is_zero()) throw SpaceFileError(def.line, "unit '" + def.name + "' evaluates to zero");
      out.space.define_unit(def.name, value);
      out.units.push_back(def);
    } else {
      out.space.define_constant(def.name, value);
      out.constants.push_back(def);
    }
  }
  return out;
}

}  // namespace qcalc::parse
