#pragma once

// Quantity expressions, equations and space-definition files.

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qcalc/errors.hpp"
#include "qcalc/qspace.hpp"
#include "qcalc/scalars.hpp"

namespace qcalc::parse {

/// Half-open byte range [begin, end) in the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(Span, Span) = default;
};

/// Parse failure at a known position.
class SyntaxError : public ParseError {
 public:
  SyntaxError(const std::string& what, Span span);
  Span span() const noexcept { return span_; }

 private:
  Span span_;
};

class UnboundIdentifier : public Error {
 public:
  UnboundIdentifier(std::string name, Span span);
  const std::string& name() const noexcept { return name_; }
  Span span() const noexcept { return span_; }

 private:
  std::string name_;
  Span span_;
};

/// Incommensurable operands of a sum, with their source spans.
class IncommensurableTerms : public Incommensurable {
 public:
  IncommensurableTerms(ExponentVector lhs, ExponentVector rhs, Span lhs_span, Span rhs_span);
  Span lhs_span() const noexcept { return lhs_span_; }
  Span rhs_span() const noexcept { return rhs_span_; }

 private:
  Span lhs_span_, rhs_span_;
};

// ---------------------------------------------------------------------------
// Lexing

enum class TokenKind { Number, Identifier, Plus, Minus, Star, Slash, Caret, LParen, RParen, Equals, End };

struct Token {
  TokenKind kind;
  std::string lexeme;
  Span span;
};

/// Longest-match lexing. A '-' directly after '^' and before a digit is part
/// of the number ("T^-1" gives '^' then -1). The result ends with an End token.
std::vector<Token> tokenize(std::string_view text);

// ---------------------------------------------------------------------------
// Syntax trees

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct Expr {
  enum class Kind { Number, Ref, Neg, Add, Sub, Mul, Div, Pow };

  Kind kind;
  Span span;
  Rational number;             // Number
  std::string name;            // Ref
  std::int64_t exponent = 0;   // Pow
  ExprPtr lhs;                 // Neg, binary operators, Pow base
  ExprPtr rhs;                 // binary operators

  static ExprPtr make_number(Rational value, Span span = {});
  static ExprPtr make_ref(std::string name, Span span = {});
  static ExprPtr make_neg(ExprPtr operand, Span span = {});
  static ExprPtr make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs, Span span = {});
  static ExprPtr make_pow(ExprPtr base, std::int64_t exponent, Span span = {});
};

/// Same shape, operators, literals and names; spans are ignored.
bool same_structure(const Expr& a, const Expr& b);

struct Equation {
  ExprPtr lhs;
  ExprPtr rhs;
};

ExprPtr parse_expr(std::string_view text);
/// Exactly one '=' at the top level.
Equation parse_equation(std::string_view text);

/// Minimal-parenthesis rendering that parses back to the same tree. Number
/// literals must be terminating decimals.
std::string print(const Expr& e);

// ---------------------------------------------------------------------------
// Evaluation

/// Identifiers resolve to explicit bindings first, then to the space's basis
/// symbols, units and constants.
struct Environment {
  const QuantitySpace* space = nullptr;
  std::map<std::string, Quantity> bindings;

  std::optional<Quantity> lookup(const std::string& name) const;
};

Quantity eval(const Expr& e, const Environment& env);

struct TermDimension {
  Span span;
  ExponentVector dimension;
};

struct HomogeneityReport {
  bool homogeneous = true;
  ExponentVector lhs_dimension;
  ExponentVector rhs_dimension;
  /// Every Add/Sub operand and both equation sides, in evaluation order.
  std::vector<TermDimension> terms;
  /// The first pair of operands with unequal dimensions.
  std::optional<TermDimension> conflict_lhs;
  std::optional<TermDimension> conflict_rhs;
};

/// Dimension-only evaluation: measures are never inspected.
HomogeneityReport check_homogeneity(const Expr& lhs, const Expr& rhs, const Environment& env);

// ---------------------------------------------------------------------------
// Space files

struct BaseDecl {
  std::string symbol;
  std::string description;
};

struct Definition {
  std::string name;
  std::string source;  // expression text
  std::size_t line = 0;
};

struct SpaceDef {
  std::string name;
  std::vector<BaseDecl> bases;
  std::vector<Definition> units;
  std::vector<Definition> constants;
  /// The evaluated space.
  QuantitySpace space = QuantitySpace::make("", {});
};

/// Failure in a space file; the message starts with "line N: ".
class SpaceFileError : public ParseError {
 public:
  SpaceFileError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

SpaceDef parse_space_file(std::string_view text);

}  // namespace qcalc::parse
