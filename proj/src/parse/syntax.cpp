#include <cctype>
#include <limits>

#include "qcalc/parse.hpp"

namespace qcalc::parse {

SyntaxError::SyntaxError(const std::string& what, Span span)
    : ParseError(what + " at byte " + std::to_string(span.begin)), span_(span) {}

UnboundIdentifier::UnboundIdentifier(std::string name, Span span)
    : Error("unbound identifier '" + name + "' at byte " + std::to_string(span.begin)),
      name_(std::move(name)),
      span_(span) {}

IncommensurableTerms::IncommensurableTerms(ExponentVector lhs, ExponentVector rhs, Span lhs_span, Span rhs_span)
    : Incommensurable(std::move(lhs), std::move(rhs)), lhs_span_(lhs_span), rhs_span_(rhs_span) {}

// ---------------------------------------------------------------------------

namespace {

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }
bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }

// Length of the decimal literal starting at `pos`, 0 if none.
std::size_t number_length(std::string_view text, std::size_t pos) {
  std::size_t i = pos;
  while (i < text.size() && is_digit(text[i])) ++i;
  if (i == pos) return 0;
  if (i + 1 < text.size() && text[i] == '.' && is_digit(text[i + 1])) {
    i += 2;
    while (i < text.size() && is_digit(text[i])) ++i;
  }
  if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
    std::size_t j = i + 1;
    if (j < text.size() && (text[j] == '+' || text[j] == '-')) ++j;
    if (j < text.size() && is_digit(text[j])) {
      while (j < text.size() && is_digit(text[j])) ++j;
      i = j;
    }
  }
  return i - pos;
}

}  // namespace

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto push = [&](TokenKind kind, std::size_t length) {
    out.push_back({kind, std::string(text.substr(i, length)), {i, i + length}});
    i += length;
  };
  while (i < text.size()) {
    const char c = text[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (is_digit(c)) {
      push(TokenKind::Number, number_length(text, i));
    } else if (c == '-' && !out.empty() && out.back().kind == TokenKind::Caret && i + 1 < text.size() &&
               is_digit(text[i + 1])) {
      push(TokenKind::Number, 1 + number_length(text, i + 1));
    } else if (is_letter(c)) {
      std::size_t j = i + 1;
      while (j < text.size() && (is_letter(text[j]) || is_digit(text[j]) || text[j] == '_')) ++j;
      push(TokenKind::Identifier, j - i);
    } else {
      TokenKind kind;
      switch (c) {
        case '+': kind = TokenKind::Plus; break;
        case '-': kind = TokenKind::Minus; break;
        case '*': kind = TokenKind::Star; break;
        case '/': kind = TokenKind::Slash; break;
        case '^': kind = TokenKind::Caret; break;
        case '(': kind = TokenKind::LParen; break;
        case ')': kind = TokenKind::RParen; break;
        case '=': kind = TokenKind::Equals; break;
        default: throw SyntaxError(std::string("illegal character '") + c + "'", {i, i + 1});
      }
      push(kind, 1);
    }
  }
  out.push_back({TokenKind::End, "", {text.size(), text.size()}});
  return out;
}

// ---------------------------------------------------------------------------

ExprPtr Expr::make_number(Rational value, Span span) {
  auto e = std::make_unique<Expr>(Expr{Kind::Number, span, std::move(value), {}, 0, nullptr, nullptr});
  return e;
}

ExprPtr Expr::make_ref(std::string name, Span span) {
  return std::make_unique<Expr>(Expr{Kind::Ref, span, {}, std::move(name), 0, nullptr, nullptr});
}

ExprPtr Expr::make_neg(ExprPtr operand, Span span) {
  return std::make_unique<Expr>(Expr{Kind::Neg, span, {}, {}, 0, std::move(operand), nullptr});
}

ExprPtr Expr::make_binary(Kind kind, ExprPtr lhs, ExprPtr rhs, Span span) {
  return std::make_unique<Expr>(Expr{kind, span, {}, {}, 0, std::move(lhs), std::move(rhs)});
}

ExprPtr Expr::make_pow(ExprPtr base, std::int64_t exponent, Span span) {
  return std::make_unique<Expr>(Expr{Kind::Pow, span, {}, {}, exponent, std::move(base), nullptr});
}

bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case Expr::Kind::Number: return a.number == b.number;
    case Expr::Kind::Ref: return a.name == b.name;
    case Expr::Kind::Neg: return same_structure(*a.lhs, *b.lhs);
    case Expr::Kind::Pow: return a.exponent == b.exponent && same_structure(*a.lhs, *b.lhs);
    default: return same_structure(*a.lhs, *b.lhs) && same_structure(*a.rhs, *b.rhs);
  }
}

// ---------------------------------------------------------------------------

namespace {

std::string describe(const Token& t) { return t.kind == TokenKind::End ? "end of input" : "'" + t.lexeme + "'"; }

std::int64_t checked_power(std::int64_t base, std::int64_t exponent, Span span) {
  if (exponent < 0) throw SyntaxError("non-integer exponent", span);
  std::int64_t out = 1;
  for (std::int64_t i = 0; i < exponent; ++i)
    if (__builtin_mul_overflow(out, base, &out)) throw SyntaxError("exponent overflows", span);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : tokens_(tokenize(text)) {}

  ExprPtr expression(int min_prec = 1) {
    ExprPtr lhs = unary();
    for (;;) {
      const Token& t = peek();
      int prec;
      Expr::Kind kind;
      switch (t.kind) {
        case TokenKind::Plus: prec = 1; kind = Expr::Kind::Add; break;
        case TokenKind::Minus: prec = 1; kind = Expr::Kind::Sub; break;
        case TokenKind::Star: prec = 2; kind = Expr::Kind::Mul; break;
        case TokenKind::Slash: prec = 2; kind = Expr::Kind::Div; break;
        default: return lhs;
      }
      if (prec < min_prec) return lhs;
      next();
      ExprPtr rhs = expression(prec + 1);
      const Span span{lhs->span.begin, rhs->span.end};
      lhs = Expr::make_binary(kind, std::move(lhs), std::move(rhs), span);
    }
  }

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void expect(TokenKind kind, const std::string& what) {
    if (peek().kind != kind) throw SyntaxError("expected " + what + ", found " + describe(peek()), peek().span);
    next();
  }

 private:
  ExprPtr unary() {
    if (peek().kind == TokenKind::Minus) {
      const std::size_t begin = next().span.begin;
      ExprPtr operand = unary();
      const Span span{begin, operand->span.end};
      return Expr::make_neg(std::move(operand), span);
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (peek().kind != TokenKind::Caret) return base;
    next();
    std::size_t end = 0;
    const std::int64_t k = exponent_chain(end);
    const Span span{base->span.begin, end};
    return Expr::make_pow(std::move(base), k, span);
  }

  // Right-associative: x^a^b = x^(a^b), every operand a literal integer.
  std::int64_t exponent_chain(std::size_t& end) {
    const std::int64_t k = exponent_literal(end);
    if (peek().kind != TokenKind::Caret) return k;
    const Span at = next().span;
    return checked_power(k, exponent_chain(end), at);
  }

  std::int64_t exponent_literal(std::size_t& end) {
    const Token& t = peek();
    if (t.kind == TokenKind::LParen) {
      next();
      const std::int64_t k = exponent_literal(end);
      end = peek().span.end;
      expect(TokenKind::RParen, "')'");
      return k;
    }
    if (t.kind == TokenKind::Minus) {
      next();
      return -exponent_literal(end);
    }
    if (t.kind != TokenKind::Number) throw SyntaxError("exponent must be an integer literal", t.span);
    const Rational value = rational_from_decimal(t.lexeme);
    if (!value.is_integer() || !value.numerator().fits_slong_p())
      throw SyntaxError("non-integer exponent " + t.lexeme, t.span);
    end = t.span.end;
    next();
    return value.numerator().get_si();
  }

  ExprPtr primary() {
    const Token& t = peek();
    switch (t.kind) {
      case TokenKind::Number:
        next();
        return Expr::make_number(rational_from_decimal(t.lexeme), t.span);
      case TokenKind::Identifier:
        next();
        return Expr::make_ref(t.lexeme, t.span);
      case TokenKind::LParen: {
        const std::size_t begin = next().span.begin;
        ExprPtr inner = expression();
        const std::size_t end = peek().span.end;
        expect(TokenKind::RParen, "')'");
        inner->span = {begin, end};
        return inner;
      }
      default: throw SyntaxError("expected an operand, found " + describe(t), t.span);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse_expr(std::string_view text) {
  Parser p(text);
  ExprPtr e = p.expression();
  if (p.peek().kind != TokenKind::End) throw SyntaxError("unexpected " + describe(p.peek()), p.peek().span);
  return e;
}

Equation parse_equation(std::string_view text) {
  Parser p(text);
  Equation eq;
  eq.lhs = p.expression();
  if (p.peek().kind == TokenKind::End) throw SyntaxError("missing '=' in equation", p.peek().span);
  p.expect(TokenKind::Equals, "'='");
  eq.rhs = p.expression();
  if (p.peek().kind != TokenKind::End) throw SyntaxError("unexpected " + describe(p.peek()), p.peek().span);
  return eq;
}

// ---------------------------------------------------------------------------

namespace {

std::string decimal(const Rational& r) {
  if (r.is_integer()) return r.str();
  BigInt den = r.denominator();
  std::size_t twos = 0, fives = 0;
  while (den % 2 == 0) { den /= 2; ++twos; }
  while (den % 5 == 0) { den /= 5; ++fives; }
  if (den != 1) throw InvalidArgument(r.str() + " has no terminating decimal form");
  const std::size_t places = std::max(twos, fives);
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, places);
  BigInt scaled = abs(r.numerator()) * scale / r.denominator();
  std::string digits = scaled.get_str();
  if (digits.size() <= places) digits.insert(0, places + 1 - digits.size(), '0');
  digits.insert(digits.size() - places, ".");
  return (r.sign() < 0 ? "-" : "") + digits;
}

int precedence(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    case Expr::Kind::Number: return e.number.sign() < 0 ? 3 : 5;
    default: return 5;
  }
}

std::string render(const Expr& e, int needed);

std::string render_node(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Number: return decimal(e.number);
    case Expr::Kind::Ref: return e.name;
    case Expr::Kind::Neg: return "-" + render(*e.lhs, 3);
    case Expr::Kind::Pow: return render(*e.lhs, 5) + "^" + std::to_string(e.exponent);
    case Expr::Kind::Add: return render(*e.lhs, 1) + " + " + render(*e.rhs, 2);
    case Expr::Kind::Sub: return render(*e.lhs, 1) + " - " + render(*e.rhs, 2);
    case Expr::Kind::Mul: return render(*e.lhs, 2) + " * " + render(*e.rhs, 3);
    case Expr::Kind::Div: return render(*e.lhs, 2) + " / " + render(*e.rhs, 3);
  }
  return {};
}

std::string render(const Expr& e, int needed) {
  std::string s = render_node(e);
  return precedence(e) < needed ? "(" + s + ")" : s;
}

}  // namespace

std::string print(const Expr& e) { return render(e, 0); }

}  // namespace qcalc::parse
