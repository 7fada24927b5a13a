#include "homothety/parse.hpp"

#include <cctype>
#include <optional>
#include <utility>

namespace homothety {

namespace {

enum class Tok { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t offset;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return cur_; }
  const Token& peek2() {
    if (!next_) next_ = lex();
    return *next_;
  }
  Token take() {
    Token t = cur_;
    advance();
    return t;
  }

 private:
  void advance() {
    if (next_) {
      cur_ = *next_;
      next_.reset();
    } else {
      cur_ = lex();
    }
  }

  Token lex() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    std::size_t start = pos_;
    if (pos_ >= s_.size()) return {Tok::End, "", start};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (pos_ < s_.size() && s_[pos_] == '.') {
        ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw ParseError("digit expected after decimal point", pos_);
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
      return {Tok::Number, s_.substr(start, pos_ - start), start};
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Tok::Ident, s_.substr(start, pos_ - start), start};
    }
    ++pos_;
    switch (c) {
      case '+': return {Tok::Plus, "+", start};
      case '-': return {Tok::Minus, "-", start};
      case '*': return {Tok::Star, "*", start};
      case '/': return {Tok::Slash, "/", start};
      case '^': return {Tok::Caret, "^", start};
      case '(': return {Tok::LParen, "(", start};
      case ')': return {Tok::RParen, ")", start};
      case ',': return {Tok::Comma, ",", start};
      default: throw ParseError(std::string("unexpected character '") + c + "'", start);
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token cur_{Tok::End, "", 0};
  std::optional<Token> next_;
};

Expr number_from_text(const std::string& text) {
  auto dot = text.find('.');
  if (dot == std::string::npos) return Expr::integer(mpz_class(text));
  std::string digits = text.substr(0, dot) + text.substr(dot + 1);
  std::size_t frac_digits = text.size() - dot - 1;
  mpz_class num(digits);
  mpz_class den = 1;
  for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
  return Expr::rational(mpq_class(num, den));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : lex_(s) {}

  Expr run() {
    Expr e = parse_sum();
    if (lex_.peek().kind != Tok::End)
      throw ParseError("unexpected trailing input", lex_.peek().offset);
    return e;
  }

 private:
  // Result of a unary/primary parse: the node plus whether it is a bare
  // (possibly sign-folded) integer literal, which feeds the p/q rule.
  struct Factor {
    Expr expr;
    bool bare_integer;
  };

  Expr parse_sum() {
    ExprList terms;
    terms.push_back(parse_term());
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Plus) {
        lex_.take();
        terms.push_back(parse_term());
      } else if (k == Tok::Minus) {
        lex_.take();
        terms.push_back(negated_term());
      } else {
        break;
      }
    }
    return terms.size() == 1 ? terms.front() : Expr::sum(std::move(terms));
  }

  // A '-' at sum level folds into a leading numeric literal of the following
  // term; otherwise it wraps the term in a negate node.
  Expr negated_term() {
    if (lex_.peek().kind == Tok::Number && lex_.peek2().kind != Tok::Caret)
      return parse_term_negative_literal();
    return Expr::negate(parse_term());
  }

  Expr parse_term_negative_literal() {
    Token num = lex_.take();
    Expr lit = number_from_text(num.text);
    return parse_term_tail(Factor{negate_literal(lit), lit.kind() == Kind::Integer});
  }

  static Expr negate_literal(const Expr& lit) {
    mpq_class v = lit.value();
    return Expr::rational(mpq_class(-v));
  }

  Expr parse_term() { return parse_term_tail(parse_unary()); }

  Expr parse_term_tail(Factor lead) {
    ExprList factors;
    factors.push_back(lead.expr);
    bool last_bare_int = lead.bare_integer;
    while (true) {
      Tok k = lex_.peek().kind;
      if (k == Tok::Star) {
        lex_.take();
        Factor f = parse_unary();
        factors.push_back(f.expr);
        last_bare_int = f.bare_integer;
      } else if (k == Tok::Slash) {
        lex_.take();
        Factor f = parse_unary();
        if (last_bare_int && f.bare_integer && f.expr.value() != 0) {
          // Exact rational literal p/q.
          mpq_class q(factors.back().value().get_num(), f.expr.value().get_num());
          factors.back() = Expr::rational(std::move(q));
        } else {
          factors.push_back(Expr::power(f.expr, Expr::integer(-1)));
        }
        last_bare_int = false;
      } else {
        break;
      }
    }
    return factors.size() == 1 ? factors.front() : Expr::product(std::move(factors));
  }

  Factor parse_unary() {
    Tok k = lex_.peek().kind;
    if (k == Tok::Plus) {
      lex_.take();
      return parse_unary();
    }
    if (k == Tok::Minus) {
      lex_.take();
      // Fold the sign into a directly following numeric literal unless a '^'
      // binds tighter to it.
      if (lex_.peek().kind == Tok::Number && lex_.peek2().kind != Tok::Caret) {
        Token num = lex_.take();
        Expr lit = number_from_text(num.text);
        return Factor{negate_literal(lit), lit.kind() == Kind::Integer};
      }
      Factor f = parse_unary();
      return Factor{Expr::negate(f.expr), false};
    }
    return parse_power();
  }

  Factor parse_power() {
    Factor base = parse_primary();
    if (lex_.peek().kind == Tok::Caret) {
      lex_.take();
      Factor e = parse_unary();  // right-associative; allows 2^-3 and a^b^c
      return Factor{Expr::power(base.expr, e.expr), false};
    }
    return base;
  }

  Factor parse_primary() {
    Token t = lex_.take();
    switch (t.kind) {
      case Tok::Number: {
        Expr lit = number_from_text(t.text);
        return Factor{lit, lit.kind() == Kind::Integer};
      }
      case Tok::Ident: {
        if (lex_.peek().kind == Tok::LParen) {
          lex_.take();
          Expr arg = parse_sum();
          expect(Tok::RParen, "')'");
          return Factor{apply_function(t, std::move(arg)), false};
        }
        return Factor{Expr::symbol(t.text), false};
      }
      case Tok::LParen: {
        Expr e = parse_sum();
        expect(Tok::RParen, "')'");
        return Factor{e, false};
      }
      default:
        throw ParseError("expected a number, identifier or '('", t.offset);
    }
  }

  Expr apply_function(const Token& name, Expr arg) {
    const std::string& f = name.text;
    if (f == "exp") return Expr::exp(std::move(arg));
    if (f == "ln") return Expr::ln(std::move(arg));
    if (f == "sin") return Expr::sin(std::move(arg));
    if (f == "cos") return Expr::cos(std::move(arg));
    if (f == "tan") return Expr::tan(std::move(arg));
    if (f == "cot") return Expr::cot(std::move(arg));
    if (f == "csc") return Expr::csc(std::move(arg));
    if (f == "sqrt") return Expr::power(std::move(arg), Expr::rational(1, 2));
    throw ParseError("unknown function '" + f + "'", name.offset);
  }

  void expect(Tok k, const std::string& what) {
    if (lex_.peek().kind != k)
      throw ParseError("expected " + what, lex_.peek().offset);
    lex_.take();
  }

  Lexer lex_;
};

}  // namespace

Expr parse(const std::string& text) {
  Parser p(text);
  return p.run();
}

}  // namespace homothety
