#include "homothety/render.hpp"

#include <sstream>

namespace homothety {

namespace {

// Effective precedence of the printed form: 1 sum, 2 product/division,
// 3 unary minus, 4 power, 5 primary.
int print_prec(const Expr& e) {
  switch (e.kind()) {
    case Kind::Integer:
      return sgn(e.value()) < 0 ? 3 : 5;
    case Kind::Rational:
      return 2;
    case Kind::Sum:
      return 1;
    case Kind::Product:
      return 2;
    case Kind::Negate:
      return 3;
    case Kind::Power:
      return 4;
    default:
      return 5;
  }
}

std::string number_text(const mpq_class& v) {
  std::ostringstream os;
  os << v.get_num();
  if (v.get_den() != 1) os << "/" << v.get_den();
  return os.str();
}

void render_to(std::ostream& os, const Expr& e, int min_prec);

// Argument of a unary minus. Numeric literals are parenthesized so the sign
// is not folded back into the literal on reparse.
void render_negate_arg(std::ostream& os, const Expr& arg) {
  if (arg.is_number()) {
    os << "(" << number_text(arg.value()) << ")";
  } else {
    render_to(os, arg, 4);
  }
}

bool negative_number(const Expr& e) { return e.is_number() && sgn(e.value()) < 0; }

// Product whose first factor is a negative numeric literal; the sign can be
// hoisted in front of the whole term.
bool negative_leading_product(const Expr& e) {
  return e.kind() == Kind::Product && negative_number(e.children().front());
}

void render_product_factors(std::ostream& os, const ExprList& factors);

void render_abs_product(std::ostream& os, const Expr& product) {
  ExprList kids = product.children();
  mpq_class v = kids.front().value();
  kids.front() = Expr::rational(mpq_class(-v));
  render_product_factors(os, kids);
}

// One term of a sum, with its sign already emitted by the caller when
// negative.
void render_sum_term(std::ostream& os, const Expr& term, bool leading) {
  if (term.kind() == Kind::Negate) {
    os << (leading ? "-" : " - ");
    render_negate_arg(os, term.children().front());
  } else if (negative_number(term)) {
    mpq_class v = term.value();
    os << (leading ? "-" : " - ") << number_text(mpq_class(-v));
  } else if (negative_leading_product(term)) {
    os << (leading ? "-" : " - ");
    render_abs_product(os, term);
  } else {
    if (!leading) os << " + ";
    render_to(os, term, 2);
  }
}

bool renders_as_bare_integer(const Expr& e, int required_prec) {
  // True when the printed form ends in a bare integer literal, which would
  // make a following "/k" lex as a rational literal.
  return e.kind() == Kind::Integer && print_prec(e) >= required_prec;
}

void render_product_factors(std::ostream& os, const ExprList& factors) {
  bool prev_bare_int = false;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const Expr& f = factors[i];
    if (i == 0) {
      render_to(os, f, 2);
      prev_bare_int = renders_as_bare_integer(f, 2);
      continue;
    }
    // Division form for x^-1 factors, unless the rational-literal rule of the
    // grammar would reinterpret the quotient.
    if (f.kind() == Kind::Power && f.children()[1].is_integer(-1)) {
      const Expr& base = f.children()[0];
      bool base_bare_int = base.kind() == Kind::Integer && sgn(base.value()) >= 0;
      if (!(prev_bare_int && base_bare_int)) {
        os << "/";
        render_to(os, base, 3);
        prev_bare_int = false;
        continue;
      }
    }
    os << "*";
    render_to(os, f, 3);
    prev_bare_int = renders_as_bare_integer(f, 3);
  }
}

void render_to(std::ostream& os, const Expr& e, int min_prec) {
  if (print_prec(e) < min_prec) {
    os << "(";
    render_to(os, e, 0);
    os << ")";
    return;
  }
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      os << number_text(e.value());
      return;
    case Kind::Symbol:
      os << e.name();
      return;
    case Kind::Sum: {
      const ExprList& kids = e.children();
      for (std::size_t i = 0; i < kids.size(); ++i) render_sum_term(os, kids[i], i == 0);
      return;
    }
    case Kind::Product:
      render_product_factors(os, e.children());
      return;
    case Kind::Power: {
      render_to(os, e.children()[0], 5);
      os << "^";
      render_to(os, e.children()[1], 3);
      return;
    }
    case Kind::Negate:
      os << "-";
      render_negate_arg(os, e.children().front());
      return;
    case Kind::Exp:
    case Kind::Ln:
    case Kind::Sin:
    case Kind::Cos:
    case Kind::Tan:
    case Kind::Cot:
    case Kind::Csc: {
      static const char* names[] = {"exp", "ln", "sin", "cos", "tan", "cot", "csc"};
      os << names[static_cast<int>(e.kind()) - static_cast<int>(Kind::Exp)] << "(";
      render_to(os, e.children().front(), 0);
      os << ")";
      return;
    }
  }
}

}  // namespace

std::string render(const Expr& e) {
  std::ostringstream os;
  render_to(os, e, 0);
  return os.str();
}

}  // namespace homothety
