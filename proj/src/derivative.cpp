#include "homothety/derivative.hpp"

#include "homothety/simplify.hpp"

namespace homothety {

namespace {

Expr d(const Expr& e, const std::string& s) {
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      return Expr::integer(0);
    case Kind::Symbol:
      return Expr::integer(e.name() == s ? 1 : 0);
    case Kind::Sum: {
      ExprList kids;
      for (const Expr& kid : e.children()) kids.push_back(d(kid, s));
      return Expr::sum(std::move(kids));
    }
    case Kind::Product: {
      const ExprList& kids = e.children();
      ExprList terms;
      for (std::size_t i = 0; i < kids.size(); ++i) {
        ExprList factors = kids;
        factors[i] = d(kids[i], s);
        terms.push_back(Expr::product(std::move(factors)));
      }
      return Expr::sum(std::move(terms));
    }
    case Kind::Power: {
      const Expr& b = e.children()[0];
      const Expr& x = e.children()[1];
      if (!x.depends_on(s)) {
        // x * b^(x-1) * b'
        return x * Expr::power(b, x - 1) * d(b, s);
      }
      if (!b.depends_on(s)) {
        return e * Expr::ln(b) * d(x, s);
      }
      // generalized power rule: b^x (x' ln b + x b'/b)
      return e * (d(x, s) * Expr::ln(b) + x * d(b, s) / b);
    }
    case Kind::Exp:
      return e * d(e.children().front(), s);
    case Kind::Ln:
      return d(e.children().front(), s) / e.children().front();
    case Kind::Sin:
      return Expr::cos(e.children().front()) * d(e.children().front(), s);
    case Kind::Cos:
      return Expr::negate(Expr::sin(e.children().front())) * d(e.children().front(), s);
    case Kind::Tan: {
      const Expr& a = e.children().front();
      return d(a, s) / Expr::power(Expr::cos(a), Expr::integer(2));
    }
    case Kind::Cot: {
      const Expr& a = e.children().front();
      return Expr::negate(d(a, s) / Expr::power(Expr::sin(a), Expr::integer(2)));
    }
    case Kind::Csc: {
      const Expr& a = e.children().front();
      return Expr::negate(Expr::csc(a) * Expr::cot(a) * d(a, s));
    }
    case Kind::Negate:
      return Expr::negate(d(e.children().front(), s));
  }
  return Expr::integer(0);
}

}  // namespace

Expr differentiate(const Expr& e, const std::string& symbol) {
  return simplify(d(simplify(e), symbol));
}

}  // namespace homothety
