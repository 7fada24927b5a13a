#include "homothety/substitute.hpp"

#include "homothety/simplify.hpp"

namespace homothety {

namespace {

Expr sub(const Expr& e, const Bindings& b) {
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      return e;
    case Kind::Symbol: {
      auto it = b.find(e.name());
      return it == b.end() ? e : it->second;
    }
    default: {
      ExprList kids;
      kids.reserve(e.children().size());
      bool changed = false;
      for (const Expr& kid : e.children()) {
        kids.push_back(sub(kid, b));
        if (!(kids.back() == kid)) changed = true;
      }
      if (!changed) return e;
      switch (e.kind()) {
        case Kind::Sum: return Expr::sum(std::move(kids));
        case Kind::Product: return Expr::product(std::move(kids));
        case Kind::Power: return Expr::power(kids[0], kids[1]);
        case Kind::Exp: return Expr::exp(kids[0]);
        case Kind::Ln: return Expr::ln(kids[0]);
        case Kind::Sin: return Expr::sin(kids[0]);
        case Kind::Cos: return Expr::cos(kids[0]);
        case Kind::Tan: return Expr::tan(kids[0]);
        case Kind::Cot: return Expr::cot(kids[0]);
        case Kind::Csc: return Expr::csc(kids[0]);
        case Kind::Negate: return Expr::negate(kids[0]);
        default: return e;
      }
    }
  }
}

}  // namespace

Expr substitute(const Expr& e, const Bindings& bindings) {
  return simplify(sub(e, bindings));
}

}  // namespace homothety
