#include "homothety/eval.hpp"

#include <cmath>

namespace homothety {

namespace {

constexpr double kPoleTol = 1e-12;

double eval_rec(const Expr& e, const Point& point) {
  switch (e.kind()) {
    case Kind::Integer:
    case Kind::Rational:
      return e.value().get_d();
    case Kind::Symbol: {
      auto it = point.find(e.name());
      if (it == point.end()) throw EvalError("unbound symbol '" + e.name() + "'");
      return it->second;
    }
    case Kind::Sum: {
      double s = 0;
      for (const Expr& kid : e.children()) s += eval_rec(kid, point);
      return s;
    }
    case Kind::Product: {
      double p = 1;
      for (const Expr& kid : e.children()) p *= eval_rec(kid, point);
      return p;
    }
    case Kind::Power: {
      double b = eval_rec(e.children()[0], point);
      const Expr& ex = e.children()[1];
      if (ex.kind() == Kind::Integer && ex.value().get_num().fits_slong_p()) {
        long k = ex.value().get_num().get_si();
        if (b == 0.0 && k < 0) throw EvalError("division by zero");
        return std::pow(b, static_cast<double>(k));
      }
      double x = eval_rec(ex, point);
      if (b == 0.0 && x < 0) throw EvalError("division by zero");
      if (b < 0.0) throw EvalError("negative base with non-integer exponent");
      return std::pow(b, x);
    }
    case Kind::Exp:
      return std::exp(eval_rec(e.children().front(), point));
    case Kind::Ln: {
      double a = eval_rec(e.children().front(), point);
      if (a <= 0.0) throw EvalError("ln of a non-positive value");
      return std::log(a);
    }
    case Kind::Sin:
      return std::sin(eval_rec(e.children().front(), point));
    case Kind::Cos:
      return std::cos(eval_rec(e.children().front(), point));
    case Kind::Tan: {
      double a = eval_rec(e.children().front(), point);
      if (std::fabs(std::cos(a)) < kPoleTol) throw EvalError("tan pole");
      return std::tan(a);
    }
    case Kind::Cot: {
      double a = eval_rec(e.children().front(), point);
      double s = std::sin(a);
      if (std::fabs(s) < kPoleTol) throw EvalError("cot pole");
      return std::cos(a) / s;
    }
    case Kind::Csc: {
      double a = eval_rec(e.children().front(), point);
      double s = std::sin(a);
      if (std::fabs(s) < kPoleTol) throw EvalError("csc pole");
      return 1.0 / s;
    }
    case Kind::Negate:
      return -eval_rec(e.children().front(), point);
  }
  throw EvalError("unreachable expression kind");
}

}  // namespace

double eval_at(const Expr& e, const Point& point) {
  double v = eval_rec(e, point);
  if (!std::isfinite(v)) throw EvalError("non-finite result");
  return v;
}

}  // namespace homothety
