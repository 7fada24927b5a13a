#ifndef HOMOTHETY_EVAL_HPP
#define HOMOTHETY_EVAL_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "homothety/expr.hpp"

namespace homothety {

using Point = std::map<std::string, double>;

class EvalError : public std::runtime_error {
 public:
  explicit EvalError(const std::string& message) : std::runtime_error(message) {}
};

/// IEEE double evaluation with every free symbol bound. Throws EvalError on
/// unbound symbols and domain violations (ln of a non-positive value,
/// division by zero, a pole of tan/cot/csc, non-finite results).
double eval_at(const Expr& e, const Point& point);

}  // namespace homothety

#endif  // HOMOTHETY_EVAL_HPP
