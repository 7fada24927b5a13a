#ifndef HOMOTHETY_DERIVATIVE_HPP
#define HOMOTHETY_DERIVATIVE_HPP

#include <string>

#include "homothety/expr.hpp"

namespace homothety {

/// Exact partial derivative with respect to the named symbol; the result is
/// simplified.
Expr differentiate(const Expr& e, const std::string& symbol);

}  // namespace homothety

#endif  // HOMOTHETY_DERIVATIVE_HPP
