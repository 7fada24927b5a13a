#ifndef HOMOTHETY_SUBSTITUTE_HPP
#define HOMOTHETY_SUBSTITUTE_HPP

#include <map>
#include <string>

#include "homothety/expr.hpp"

namespace homothety {

using Bindings = std::map<std::string, Expr>;

/// Simultaneous substitution of symbols, followed by simplification.
Expr substitute(const Expr& e, const Bindings& bindings);

}  // namespace homothety

#endif  // HOMOTHETY_SUBSTITUTE_HPP
