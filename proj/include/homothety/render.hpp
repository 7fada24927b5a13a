#ifndef HOMOTHETY_RENDER_HPP
#define HOMOTHETY_RENDER_HPP

#include <string>

#include "homothety/expr.hpp"

namespace homothety {

/// Prints an expression in the input grammar. parse(render(e)) rebuilds a
/// structurally identical tree.
std::string render(const Expr& e);

}  // namespace homothety

#endif  // HOMOTHETY_RENDER_HPP
