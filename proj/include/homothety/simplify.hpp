#ifndef HOMOTHETY_SIMPLIFY_HPP
#define HOMOTHETY_SIMPLIFY_HPP

#include "homothety/expr.hpp"

namespace homothety {

/// Canonical simplification. Idempotent; preserves value on the evaluation
/// domain (all sampling boxes are positive). The rewrite set is fixed:
/// constant folding; flattening and deterministic operand ordering; like-term
/// collection over a common denominator; power laws on common bases, with the
/// integer part of symbolic exponents split off canonically; exp/ln inverse
/// pairs, including exp(c*ln(u)) -> u^c; sin^2+cos^2 -> 1 via elimination of
/// even cosine powers; tan, cot and csc normalized to sin/cos ratios.
Expr simplify(const Expr& e);

}  // namespace homothety

#endif  // HOMOTHETY_SIMPLIFY_HPP
