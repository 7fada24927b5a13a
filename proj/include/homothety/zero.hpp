#ifndef HOMOTHETY_ZERO_HPP
#define HOMOTHETY_ZERO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "homothety/expr.hpp"
#include "homothety/sample_domain.hpp"

namespace homothety {

struct Witness {
  Point point;
  double value = 0;
};

struct ZeroVerdict {
  enum class Kind { SymbolicZero, NumericZero, NonZero };
  Kind kind;
  std::optional<Witness> witness;  // set for NonZero

  bool is_zero() const { return kind != Kind::NonZero; }
  bool symbolic() const { return kind == Kind::SymbolicZero; }
  std::string tier() const {
    switch (kind) {
      case Kind::SymbolicZero: return "symbolic";
      case Kind::NumericZero: return "numeric";
      default: return "witness";
    }
  }
};

struct ZeroOptions {
  std::uint64_t seed = 42;
  int samples = 16;
  double tolerance = 1e-9;
  SampleDomain domain;
};

/// Hybrid zero decision: symbolically zero when the canonical form is the 0
/// literal; otherwise the expression is sampled on the domain box and judged
/// numerically. Domain-violating sample points are resampled.
ZeroVerdict is_zero(const Expr& e, const ZeroOptions& options = {});

}  // namespace homothety

#endif  // HOMOTHETY_ZERO_HPP
