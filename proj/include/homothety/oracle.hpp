#ifndef HOMOTHETY_ORACLE_HPP
#define HOMOTHETY_ORACLE_HPP

#include <cstdint>
#include <vector>

#include "homothety/metric.hpp"
#include "homothety/sample_domain.hpp"

namespace homothety {

struct FdOptions {
  /// Central differences with step rel_step * max(1, |x|); balances
  /// truncation against rounding on the default box.
  double rel_step = 1e-5;
};

/// Central finite difference (e(x+h) - e(x-h)) / 2h in the named symbol.
double fd_derivative(const Expr& e, const std::string& symbol, const Point& point,
                     const FdOptions& opts = {});

/// Christoffel symbols, Ricci tensor and Ricci scalar at a point, assembled
/// from finite-difference metric derivatives only; no symbolic
/// differentiation anywhere in the path.
struct FdCurvature {
  double christoffel[4][4][4];
  double ricci[4][4];
  double ricci_scalar;
};

FdCurvature fd_curvature(const Metric& m, const Point& point, const FdOptions& opts = {});

/// Maximum |value| over n accepted samples; deterministic per seed.
OracleReport sample_max_residual(const std::vector<Expr>& exprs, const SampleDomain& domain,
                                 int n, std::uint64_t seed);
OracleReport sample_max_residual(const Expr& e, const SampleDomain& domain, int n,
                                 std::uint64_t seed);

}  // namespace homothety

#endif  // HOMOTHETY_ORACLE_HPP
