#ifndef HOMOTHETY_CURVATURE_HPP
#define HOMOTHETY_CURVATURE_HPP

#include <array>

#include "homothety/metric.hpp"

namespace homothety {

using Christoffel = std::array<std::array<std::array<Expr, 4>, 4>, 4>;      // [a][b][c]
using Riemann = std::array<std::array<std::array<std::array<Expr, 4>, 4>, 4>, 4>;

struct SingularMetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// All curvature results of one metric. Conventions:
///   Gamma^a_bc = 1/2 g^ad (d_b g_dc + d_c g_db - d_d g_bc)
///   R^a_bcd    = d_c Gamma^a_bd - d_d Gamma^a_bc
///                + Gamma^a_ce Gamma^e_bd - Gamma^a_de Gamma^e_bc
///   R_ab = R^c_acb,  R = g^ab R_ab,  G_ab = R_ab - 1/2 R g_ab.
/// The stress-energy is read off the vacuum-constant field equations,
/// kappa T_ab = G_ab, so kappa T = -R.
struct CurvatureBundle {
  Mat4 inverse;
  Christoffel christoffel;
  Riemann riemann;
  Mat4 ricci;
  Expr ricci_scalar;
  Mat4 einstein;
  Mat4 stress;
  Expr stress_trace;
};

Mat4 metric_inverse(const Metric& m, const ZeroOptions& opts = {});
Christoffel christoffel(const Metric& m, const ZeroOptions& opts = {});
Riemann riemann(const Metric& m, const ZeroOptions& opts = {});
std::pair<Mat4, Expr> ricci(const Metric& m, const ZeroOptions& opts = {});
std::pair<Mat4, Expr> stress_energy(const Metric& m, const ZeroOptions& opts = {});

CurvatureBundle curvature_bundle(const Metric& m, const ZeroOptions& opts = {});

/// Contracted Bianchi residual nabla_a G^{ab}, one expression per b.
std::array<Expr, 4> einstein_divergence(const Metric& m, const CurvatureBundle& bundle);

}  // namespace homothety

#endif  // HOMOTHETY_CURVATURE_HPP
