#ifndef HOMOTHETY_G3_HPP
#define HOMOTHETY_G3_HPP

#include <array>

#include "homothety/lie.hpp"
#include "homothety/metric.hpp"

namespace homothety {

/// Exponents of ds^2 = e^nu dt^2 - e^lambda dr^2 - e^x dOmega^2, functions of
/// (t, r) only; mu = x - 2 ln r.
struct MetricAnsatz {
  Expr nu;
  Expr lambda;
  Expr x;
};

Expr ansatz_mu(const MetricAnsatz& a, const Chart& chart = Chart::spherical());

/// Checks that nu, lambda, x carry no angular dependence.
void validate_ansatz(const MetricAnsatz& a, const Chart& chart = Chart::spherical());

/// diag(e^nu, -e^lambda, -e^x, -e^x sin^2 theta)
Metric metric_from_ansatz(const MetricAnsatz& a, const Chart& chart = Chart::spherical());

struct GFunctions {
  Expr g1, g2, g3, g4, g5;
  static GFunctions zero();
};

struct RotationParams {
  Expr c1, c2, c3;
  static RotationParams zero();
};

struct Case2Params {
  Expr alpha1;  // separation constant, nonzero
  Expr alpha2;  // integration constant
  Expr m;
};

/// The general homothety candidate built from the g-functions, the rotation
/// constants and the metric ansatz, component by component:
///   H^0 = -r^2 e^(mu-nu) (sin theta (g1_t sin phi - g2_t cos phi) + g3_t cos phi) + g4
///   H^1 =  r^2 e^(mu-lambda) (sin theta (g1_r sin phi - g2_r cos phi) + g3_r cos theta) + g5
///   H^2 = -cos theta (g1 sin phi - g2 cos phi) + g3 sin theta + (c1 sin phi - c2 cos phi)
///   H^3 = -csc theta (g1 cos phi + g2 sin phi) + cot theta (c1 cos phi + c2 sin phi) + c3
VectorField general_homothety(const GFunctions& gf, const RotationParams& rot,
                              const MetricAnsatz& a,
                              const Chart& chart = Chart::spherical());

/// Residuals of the four constraints every g_j (j = 1, 2, 3) must satisfy.
/// The second constraint is implemented in two readings: as printed the
/// exponential term enters alone, which is inconsistent with g_j = 0 being a
/// solution; with corrected=true it multiplies the radial derivative of g_j.
std::array<Expr, 4> gj_constraint_residuals(const MetricAnsatz& a, const Expr& gj,
                                            bool corrected = true,
                                            const Chart& chart = Chart::spherical());

/// Residuals of the constraints on g4, g5:
///   x_t g4 + x_r g5 - 2 phi0
///   2 g4_t + nu_t g4 + nu_r g5 - 2 phi0
///   e^nu g4_r - e^lambda g5_t
///   2 g5_r + lambda_r g5 + lambda_t g4 - 2 phi0
std::array<Expr, 4> g45_constraint_residuals(const MetricAnsatz& a, const Expr& g4,
                                             const Expr& g5, const Expr& phi0,
                                             const Chart& chart = Chart::spherical());

/// Residuals of the reduced system at x = 2 ln r:
///   g - r;  2 h_t + nu_t h + nu_r r - 2;  h_r;  lambda_r r + lambda_t h.
/// The scale constant phi0 divides out of the reduced system; the parameter
/// is accepted for interface parity and does not enter the residuals.
std::array<Expr, 4> reduced_residuals(const Expr& nu, const Expr& lambda, const Expr& h,
                                      const Expr& g, const Expr& phi0,
                                      const Chart& chart = Chart::spherical());

/// ds^2 = e^nu dt^2 - dr^2 - r^2 dOmega^2
Metric case1_metric(const Expr& nu, const Chart& chart = Chart::spherical());

/// H = phi0 (h(t) d_t + r d_r) + rotation part.
VectorField case1_homothety(const Expr& h, const Expr& phi0, const RotationParams& rot,
                            const Chart& chart = Chart::spherical());

/// ds^2 = r^(2(a1+1)) dt^2 - r^m (a1 t + a2)^(m/a1) dr^2 - r^2 dOmega^2
Metric case2_metric(const Case2Params& p, const Chart& chart = Chart::spherical(),
                    const ZeroOptions& opts = {});

/// H = -phi0 (a1 t + a2) d_t + phi0 r d_r + rotation part.
VectorField case2_homothety(const Case2Params& p, const Expr& phi0,
                            const RotationParams& rot,
                            const Chart& chart = Chart::spherical(),
                            const ZeroOptions& opts = {});

/// X0 = -(a1 t + a2) d_t + r d_r plus the three rotation generators.
std::array<VectorField, 4> case2_generators(const Case2Params& p,
                                            const Chart& chart = Chart::spherical(),
                                            const ZeroOptions& opts = {});

/// The three rotation generators as vector fields (Killing for every metric
/// of the spherically symmetric form).
std::array<VectorField, 3> so3_generators(const Chart& chart = Chart::spherical());

/// h(t, r) = -lambda_r r / lambda_t; rejects lambda_t symbolically zero.
Expr h_from_lambda(const Expr& lambda, const Chart& chart = Chart::spherical());

}  // namespace homothety

#endif  // HOMOTHETY_G3_HPP
