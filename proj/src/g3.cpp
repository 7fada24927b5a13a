#include "homothety/g3.hpp"

#include "homothety/derivative.hpp"
#include "homothety/simplify.hpp"

namespace homothety {

namespace {

struct Coords {
  Expr t, r, theta, phi;
  std::string t_name, r_name, theta_name, phi_name;
};

Coords coords(const Chart& chart) {
  return {Expr::symbol(chart[0]), Expr::symbol(chart[1]), Expr::symbol(chart[2]),
          Expr::symbol(chart[3]), chart[0], chart[1], chart[2], chart[3]};
}

}  // namespace

GFunctions GFunctions::zero() {
  Expr z = Expr::integer(0);
  return {z, z, z, z, z};
}

RotationParams RotationParams::zero() {
  Expr z = Expr::integer(0);
  return {z, z, z};
}

Expr ansatz_mu(const MetricAnsatz& a, const Chart& chart) {
  Coords c = coords(chart);
  return simplify(a.x - 2 * Expr::ln(c.r));
}

void validate_ansatz(const MetricAnsatz& a, const Chart& chart) {
  Coords c = coords(chart);
  for (const Expr* e : {&a.nu, &a.lambda, &a.x}) {
    for (const std::string* ang : {&c.theta_name, &c.phi_name}) {
      if (!differentiate(*e, *ang).is_zero_literal())
        throw MetricError("metric ansatz depends on angular coordinate '" + *ang + "'");
    }
  }
}

Metric metric_from_ansatz(const MetricAnsatz& a, const Chart& chart) {
  validate_ansatz(a, chart);
  Coords c = coords(chart);
  return make_diagonal_metric(
      chart, Expr::exp(a.nu), Expr::negate(Expr::exp(a.lambda)),
      Expr::negate(Expr::exp(a.x)),
      Expr::negate(Expr::exp(a.x) * pow(Expr::sin(c.theta), 2)));
}

VectorField general_homothety(const GFunctions& gf, const RotationParams& rot,
                              const MetricAnsatz& a, const Chart& chart) {
  Coords c = coords(chart);
  Expr mu = ansatz_mu(a, chart);

  auto dt = [&](const Expr& e) { return differentiate(e, c.t_name); };
  auto dr = [&](const Expr& e) { return differentiate(e, c.r_name); };

  Expr sin_th = Expr::sin(c.theta);
  Expr cos_th = Expr::cos(c.theta);
  Expr sin_ph = Expr::sin(c.phi);
  Expr cos_ph = Expr::cos(c.phi);

  Expr h0 = Expr::negate(c.r * c.r * Expr::exp(mu - a.nu) *
                         (sin_th * (dt(gf.g1) * sin_ph - dt(gf.g2) * cos_ph) +
                          dt(gf.g3) * cos_ph)) +
            gf.g4;
  Expr h1 = c.r * c.r * Expr::exp(mu - a.lambda) *
                (sin_th * (dr(gf.g1) * sin_ph - dr(gf.g2) * cos_ph) +
                 dr(gf.g3) * cos_th) +
            gf.g5;
  Expr h2 = Expr::negate(cos_th * (gf.g1 * sin_ph - gf.g2 * cos_ph)) +
            gf.g3 * sin_th + (rot.c1 * sin_ph - rot.c2 * cos_ph);
  Expr h3 = Expr::negate(Expr::csc(c.theta) * (gf.g1 * cos_ph + gf.g2 * sin_ph)) +
            Expr::cot(c.theta) * (rot.c1 * cos_ph + rot.c2 * sin_ph) + rot.c3;

  return make_vector_field(chart, {h0, h1, h2, h3});
}

std::array<Expr, 4> gj_constraint_residuals(const MetricAnsatz& a, const Expr& gj,
                                            bool corrected, const Chart& chart) {
  Coords c = coords(chart);
  auto dt = [&](const Expr& e) { return differentiate(e, c.t_name); };
  auto dr = [&](const Expr& e) { return differentiate(e, c.r_name); };

  Expr gj_t = dt(gj);
  Expr gj_r = dr(gj);
  Expr x_t = dt(a.x);
  Expr x_r = dr(a.x);
  Expr nu_t = dt(a.nu);
  Expr nu_r = dr(a.nu);
  Expr lam_t = dt(a.lambda);
  Expr lam_r = dr(a.lambda);

  Expr r1 = Expr::negate(x_t * Expr::exp(a.x - a.nu) * gj_t) +
            x_r * Expr::exp(a.x - a.lambda) * gj_r + 2 * gj;

  Expr exp_term = nu_r * Expr::exp(a.nu - a.lambda);
  Expr r2 = corrected
                ? 2 * dt(gj_t) + (2 * x_t - nu_t) * gj_t - exp_term * gj_r + 2 * gj_r
                : 2 * dt(gj_t) + (2 * x_t - nu_t) * gj_t - exp_term + 2 * gj_r;

  Expr r3 = 2 * dr(gj_t) + (x_r - nu_r) * gj_t + (x_t - lam_t) * gj_r;

  Expr r4 = 2 * dr(gj_r) + (2 * x_r - lam_r) * gj_r - Expr::exp(a.lambda - a.nu) * gj_t;

  return {simplify(r1), simplify(r2), simplify(r3), simplify(r4)};
}

std::array<Expr, 4> g45_constraint_residuals(const MetricAnsatz& a, const Expr& g4,
                                             const Expr& g5, const Expr& phi0,
                                             const Chart& chart) {
  Coords c = coords(chart);
  auto dt = [&](const Expr& e) { return differentiate(e, c.t_name); };
  auto dr = [&](const Expr& e) { return differentiate(e, c.r_name); };

  Expr r1 = dt(a.x) * g4 + dr(a.x) * g5 - 2 * phi0;
  Expr r2 = 2 * dt(g4) + dt(a.nu) * g4 + dr(a.nu) * g5 - 2 * phi0;
  Expr r3 = Expr::exp(a.nu) * dr(g4) - Expr::exp(a.lambda) * dt(g5);
  Expr r4 = 2 * dr(g5) + dr(a.lambda) * g5 + dt(a.lambda) * g4 - 2 * phi0;

  return {simplify(r1), simplify(r2), simplify(r3), simplify(r4)};
}

std::array<Expr, 4> reduced_residuals(const Expr& nu, const Expr& lambda, const Expr& h,
                                      const Expr& g, const Expr& phi0,
                                      const Chart& chart) {
  (void)phi0;
  Coords c = coords(chart);
  auto dt = [&](const Expr& e) { return differentiate(e, c.t_name); };
  auto dr = [&](const Expr& e) { return differentiate(e, c.r_name); };

  Expr r1 = g - c.r;
  Expr r2 = 2 * dt(h) + dt(nu) * h + dr(nu) * c.r - 2;
  Expr r3 = dr(h);
  Expr r4 = dr(lambda) * c.r + dt(lambda) * h;

  return {simplify(r1), simplify(r2), simplify(r3), simplify(r4)};
}

Metric case1_metric(const Expr& nu, const Chart& chart) {
  Coords c = coords(chart);
  MetricAnsatz a{nu, Expr::integer(0), simplify(2 * Expr::ln(c.r))};
  return metric_from_ansatz(a, chart);
}

VectorField case1_homothety(const Expr& h, const Expr& phi0, const RotationParams& rot,
                            const Chart& chart) {
  Coords c = coords(chart);
  if (h.depends_on(c.r_name) || h.depends_on(c.theta_name) || h.depends_on(c.phi_name)) {
    Expr hs = simplify(h);
    if (hs.depends_on(c.r_name) || hs.depends_on(c.theta_name) ||
        hs.depends_on(c.phi_name))
      throw MetricError("case 1 requires h = h(t)");
  }
  Expr sin_ph = Expr::sin(c.phi);
  Expr cos_ph = Expr::cos(c.phi);
  Expr h0 = phi0 * h;
  Expr h1 = phi0 * c.r;
  Expr h2 = rot.c1 * sin_ph - rot.c2 * cos_ph;
  Expr h3 = Expr::cot(c.theta) * (rot.c1 * cos_ph + rot.c2 * sin_ph) + rot.c3;
  return make_vector_field(chart, {h0, h1, h2, h3});
}

namespace {
void require_nonzero_alpha1(const Case2Params& p, const ZeroOptions& opts) {
  if (is_zero(p.alpha1, opts).is_zero())
    throw std::domain_error("case 2 requires a nonzero separation constant");
}
}  // namespace

Metric case2_metric(const Case2Params& p, const Chart& chart, const ZeroOptions& opts) {
  require_nonzero_alpha1(p, opts);
  Coords c = coords(chart);
  Expr alpha = p.alpha1 * c.t + p.alpha2;
  Expr g00 = pow(c.r, 2 * (p.alpha1 + 1));
  Expr g11 = Expr::negate(pow(c.r, p.m) * pow(alpha, p.m / p.alpha1));
  Expr g22 = Expr::negate(c.r * c.r);
  Expr g33 = Expr::negate(c.r * c.r * pow(Expr::sin(c.theta), 2));
  return make_diagonal_metric(chart, g00, g11, g22, g33);
}

VectorField case2_homothety(const Case2Params& p, const Expr& phi0,
                            const RotationParams& rot, const Chart& chart,
                            const ZeroOptions& opts) {
  require_nonzero_alpha1(p, opts);
  Coords c = coords(chart);
  Expr sin_ph = Expr::sin(c.phi);
  Expr cos_ph = Expr::cos(c.phi);
  Expr h0 = Expr::negate(phi0 * (p.alpha1 * c.t + p.alpha2));
  Expr h1 = phi0 * c.r;
  Expr h2 = rot.c1 * sin_ph - rot.c2 * cos_ph;
  Expr h3 = Expr::cot(c.theta) * (rot.c1 * cos_ph + rot.c2 * sin_ph) + rot.c3;
  return make_vector_field(chart, {h0, h1, h2, h3});
}

std::array<VectorField, 3> so3_generators(const Chart& chart) {
  Coords c = coords(chart);
  Expr z = Expr::integer(0);
  Expr sin_ph = Expr::sin(c.phi);
  Expr cos_ph = Expr::cos(c.phi);
  Expr cot_th = Expr::cot(c.theta);
  VectorField x1 = make_vector_field(chart, {z, z, sin_ph, cot_th * cos_ph});
  VectorField x2 = make_vector_field(chart, {z, z, Expr::negate(cos_ph), cot_th * sin_ph});
  VectorField x3 = make_vector_field(chart, {z, z, z, Expr::integer(1)});
  return {x1, x2, x3};
}

std::array<VectorField, 4> case2_generators(const Case2Params& p, const Chart& chart,
                                            const ZeroOptions& opts) {
  require_nonzero_alpha1(p, opts);
  Coords c = coords(chart);
  Expr z = Expr::integer(0);
  VectorField x0 = make_vector_field(
      chart, {Expr::negate(p.alpha1 * c.t + p.alpha2), c.r, z, z});
  auto rot = so3_generators(chart);
  return {x0, rot[0], rot[1], rot[2]};
}

Expr h_from_lambda(const Expr& lambda, const Chart& chart) {
  Coords c = coords(chart);
  Expr lam_t = differentiate(lambda, c.t_name);
  if (lam_t.is_zero_literal())
    throw std::domain_error("lambda has no time dependence; h = -lambda_r r / lambda_t "
                            "is undefined");
  Expr lam_r = differentiate(lambda, c.r_name);
  return simplify(Expr::negate(lam_r * c.r / lam_t));
}

}  // namespace homothety
