#include "homothety/oracle.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <stdexcept>

namespace homothety {

double fd_derivative(const Expr& e, const std::string& symbol, const Point& point,
                     const FdOptions& opts) {
  auto it = point.find(symbol);
  if (it == point.end()) throw EvalError("fd_derivative: point does not bind '" + symbol + "'");
  double x = it->second;
  double h = opts.rel_step * std::max(1.0, std::fabs(x));
  Point lo = point, hi = point;
  lo[symbol] = x - h;
  hi[symbol] = x + h;
  return (eval_at(e, hi) - eval_at(e, lo)) / (2 * h);
}

namespace {

using Mat = Eigen::Matrix4d;

Mat metric_at(const Metric& m, const Point& p) {
  Mat g;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) g(a, b) = eval_at(m.g[a][b], p);
  return g;
}

// dg[c](a,b) = d_c g_ab by central differences
std::array<Mat, 4> metric_derivatives(const Metric& m, const Point& p,
                                      const FdOptions& opts) {
  std::array<Mat, 4> dg;
  for (int c = 0; c < 4; ++c) {
    const std::string& name = m.chart[c];
    double x = p.at(name);
    double h = opts.rel_step * std::max(1.0, std::fabs(x));
    Point lo = p, hi = p;
    lo[name] = x - h;
    hi[name] = x + h;
    dg[c] = (metric_at(m, hi) - metric_at(m, lo)) / (2 * h);
  }
  return dg;
}

struct Gamma {
  double v[4][4][4];
};

Gamma christoffel_at(const Metric& m, const Point& p, const FdOptions& opts) {
  Mat g = metric_at(m, p);
  double det = g.determinant();
  if (std::fabs(det) < 1e-12) throw EvalError("near-singular metric at sample point");
  Mat inv = g.inverse();
  auto dg = metric_derivatives(m, p, opts);
  Gamma out;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        double s = 0;
        for (int d = 0; d < 4; ++d)
          s += inv(a, d) * (dg[b](d, c) + dg[c](d, b) - dg[d](b, c));
        out.v[a][b][c] = 0.5 * s;
      }
  return out;
}

}  // namespace

FdCurvature fd_curvature(const Metric& m, const Point& point, const FdOptions& opts) {
  for (int c = 0; c < 4; ++c)
    if (point.find(m.chart[c]) == point.end())
      throw EvalError("fd_curvature: point does not bind coordinate '" + m.chart[c] + "'");

  FdCurvature out{};
  Gamma g0 = christoffel_at(m, point, opts);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) out.christoffel[a][b][c] = g0.v[a][b][c];

  // dGamma[c][a][b][d] = d_c Gamma^a_bd, from Christoffels that are
  // themselves finite-difference assemblies.
  double dgamma[4][4][4][4];
  for (int c = 0; c < 4; ++c) {
    const std::string& name = m.chart[c];
    double x = point.at(name);
    double h = opts.rel_step * std::max(1.0, std::fabs(x));
    Point lo = point, hi = point;
    lo[name] = x - h;
    hi[name] = x + h;
    Gamma glo = christoffel_at(m, lo, opts);
    Gamma ghi = christoffel_at(m, hi, opts);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = 0; d < 4; ++d)
          dgamma[c][a][b][d] = (ghi.v[a][b][d] - glo.v[a][b][d]) / (2 * h);
  }

  // R_bd = d_a Gamma^a_bd - d_d Gamma^a_ba + Gamma^a_ae Gamma^e_bd
  //        - Gamma^a_de Gamma^e_ba
  for (int b = 0; b < 4; ++b)
    for (int d = 0; d < 4; ++d) {
      double s = 0;
      for (int a = 0; a < 4; ++a) {
        s += dgamma[a][a][b][d] - dgamma[d][a][b][a];
        for (int e = 0; e < 4; ++e)
          s += g0.v[a][a][e] * g0.v[e][b][d] - g0.v[a][d][e] * g0.v[e][b][a];
      }
      out.ricci[b][d] = s;
    }

  Mat g = metric_at(m, point);
  Mat inv = g.inverse();
  double scalar = 0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) scalar += inv(a, b) * out.ricci[a][b];
  out.ricci_scalar = scalar;
  return out;
}

OracleReport sample_max_residual(const std::vector<Expr>& exprs, const SampleDomain& domain,
                                 int n, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("sample_max_residual needs n >= 1");
  std::set<std::string> symbols;
  for (const Expr& e : exprs)
    for (const std::string& s : e.free_symbols()) symbols.insert(s);

  OracleReport report;
  report.seed = seed;
  std::uint64_t state = seed;
  int accepted = 0;
  long attempts_left = 100L * n;
  while (accepted < n && attempts_left > 0) {
    auto p = domain.sample(symbols, state, 1);
    --attempts_left;
    if (!p) continue;
    bool ok = true;
    double local_max = 0;
    for (const Expr& e : exprs) {
      try {
        local_max = std::max(local_max, std::fabs(eval_at(e, *p)));
      } catch (const EvalError&) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    ++accepted;
    if (local_max >= report.max_abs) {
      report.max_abs = local_max;
      report.worst_point = *p;
    }
  }
  if (accepted < n)
    throw std::runtime_error("sample_max_residual: domain rejected too many samples");
  report.samples = accepted;
  report.max_rel = report.max_abs;  // residuals are measured against zero
  return report;
}

OracleReport sample_max_residual(const Expr& e, const SampleDomain& domain, int n,
                                 std::uint64_t seed) {
  return sample_max_residual(std::vector<Expr>{e}, domain, n, seed);
}

}  // namespace homothety
