#include "homothety/curvature.hpp"

#include "homothety/derivative.hpp"
#include "homothety/simplify.hpp"

namespace homothety {

namespace {

Expr det3(const Mat4& g, const std::array<int, 3>& rows, const std::array<int, 3>& cols) {
  auto e = [&](int i, int j) { return g[rows[i]][cols[j]]; };
  return e(0, 0) * (e(1, 1) * e(2, 2) - e(1, 2) * e(2, 1)) -
         e(0, 1) * (e(1, 0) * e(2, 2) - e(1, 2) * e(2, 0)) +
         e(0, 2) * (e(1, 0) * e(2, 1) - e(1, 1) * e(2, 0));
}

std::array<int, 3> others(int k) {
  std::array<int, 3> out{};
  int j = 0;
  for (int i = 0; i < 4; ++i)
    if (i != k) out[j++] = i;
  return out;
}

}  // namespace

Mat4 metric_inverse(const Metric& m, const ZeroOptions& opts) {
  Mat4 inv;
  for (auto& row : inv)
    for (auto& e : row) e = Expr::integer(0);

  if (is_diagonal(m)) {
    for (int a = 0; a < 4; ++a) {
      if (is_zero(m.g[a][a], opts).is_zero())
        throw SingularMetricError("diagonal metric entry g_" + std::to_string(a) +
                                  std::to_string(a) + " vanishes");
      inv[a][a] = simplify(pow(m.g[a][a], -1));
    }
    return inv;
  }

  Expr det = Expr::integer(0);
  for (int b = 0; b < 4; ++b) {
    Expr cof = det3(m.g, others(0), others(b));
    Expr signed_cof = (b % 2 == 0) ? cof : Expr::negate(cof);
    det = det + m.g[0][b] * signed_cof;
  }
  det = simplify(det);
  if (is_zero(det, opts).is_zero())
    throw SingularMetricError("metric determinant vanishes");

  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      Expr cof = det3(m.g, others(b), others(a));
      Expr adj = ((a + b) % 2 == 0) ? cof : Expr::negate(cof);
      inv[a][b] = simplify(adj / det);
    }
  }
  return inv;
}

Christoffel christoffel(const Metric& m, const ZeroOptions& opts) {
  Mat4 inv = metric_inverse(m, opts);

  Expr dg[4][4][4];  // dg[c][a][b] = d_c g_ab
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        dg[c][a][b] = differentiate(m.g[a][b], m.chart[c]);
        dg[c][b][a] = dg[c][a][b];
      }

  Christoffel gamma;
  Expr half = Expr::rational(1, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b; c < 4; ++c) {
        Expr sum = Expr::integer(0);
        for (int d = 0; d < 4; ++d) {
          if (inv[a][d].is_zero_literal()) continue;
          sum = sum + inv[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
        }
        gamma[a][b][c] = simplify(half * sum);
        gamma[a][c][b] = gamma[a][b][c];
      }
  return gamma;
}

Riemann riemann(const Metric& m, const ZeroOptions& opts) {
  Christoffel gamma = christoffel(m, opts);

  Expr dgamma[4][4][4][4];  // dgamma[c][a][b][d] = d_c Gamma^a_bd
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = b; d < 4; ++d) {
          dgamma[c][a][b][d] = differentiate(gamma[a][b][d], m.chart[c]);
          dgamma[c][a][d][b] = dgamma[c][a][b][d];
        }

  Riemann r;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (d < c) {
            r[a][b][c][d] = simplify(Expr::negate(r[a][b][d][c]));
            continue;
          }
          if (d == c) {
            r[a][b][c][d] = Expr::integer(0);
            continue;
          }
          Expr sum = dgamma[c][a][b][d] - dgamma[d][a][b][c];
          for (int e = 0; e < 4; ++e) {
            sum = sum + gamma[a][c][e] * gamma[e][b][d] - gamma[a][d][e] * gamma[e][b][c];
          }
          r[a][b][c][d] = simplify(sum);
        }
  return r;
}

std::pair<Mat4, Expr> ricci(const Metric& m, const ZeroOptions& opts) {
  Riemann rm = riemann(m, opts);
  Mat4 inv = metric_inverse(m, opts);

  Mat4 ric;
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      Expr sum = Expr::integer(0);
      for (int c = 0; c < 4; ++c) sum = sum + rm[c][a][c][b];
      ric[a][b] = simplify(sum);
      ric[b][a] = ric[a][b];
    }

  Expr scalar = Expr::integer(0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (inv[a][b].is_zero_literal()) continue;
      scalar = scalar + inv[a][b] * ric[a][b];
    }
  return {ric, simplify(scalar)};
}

std::pair<Mat4, Expr> stress_energy(const Metric& m, const ZeroOptions& opts) {
  auto [ric, scalar] = ricci(m, opts);
  Mat4 stress;
  Expr half = Expr::rational(1, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      stress[a][b] = simplify(ric[a][b] - half * scalar * m.g[a][b]);
      stress[b][a] = stress[a][b];
    }
  return {stress, simplify(Expr::negate(scalar))};
}

CurvatureBundle curvature_bundle(const Metric& m, const ZeroOptions& opts) {
  CurvatureBundle out;
  out.inverse = metric_inverse(m, opts);

  Expr dg[4][4][4];
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = a; b < 4; ++b) {
        dg[c][a][b] = differentiate(m.g[a][b], m.chart[c]);
        dg[c][b][a] = dg[c][a][b];
      }

  Expr half = Expr::rational(1, 2);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b; c < 4; ++c) {
        Expr sum = Expr::integer(0);
        for (int d = 0; d < 4; ++d) {
          if (out.inverse[a][d].is_zero_literal()) continue;
          sum = sum + out.inverse[a][d] * (dg[b][d][c] + dg[c][d][b] - dg[d][b][c]);
        }
        out.christoffel[a][b][c] = simplify(half * sum);
        out.christoffel[a][c][b] = out.christoffel[a][b][c];
      }

  Expr dgamma[4][4][4][4];
  for (int c = 0; c < 4; ++c)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int d = b; d < 4; ++d) {
          dgamma[c][a][b][d] = differentiate(out.christoffel[a][b][d], m.chart[c]);
          dgamma[c][a][d][b] = dgamma[c][a][b][d];
        }

  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (d < c) {
            out.riemann[a][b][c][d] = simplify(Expr::negate(out.riemann[a][b][d][c]));
            continue;
          }
          if (d == c) {
            out.riemann[a][b][c][d] = Expr::integer(0);
            continue;
          }
          Expr sum = dgamma[c][a][b][d] - dgamma[d][a][b][c];
          for (int e = 0; e < 4; ++e) {
            sum = sum + out.christoffel[a][c][e] * out.christoffel[e][b][d] -
                  out.christoffel[a][d][e] * out.christoffel[e][b][c];
          }
          out.riemann[a][b][c][d] = simplify(sum);
        }

  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      Expr sum = Expr::integer(0);
      for (int c = 0; c < 4; ++c) sum = sum + out.riemann[c][a][c][b];
      out.ricci[a][b] = simplify(sum);
      out.ricci[b][a] = out.ricci[a][b];
    }

  Expr scalar = Expr::integer(0);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      if (out.inverse[a][b].is_zero_literal()) continue;
      scalar = scalar + out.inverse[a][b] * out.ricci[a][b];
    }
  out.ricci_scalar = simplify(scalar);

  for (int a = 0; a < 4; ++a)
    for (int b = a; b < 4; ++b) {
      out.einstein[a][b] =
          simplify(out.ricci[a][b] - half * out.ricci_scalar * m.g[a][b]);
      out.einstein[b][a] = out.einstein[a][b];
      out.stress[a][b] = out.einstein[a][b];
      out.stress[b][a] = out.einstein[a][b];
    }
  out.stress_trace = simplify(Expr::negate(out.ricci_scalar));
  return out;
}

std::array<Expr, 4> einstein_divergence(const Metric& m, const CurvatureBundle& bundle) {
  // G^{ab} = g^{ac} g^{bd} G_cd
  Mat4 up;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      Expr sum = Expr::integer(0);
      for (int c = 0; c < 4; ++c)
        for (int d = 0; d < 4; ++d) {
          if (bundle.inverse[a][c].is_zero_literal() ||
              bundle.inverse[b][d].is_zero_literal())
            continue;
          sum = sum + bundle.inverse[a][c] * bundle.inverse[b][d] * bundle.einstein[c][d];
        }
      up[a][b] = simplify(sum);
    }

  std::array<Expr, 4> div;
  for (int b = 0; b < 4; ++b) {
    Expr sum = Expr::integer(0);
    for (int a = 0; a < 4; ++a) {
      sum = sum + differentiate(up[a][b], m.chart[a]);
      for (int e = 0; e < 4; ++e) {
        sum = sum + bundle.christoffel[a][a][e] * up[e][b] +
              bundle.christoffel[b][a][e] * up[a][e];
      }
    }
    div[b] = simplify(sum);
  }
  return div;
}

}  // namespace homothety
