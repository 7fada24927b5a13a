#include "homothety/metric.hpp"

#include <set>

#include "homothety/simplify.hpp"

namespace homothety {

Chart Chart::spherical() { return Chart{{"t", "r", "theta", "phi"}}; }

int Chart::index(const std::string& name) const {
  for (int i = 0; i < 4; ++i)
    if (names[i] == name) return i;
  return -1;
}

void Chart::validate() const {
  std::set<std::string> seen;
  for (const std::string& n : names) {
    if (n.empty()) throw MetricError("chart coordinate name is empty");
    if (!seen.insert(n).second)
      throw MetricError("duplicate chart coordinate '" + n + "'");
  }
}

Metric make_diagonal_metric(const Chart& chart, Expr g00, Expr g11, Expr g22, Expr g33) {
  Mat4 comps;
  for (auto& row : comps)
    for (auto& e : row) e = Expr::integer(0);
  comps[0][0] = std::move(g00);
  comps[1][1] = std::move(g11);
  comps[2][2] = std::move(g22);
  comps[3][3] = std::move(g33);
  return make_metric(chart, comps);
}

Metric make_metric(const Chart& chart, const Mat4& components, const ZeroOptions& opts) {
  chart.validate();
  Metric m;
  m.chart = chart;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) m.g[a][b] = simplify(components[a][b]);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (!(m.g[a][b] == m.g[b][a]))
        throw MetricError("metric is not symmetric in components (" +
                          std::to_string(a) + "," + std::to_string(b) + ")");
  for (int a = 0; a < 4; ++a)
    if (is_zero(m.g[a][a], opts).is_zero())
      throw MetricError("metric diagonal entry g_" + std::to_string(a) +
                        std::to_string(a) + " vanishes");
  return m;
}

Metric minkowski_spherical() {
  Chart c = Chart::spherical();
  Expr r = Expr::symbol("r");
  Expr th = Expr::symbol("theta");
  return make_diagonal_metric(
      c, Expr::integer(1), Expr::integer(-1), Expr::negate(r * r),
      Expr::negate(r * r * pow(Expr::sin(th), 2)));
}

bool is_diagonal(const Metric& m) {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (a != b && !m.g[a][b].is_zero_literal()) return false;
  return true;
}

}  // namespace homothety
