#include "homothety/lie.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <set>
#include <sstream>

#include "homothety/derivative.hpp"
#include "homothety/render.hpp"
#include "homothety/simplify.hpp"

namespace homothety {

VectorField make_vector_field(const Chart& chart, std::array<Expr, 4> components) {
  VectorField f;
  f.chart = chart;
  for (int a = 0; a < 4; ++a) f.components[a] = simplify(components[a]);
  return f;
}

Mat4 lie_derivative_metric(const VectorField& field, const Metric& metric) {
  if (!(field.chart == metric.chart))
    throw ChartMismatchError("vector field and metric use different charts");

  Mat4 out;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      Expr sum = Expr::integer(0);
      for (int c = 0; c < 4; ++c) {
        sum = sum + field.components[c] * differentiate(metric.g[a][b], metric.chart[c]);
        sum = sum + metric.g[c][b] * differentiate(field.components[c], metric.chart[a]);
        sum = sum + metric.g[a][c] * differentiate(field.components[c], metric.chart[b]);
      }
      out[a][b] = simplify(sum);
      out[b][a] = out[a][b];
    }
  }
  return out;
}

std::string ResidualReport::tier() const {
  if (!all_zero) return "witness";
  return all_symbolic ? "symbolic" : "numeric";
}

const Witness* ResidualReport::first_witness() const {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      if (verdicts[a][b].witness) return &*verdicts[a][b].witness;
  return nullptr;
}

ResidualReport homothety_residual(const VectorField& field, const Metric& metric,
                                  const HomothetyParams& params,
                                  const ZeroOptions& opts) {
  Mat4 lie = lie_derivative_metric(field, metric);
  ResidualReport report;
  for (int a = 0; a < 4; ++a) {
    for (int b = a; b < 4; ++b) {
      report.residual[a][b] =
          simplify(lie[a][b] - 2 * params.phi0 * metric.g[a][b]);
      report.residual[b][a] = report.residual[a][b];
      ZeroVerdict v = is_zero(report.residual[a][b], opts);
      report.verdicts[a][b] = v;
      report.verdicts[b][a] = v;
      if (!v.is_zero()) report.all_zero = false;
      if (!v.symbolic()) report.all_symbolic = false;
    }
  }
  return report;
}

VectorField lie_bracket(const VectorField& x, const VectorField& y) {
  if (!(x.chart == y.chart))
    throw ChartMismatchError("vector fields use different charts");
  VectorField out;
  out.chart = x.chart;
  for (int a = 0; a < 4; ++a) {
    Expr sum = Expr::integer(0);
    for (int b = 0; b < 4; ++b) {
      sum = sum + x.components[b] * differentiate(y.components[a], x.chart[b]);
      sum = sum - y.components[b] * differentiate(x.components[a], x.chart[b]);
    }
    out.components[a] = simplify(sum);
  }
  return out;
}

namespace {

// Nearest rational with a bounded denominator (continued fractions).
bool rationalize(double x, mpq_class& out, long max_den = 1000000, double tol = 1e-6) {
  double a = x;
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(a);
    if (fl > 1e15 || fl < -1e15) return false;
    long ai = static_cast<long>(fl);
    long p2 = ai * p1 + p0;
    long q2 = ai * q1 + q0;
    if (q2 > max_den) break;
    p0 = p1;
    q0 = q1;
    p1 = p2;
    q1 = q2;
    double rem = a - fl;
    if (std::fabs(static_cast<double>(p1) / q1 - x) < 1e-12) break;
    if (rem < 1e-12) break;
    a = 1.0 / rem;
  }
  if (q1 == 0) return false;
  double approx = static_cast<double>(p1) / q1;
  if (std::fabs(approx - x) > tol) return false;
  out = mpq_class(p1, q1);
  out.canonicalize();
  return true;
}

}  // namespace

const AlgebraTable::Entry& AlgebraTable::entry(int i, int j) const {
  for (const Entry& e : entries)
    if (e.i == i && e.j == j) return e;
  throw std::out_of_range("no closure entry for this generator pair");
}

std::string AlgebraTable::format() const {
  std::ostringstream os;
  for (const Entry& e : entries) {
    os << "[X" << e.i << ", X" << e.j << "] = ";
    if (!e.closes) {
      os << "(not in span)";
    } else {
      bool any = false;
      for (std::size_t k = 0; k < e.coefficients.size(); ++k) {
        if (e.coefficients[k] == 0) continue;
        if (any) os << " + ";
        os << e.coefficients[k].get_str() << "*X" << k;
        any = true;
      }
      if (!any) os << "0";
    }
    os << "\n";
  }
  return os.str();
}

AlgebraTable closure_table(const std::vector<VectorField>& generators,
                           const ZeroOptions& opts) {
  if (generators.size() < 2)
    throw std::invalid_argument("closure_table needs at least two generators");
  for (std::size_t i = 1; i < generators.size(); ++i)
    if (!(generators[i].chart == generators[0].chart))
      throw ChartMismatchError("generators use different charts");

  AlgebraTable table;
  table.generators = generators;
  const int n = static_cast<int>(generators.size());

  std::set<std::string> symbols;
  for (const VectorField& g : generators)
    for (const Expr& c : g.components)
      for (const std::string& s : c.free_symbols()) symbols.insert(s);

  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      AlgebraTable::Entry entry;
      entry.i = i;
      entry.j = j;
      entry.bracket = lie_bracket(generators[i], generators[j]);

      std::set<std::string> syms = symbols;
      for (const Expr& c : entry.bracket.components)
        for (const std::string& s : c.free_symbols()) syms.insert(s);

      // Recover candidate coefficients from seeded samples, then verify.
      const int points = 12;
      std::uint64_t state = opts.seed ^ (static_cast<std::uint64_t>(i) << 32 | j);
      Eigen::MatrixXd A(4 * points, n);
      Eigen::VectorXd rhs(4 * points);
      bool sampled = true;
      for (int p = 0; p < points && sampled; ++p) {
        bool got = false;
        for (int attempt = 0; attempt < 100 && !got; ++attempt) {
          auto pt = opts.domain.sample(syms, state, 1);
          if (!pt) continue;
          try {
            for (int a = 0; a < 4; ++a) {
              rhs(4 * p + a) = eval_at(entry.bracket.components[a], *pt);
              for (int k = 0; k < n; ++k)
                A(4 * p + a, k) = eval_at(generators[k].components[a], *pt);
            }
            got = true;
          } catch (const EvalError&) {
          }
        }
        if (!got) sampled = false;
      }

      entry.closes = false;
      if (sampled) {
        Eigen::VectorXd c = A.colPivHouseholderQr().solve(rhs);
        std::vector<mpq_class> coeffs(n);
        bool rational_ok = true;
        for (int k = 0; k < n && rational_ok; ++k) {
          double v = c(k);
          if (std::fabs(v) < 1e-9) v = 0.0;
          rational_ok = rationalize(v, coeffs[k]);
        }
        if (rational_ok) {
          bool verified = true;
          for (int a = 0; a < 4 && verified; ++a) {
            Expr diff = entry.bracket.components[a];
            for (int k = 0; k < n; ++k)
              diff = diff - Expr::rational(coeffs[k]) * generators[k].components[a];
            verified = is_zero(diff, opts).is_zero();
          }
          if (verified) {
            entry.closes = true;
            entry.coefficients = std::move(coeffs);
          }
        }
      }
      if (!entry.closes) table.closes = false;
      table.entries.push_back(std::move(entry));
    }
  }
  return table;
}

}  // namespace homothety
