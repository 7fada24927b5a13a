#ifndef HOMOTHETY_METRIC_HPP
#define HOMOTHETY_METRIC_HPP

#include <array>
#include <stdexcept>
#include <string>

#include "homothety/expr.hpp"
#include "homothety/zero.hpp"

namespace homothety {

struct Chart {
  std::array<std::string, 4> names;

  /// (t, r, theta, phi)
  static Chart spherical();

  int index(const std::string& name) const;
  const std::string& operator[](int i) const { return names[i]; }
  bool operator==(const Chart& other) const { return names == other.names; }

  void validate() const;  // four distinct non-empty names
};

using Mat4 = std::array<std::array<Expr, 4>, 4>;

struct MetricError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ChartMismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Symmetric metric with signature (+,-,-,-); components stored simplified.
struct Metric {
  Chart chart;
  Mat4 g;
};

Metric make_diagonal_metric(const Chart& chart, Expr g00, Expr g11, Expr g22, Expr g33);

/// Builds a metric from a full component matrix: simplifies, checks symmetry
/// structurally and nonzero diagonal entries via is_zero.
Metric make_metric(const Chart& chart, const Mat4& components,
                   const ZeroOptions& opts = {});

/// diag(1, -1, -r^2, -r^2 sin^2 theta)
Metric minkowski_spherical();

bool is_diagonal(const Metric& m);

}  // namespace homothety

#endif  // HOMOTHETY_METRIC_HPP
