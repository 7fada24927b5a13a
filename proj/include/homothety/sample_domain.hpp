#ifndef HOMOTHETY_SAMPLE_DOMAIN_HPP
#define HOMOTHETY_SAMPLE_DOMAIN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "homothety/eval.hpp"
#include "homothety/expr.hpp"

namespace homothety {

struct Interval {
  double lo;
  double hi;
};

/// Sampling box for numeric checks. Coordinates default to
/// t, r in [0.5, 2], theta in [0.3, 2.8], phi in [0.1, 6.1]; every other
/// symbol defaults to [0.5, 2]. Expressions listed in `positive` must
/// evaluate to a positive value for a sample to be accepted.
struct SampleDomain {
  std::map<std::string, Interval> intervals;
  std::vector<Expr> positive;

  Interval interval_for(const std::string& symbol) const;

  /// Deterministic sample of the listed symbols; rejection sampling against
  /// the positivity constraints, at most `max_attempts` draws.
  std::optional<Point> sample(const std::set<std::string>& symbols,
                              std::uint64_t& state, int max_attempts = 100) const;
};

/// Splitmix-style generator: portable, deterministic uniform doubles.
double uniform01(std::uint64_t& state);

struct OracleReport {
  double max_abs = 0;
  double max_rel = 0;
  Point worst_point;
  int samples = 0;
  std::uint64_t seed = 0;
};

}  // namespace homothety

#endif  // HOMOTHETY_SAMPLE_DOMAIN_HPP
