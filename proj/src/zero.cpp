#include "homothety/zero.hpp"

#include <cmath>
#include <stdexcept>

#include "homothety/simplify.hpp"

namespace homothety {

double uniform01(std::uint64_t& state) {
  // splitmix64 step; top 53 bits as a double in [0, 1)
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

Interval SampleDomain::interval_for(const std::string& symbol) const {
  auto it = intervals.find(symbol);
  if (it != intervals.end()) return it->second;
  if (symbol == "theta") return {0.3, 2.8};
  if (symbol == "phi") return {0.1, 6.1};
  return {0.5, 2.0};  // t, r and every named parameter
}

std::optional<Point> SampleDomain::sample(const std::set<std::string>& symbols,
                                          std::uint64_t& state, int max_attempts) const {
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    Point p;
    for (const std::string& s : symbols) {
      Interval iv = interval_for(s);
      p[s] = iv.lo + (iv.hi - iv.lo) * uniform01(state);
    }
    bool ok = true;
    for (const Expr& c : positive) {
      try {
        if (eval_at(c, p) <= 0) ok = false;
      } catch (const EvalError&) {
        ok = false;
      }
      if (!ok) break;
    }
    if (ok) return p;
  }
  return std::nullopt;
}

ZeroVerdict is_zero(const Expr& e, const ZeroOptions& options) {
  Expr s = simplify(e);
  if (s.is_zero_literal()) return {ZeroVerdict::Kind::SymbolicZero, std::nullopt};

  std::set<std::string> symbols = s.free_symbols();
  std::uint64_t state = options.seed;
  int evaluated = 0;
  for (int i = 0; i < options.samples; ++i) {
    // A draw that lands outside a function domain is resampled as well.
    double value = 0;
    Point point;
    bool got = false;
    for (int attempt = 0; attempt < 100 && !got; ++attempt) {
      auto p = options.domain.sample(symbols, state, 1);
      if (!p) continue;
      try {
        value = eval_at(s, *p);
        point = std::move(*p);
        got = true;
      } catch (const EvalError&) {
      }
    }
    if (!got) continue;
    ++evaluated;
    if (std::fabs(value) > options.tolerance)
      return {ZeroVerdict::Kind::NonZero, Witness{std::move(point), value}};
  }
  if (evaluated == 0)
    throw std::runtime_error("is_zero: no evaluable sample point in the domain");
  return {ZeroVerdict::Kind::NumericZero, std::nullopt};
}

}  // namespace homothety
