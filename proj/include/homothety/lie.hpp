#ifndef HOMOTHETY_LIE_HPP
#define HOMOTHETY_LIE_HPP

#include <string>
#include <vector>

#include "homothety/metric.hpp"
#include "homothety/zero.hpp"

namespace homothety {

struct VectorField {
  Chart chart;
  std::array<Expr, 4> components;
};

VectorField make_vector_field(const Chart& chart, std::array<Expr, 4> components);

struct HomothetyParams {
  Expr phi0;  // symbol or rational constant
};

/// (L_H g)_ab = H^c d_c g_ab + g_cb d_a H^c + g_ac d_b H^c
Mat4 lie_derivative_metric(const VectorField& field, const Metric& metric);

struct ResidualReport {
  Mat4 residual;
  std::array<std::array<ZeroVerdict, 4>, 4> verdicts;
  bool all_zero = true;
  bool all_symbolic = true;

  /// "symbolic" when every component vanished structurally, "numeric" when
  /// at least one needed sampling, "witness" otherwise.
  std::string tier() const;
  const Witness* first_witness() const;
};

/// Residual (L_H g)_ab - 2 phi0 g_ab with a per-component zero verdict.
/// H is a homothety iff all components vanish; a Killing vector iff
/// additionally phi0 = 0.
ResidualReport homothety_residual(const VectorField& field, const Metric& metric,
                                  const HomothetyParams& params,
                                  const ZeroOptions& opts = {});

/// [X,Y]^a = X^b d_b Y^a - Y^b d_b X^a
VectorField lie_bracket(const VectorField& x, const VectorField& y);

struct AlgebraTable {
  struct Entry {
    int i = 0;
    int j = 0;
    bool closes = false;
    std::vector<mpq_class> coefficients;  // bracket in the generator basis
    VectorField bracket;
  };
  std::vector<VectorField> generators;
  std::vector<Entry> entries;  // pairs i < j
  bool closes = true;

  const Entry& entry(int i, int j) const;
  std::string format() const;
};

/// Expresses every pairwise bracket as a rational-coefficient combination of
/// the generators (coefficients recovered from seeded samples, then verified
/// symbolically/numerically via is_zero). Non-closure is a result, not an
/// error.
AlgebraTable closure_table(const std::vector<VectorField>& generators,
                           const ZeroOptions& opts = {});

}  // namespace homothety

#endif  // HOMOTHETY_LIE_HPP
