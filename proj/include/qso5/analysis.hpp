#ifndef QSO5_ANALYSIS_HPP
#define QSO5_ANALYSIS_HPP

#include <utility>
#include <vector>

#include "qso5/basis.hpp"
#include "qso5/delta_series.hpp"

namespace qso5 {

/// Casimir eigenvalue expanded about q = 1 (q = e^d): A2 + d^2 A4 + ...
struct CasimirExpansion {
  IrrepLabel irrep;
  Rational A2;
  Rational A4;
  /// d^4, d^6, ... coefficients up to the requested order.
  std::vector<Rational> higher;
  RationalSeries series{2};
  /// d^2 coefficient contributed by the [2n1+3]_2/[2n1+3] factor alone:
  /// the d^2 coefficient of ([n2][n2+1]/[2]) ([2n1+3]_2/[2n1+3] - 1).
  Rational ratio_contribution_A4;
};

/// Requires an even order >= 2.
CasimirExpansion casimir_delta_expansion(const IrrepLabel& irrep, int order);

/// (n1(n1+3) + n2(n2+1)) / 2.
Rational a2_closed_form(const IrrepLabel& irrep);

/// For each pair of classically degenerate irreps (equal A2), whether the
/// q-deformed eigenvalues differ by more than tolerance at q.
/// Throws std::invalid_argument for pairs with unequal A2 or for q = 1.
std::vector<bool> separation_check(const std::vector<std::pair<IrrepLabel, IrrepLabel>>& pairs, double q,
                                   double tolerance = 1e-6);

struct ContractionPoint {
  HalfInt n1;
  double scaled_eigenvalue;
};

struct ContractionResult {
  double lambda = 1;
  double q = 1;
  HalfInt n2;
  std::vector<ContractionPoint> sequence;
  double limit_formula_value = 0;
  /// |last - limit| / |limit|.
  double final_relative_error = 0;
  /// final_relative_error <= 1e-8, or the last two terms differ by < 1e-10.
  bool converged = false;
};

/// q^{2n1+3} / (lambda^2 [2] (q - 1/q)^2).
double contraction_scale(HalfInt n1, double q, double lambda);

/// lambda^2 { 1 + (q - 1/q)^2 / (q + 1/q) [n2][n2+1] }.
double contraction_limit_value(HalfInt n2, double q, double lambda);

/// Requires q > 1, lambda > 0, ascending n1 values each forming an irrep with n2.
ContractionResult contraction_limit(HalfInt n2, double q, double lambda, const std::vector<HalfInt>& n1_values);

}  // namespace qso5

#endif  // QSO5_ANALYSIS_HPP
