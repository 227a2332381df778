#include "qso5/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include "qso5/qnumber.hpp"
#include "qso5/verify.hpp"

namespace qso5 {

CasimirExpansion casimir_delta_expansion(const IrrepLabel& irrep, int order) {
  if (order < 2 || order % 2 != 0) throw std::invalid_argument("expansion order must be even and >= 2");
  const Rational n1 = to_rational(irrep.n1);
  const Rational n2 = to_rational(irrep.n2);
  const Rational one(1), two(2);
  const auto br = [&](const Rational& x, const Rational& p = Rational(1)) { return bracket_series(x, p, order); };

  const RationalSeries inv_two = RationalSeries::constant(one, order) / br(two);
  const RationalSeries ratio = br(2 * n1 + 3, two) / br(2 * n1 + 3);
  const RationalSeries n2_part = br(n2) * br(n2 + 1) * inv_two;
  const RationalSeries total = br(n1) * br(n1 + 3) * inv_two + n2_part * ratio;
  const RationalSeries ratio_only = n2_part * (ratio - RationalSeries::constant(one, order));

  CasimirExpansion e{irrep, total[0], total[2], {}, total, ratio_only[2]};
  for (int k = 4; k <= order; k += 2) e.higher.push_back(total[k]);
  return e;
}

Rational a2_closed_form(const IrrepLabel& irrep) {
  const Rational n1 = to_rational(irrep.n1);
  const Rational n2 = to_rational(irrep.n2);
  return (n1 * (n1 + 3) + n2 * (n2 + 1)) / 2;
}

std::vector<bool> separation_check(const std::vector<std::pair<IrrepLabel, IrrepLabel>>& pairs, double q,
                                   double tolerance) {
  if (!(q > 0) || q == 1) throw std::invalid_argument("separation check needs q > 0, q != 1");
  std::vector<bool> out;
  out.reserve(pairs.size());
  for (const auto& [a, b] : pairs) {
    if (a2_closed_form(a) != a2_closed_form(b))
      throw std::invalid_argument("pair " + a.str() + ", " + b.str() + " is not classically degenerate");
    if (a == b) {
      out.push_back(false);
      continue;
    }
    const double diff = casimir_eigenvalue_formula(a, q) - casimir_eigenvalue_formula(b, q);
    out.push_back(std::abs(diff) > tolerance);
  }
  return out;
}

double contraction_scale(HalfInt n1, double q, double lambda) {
  const double gap = q - 1.0 / q;
  return std::pow(q, 2.0 * n1.value() + 3.0) / (lambda * lambda * (q + 1.0 / q) * gap * gap);
}

double contraction_limit_value(HalfInt n2, double q, double lambda) {
  const Deformation<double> d(q);
  const double gap = q - 1.0 / q;
  return lambda * lambda * (1.0 + gap * gap / (q + 1.0 / q) * d.bracket(n2) * d.bracket(n2 + 1));
}

ContractionResult contraction_limit(HalfInt n2, double q, double lambda, const std::vector<HalfInt>& n1_values) {
  if (!(q > 1)) throw std::invalid_argument("contraction limit requires q > 1");
  if (!(lambda > 0)) throw std::invalid_argument("contraction scale lambda must be positive");
  if (n1_values.empty()) throw std::invalid_argument("contraction limit needs at least one n1");

  ContractionResult r;
  r.lambda = lambda;
  r.q = q;
  r.n2 = n2;
  r.limit_formula_value = contraction_limit_value(n2, q, lambda);
  for (std::size_t i = 0; i < n1_values.size(); ++i) {
    const HalfInt n1 = n1_values[i];
    if (i > 0 && !(n1_values[i - 1] < n1)) throw std::invalid_argument("n1 values must be strictly ascending");
    const IrrepLabel irrep = IrrepLabel::make(n1, n2);
    r.sequence.push_back({n1, casimir_eigenvalue_formula(irrep, q) / contraction_scale(n1, q, lambda)});
  }
  const double last = r.sequence.back().scaled_eigenvalue;
  r.final_relative_error = std::abs(last - r.limit_formula_value) / std::abs(r.limit_formula_value);
  const bool small_step =
      r.sequence.size() >= 2 && std::abs(last - r.sequence[r.sequence.size() - 2].scaled_eigenvalue) < 1e-10;
  r.converged = r.final_relative_error <= 1e-8 || small_step;
  return r;
}

}  // namespace qso5
