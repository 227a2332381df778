#include "qso5/delta_series.hpp"

namespace qso5 {

namespace {

// sinh(a d) / d truncated at d^order: only even powers, c_{2k} = a^{2k+1} / (2k+1)!.
RationalSeries sinh_over_delta(const Rational& a, int order) {
  RationalSeries s(order);
  Rational term = a;  // a^{2k+1} / (2k+1)!
  for (int k = 0; 2 * k <= order; ++k) {
    s[2 * k] = term;
    term *= a * a;
    term /= Rational((2 * k + 2) * (2 * k + 3));
  }
  return s;
}

void require_order(int order) {
  if (order < 2) throw std::invalid_argument("series order must be at least 2");
}

}  // namespace

RationalSeries bracket_series(const Rational& x, const Rational& p, int order) {
  require_order(order);
  if (p <= 0) throw std::invalid_argument("bracket subscript p must be positive");
  return sinh_over_delta(p * x, order) / sinh_over_delta(p, order);
}

RationalSeries nonminimal_difference_series(const Rational& x1, const Rational& p1, const Rational& x2,
                                            const Rational& p2, int order) {
  return bracket_series(x1, p1, order) - bracket_series(x2, p2, order);
}

}  // namespace qso5
