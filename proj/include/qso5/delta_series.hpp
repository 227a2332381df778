#ifndef QSO5_DELTA_SERIES_HPP
#define QSO5_DELTA_SERIES_HPP

#include <cmath>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qso5/scalar.hpp"

namespace qso5 {

namespace detail {

inline Rational coefficient_sqrt(const Rational& x) {
  using boost::multiprecision::cpp_int;
  const cpp_int num = numerator(x);
  const cpp_int den = denominator(x);
  const cpp_int rn = sqrt(num);
  const cpp_int rd = sqrt(den);
  if (rn * rn != num || rd * rd != den)
    throw std::domain_error("series sqrt: leading coefficient is not a rational square");
  return Rational(rn, rd);
}

template <class T>
T coefficient_sqrt(const T& x) {
  using std::sqrt;
  return sqrt(x);
}

}  // namespace detail

/// Truncated power series c_0 + c_1 d + ... + c_N d^N in d = log q.
///
/// All binary operations require equal truncation order.
template <class Coeff>
class DeltaSeries {
public:
  explicit DeltaSeries(int order) : coeffs_(check_order(order) + 1, Coeff(0)) {}
  DeltaSeries(std::vector<Coeff> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("DeltaSeries needs at least one coefficient");
  }

  static DeltaSeries constant(const Coeff& c, int order) {
    DeltaSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Coeff& operator[](int k) const { return coeffs_.at(static_cast<std::size_t>(k)); }
  Coeff& operator[](int k) { return coeffs_.at(static_cast<std::size_t>(k)); }
  std::span<const Coeff> coefficients() const { return coeffs_; }

  bool is_zero() const {
    for (const auto& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  /// True when every odd-power coefficient vanishes (d -> -d symmetry).
  bool is_even() const {
    for (std::size_t k = 1; k < coeffs_.size(); k += 2)
      if (coeffs_[k] != 0) return false;
    return true;
  }

  /// Sum of the truncated series at a numeric d (Horner).
  template <class T>
  T evaluate(const T& delta) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * delta + static_cast<T>(*it);
    return acc;
  }

  DeltaSeries& operator+=(const DeltaSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    return *this;
  }
  DeltaSeries& operator-=(const DeltaSeries& o) {
    same_order(o);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    return *this;
  }
  DeltaSeries& operator*=(const Coeff& s) {
    for (auto& c : coeffs_) c *= s;
    return *this;
  }

  friend DeltaSeries operator+(DeltaSeries a, const DeltaSeries& b) { return a += b; }
  friend DeltaSeries operator-(DeltaSeries a, const DeltaSeries& b) { return a -= b; }
  friend DeltaSeries operator*(DeltaSeries a, const Coeff& s) { return a *= s; }
  friend DeltaSeries operator*(const Coeff& s, DeltaSeries a) { return a *= s; }
  friend DeltaSeries operator-(DeltaSeries a) { return a *= Coeff(-1); }

  friend DeltaSeries operator*(const DeltaSeries& a, const DeltaSeries& b) {
    a.same_order(b);
    const int n = a.order();
    DeltaSeries r(n);
    for (int i = 0; i <= n; ++i) {
      if (a.coeffs_[i] == 0) continue;
      for (int j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return r;
  }

  /// Requires b[0] != 0.
  friend DeltaSeries operator/(const DeltaSeries& a, const DeltaSeries& b) {
    a.same_order(b);
    if (b.coeffs_[0] == 0) throw std::domain_error("series division: divisor has zero constant term");
    const int n = a.order();
    DeltaSeries r(n);
    for (int k = 0; k <= n; ++k) {
      Coeff acc = a.coeffs_[k];
      for (int i = 1; i <= k; ++i) acc -= b.coeffs_[i] * r.coeffs_[k - i];
      r.coeffs_[k] = acc / b.coeffs_[0];
    }
    return r;
  }

  /// Requires s[0] > 0.
  friend DeltaSeries sqrt(const DeltaSeries& s) {
    if (!(s.coeffs_[0] > 0)) throw std::domain_error("series sqrt: constant term must be positive");
    const int n = s.order();
    DeltaSeries r(n);
    r.coeffs_[0] = detail::coefficient_sqrt(s.coeffs_[0]);
    const Coeff two_r0 = Coeff(2) * r.coeffs_[0];
    for (int k = 1; k <= n; ++k) {
      Coeff acc = s.coeffs_[k];
      for (int i = 1; i < k; ++i) acc -= r.coeffs_[i] * r.coeffs_[k - i];
      r.coeffs_[k] = acc / two_r0;
    }
    return r;
  }

  friend bool operator==(const DeltaSeries&, const DeltaSeries&) = default;

private:
  static std::size_t check_order(int order) {
    if (order < 0) throw std::invalid_argument("DeltaSeries order must be non-negative");
    return static_cast<std::size_t>(order);
  }
  void same_order(const DeltaSeries& o) const {
    if (o.coeffs_.size() != coeffs_.size()) throw std::invalid_argument("DeltaSeries order mismatch");
  }

  std::vector<Coeff> coeffs_;
};

using RationalSeries = DeltaSeries<Rational>;

/// Series of [x]_p about q = 1 (q = e^d). Requires order >= 2.
RationalSeries bracket_series(const Rational& x, const Rational& p, int order);

/// Series of [x1]_{p1} - [x2]_{p2}. Requires order >= 2.
RationalSeries nonminimal_difference_series(const Rational& x1, const Rational& p1, const Rational& x2,
                                            const Rational& p2, int order);

}  // namespace qso5

#endif  // QSO5_DELTA_SERIES_HPP
