#ifndef QSO5_QNUMBER_HPP
#define QSO5_QNUMBER_HPP

#include <cmath>
#include <stdexcept>
#include <string>

#include "qso5/scalar.hpp"

namespace qso5 {

/// Raised when a q-number quotient has a vanishing denominator.
class DivisionByZero : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

/// Deformation parameter q and bracket subscript p, both strictly positive.
template <class Scalar>
struct DeformationParams {
  Scalar q{1};
  Scalar p{1};

  DeformationParams() = default;
  DeformationParams(Scalar q_, Scalar p_ = Scalar(1)) : q(std::move(q_)), p(std::move(p_)) {
    if (!(q > 0)) throw std::invalid_argument("deformation parameter q must be positive");
    if (!(p > 0)) throw std::invalid_argument("bracket subscript p must be positive");
  }

  bool classical() const { return q == 1; }
};

/// [x]_p = (q^{px} - q^{-px}) / (q^p - q^{-p}); exactly x at q = 1.
///
/// Evaluated as sinh(p x log q) / sinh(p log q), which keeps full relative
/// accuracy for q close to 1 where the difference quotient cancels badly.
template <class Scalar>
Scalar bracket(const Scalar& x, const DeformationParams<Scalar>& params) {
  using std::log;
  using std::sinh;
  if (params.classical()) return x;
  if (x == 0) return Scalar(0);
  const Scalar delta = log(params.q);
  return sinh(params.p * x * delta) / sinh(params.p * delta);
}

template <class Scalar>
Scalar bracket(const Scalar& x, const Scalar& q, const Scalar& p = Scalar(1)) {
  return bracket(x, DeformationParams<Scalar>(q, p));
}

/// Type-(3) non-minimal form [x]_p [y]_{p_num} / [y]_{p_den}, with p taken from params.
template <class Scalar>
Scalar ratio_bracket(const Scalar& x, const Scalar& y, const Scalar& p_num, const Scalar& p_den,
                     const DeformationParams<Scalar>& params) {
  const Scalar den = bracket(y, DeformationParams<Scalar>(params.q, p_den));
  if (den == 0) throw DivisionByZero("ratio_bracket: denominator [y]_p vanishes");
  const Scalar num = bracket(y, DeformationParams<Scalar>(params.q, p_num));
  return bracket(x, params) * num / den;
}

/// Precomputed q and log q for repeated bracket and power evaluation.
template <class Scalar>
class Deformation {
public:
  explicit Deformation(Scalar q) : q_(std::move(q)) {
    using std::log;
    if (!(q_ > 0)) throw std::invalid_argument("deformation parameter q must be positive");
    log_q_ = classical() ? Scalar(0) : Scalar(log(q_));
  }

  const Scalar& q() const { return q_; }
  const Scalar& log_q() const { return log_q_; }
  bool classical() const { return q_ == 1; }

  /// [x]_p.
  Scalar bracket(const Scalar& x, int p = 1) const {
    using std::sinh;
    if (classical()) return x;
    if (x == 0) return Scalar(0);
    return sinh(Scalar(p) * x * log_q_) / sinh(Scalar(p) * log_q_);
  }
  Scalar bracket(HalfInt x, int p = 1) const { return bracket(to_scalar<Scalar>(x), p); }

  /// q^x.
  Scalar pow(const Scalar& x) const {
    using std::exp;
    if (classical()) return Scalar(1);
    return exp(x * log_q_);
  }
  Scalar pow(HalfInt x) const { return pow(to_scalar<Scalar>(x)); }

  /// [y]_2 / [y] continued through y = 0, where it equals 2/[2].
  ///
  /// Uses [y]_2/[y] = (q^y + q^-y)/(q + q^-1).
  Scalar doubled_over_single(const Scalar& y) const {
    using std::cosh;
    if (classical()) return Scalar(1);
    return cosh(y * log_q_) / cosh(log_q_);
  }
  Scalar doubled_over_single(HalfInt y) const { return doubled_over_single(to_scalar<Scalar>(y)); }

private:
  Scalar q_;
  Scalar log_q_;
};

}  // namespace qso5

#endif  // QSO5_QNUMBER_HPP
