#ifndef QSO5_SCALAR_HPP
#define QSO5_SCALAR_HPP

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <limits>
#include <sstream>
#include <string>

#include "qso5/half_integer.hpp"

namespace qso5 {

/// 50 significant decimal digits; expression templates off so Eigen can use it.
using HighPrecision = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                                    boost::multiprecision::et_off>;

using Rational = boost::multiprecision::cpp_rational;

template <class Scalar>
Scalar to_scalar(HalfInt h) {
  return Scalar(h.twice()) / Scalar(2);
}

inline Rational to_rational(HalfInt h) { return Rational(h.twice(), 2); }

/// Full-precision decimal text (round-trips through parse_scalar).
template <class Scalar>
std::string to_decimal_string(const Scalar& x) {
  std::ostringstream os;
  os.precision(std::numeric_limits<Scalar>::max_digits10);
  os << x;
  return os.str();
}

template <class Scalar>
Scalar parse_scalar(const std::string& text) {
  if constexpr (std::is_floating_point_v<Scalar>) {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
    return static_cast<Scalar>(v);
  } else {
    return Scalar(text);
  }
}

}  // namespace qso5

#endif  // QSO5_SCALAR_HPP
