#include "doctest.h"

#include <cmath>

#include "qso5/qnumber.hpp"

using namespace qso5;

TEST_CASE("bracket: classical limit is exact") {
  for (double x : {-3.5, -1.0, 0.0, 0.5, 2.0, 7.0})
    for (double p : {1.0, 2.0, 0.5}) CHECK(bracket(x, 1.0, p) == x);
}

TEST_CASE("bracket: hand-evaluated values") {
  // (2^3 - 2^-3) / (2 - 2^-1) = (63/8) / (3/2)
  CHECK(bracket(3.0, 2.0) == doctest::Approx(5.25).epsilon(1e-15));
  const double q = 1.3;
  CHECK(bracket(2.0, q) == doctest::Approx(q + 1 / q).epsilon(1e-15));
  CHECK(bracket(0.0, 1.7, 2.0) == 0.0);
  CHECK(bracket(1.0, 0.4) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("bracket: matches the defining quotient away from q = 1") {
  for (double q : {0.5, 0.9, 1.1, 2.0})
    for (double p : {1.0, 2.0})
      for (double x = -5; x <= 5; x += 0.5) {
        const double direct = (std::pow(q, p * x) - std::pow(q, -p * x)) / (std::pow(q, p) - std::pow(q, -p));
        CHECK(bracket(x, q, p) == doctest::Approx(direct).epsilon(1e-12));
      }
}

TEST_CASE("bracket: symmetric under q -> 1/q, antisymmetric under x -> -x") {
  for (double q : {0.5, 0.9, 1.1, 2.0})
    for (double p : {1.0, 2.0})
      for (double x = -5; x <= 5; x += 0.5) {
        const double v = bracket(x, q, p);
        CHECK(bracket(x, 1 / q, p) == doctest::Approx(v).epsilon(1e-12));
        CHECK(bracket(-x, q, p) == doctest::Approx(-v).epsilon(1e-12));
      }
}

TEST_CASE("DeformationParams rejects non-positive values") {
  CHECK_THROWS_AS(DeformationParams<double>(0.0), std::invalid_argument);
  CHECK_THROWS_AS(DeformationParams<double>(-1.0), std::invalid_argument);
  CHECK_THROWS_AS(DeformationParams<double>(1.5, 0.0), std::invalid_argument);
  CHECK(DeformationParams<double>(1.0).classical());
}

TEST_CASE("ratio_bracket") {
  const DeformationParams<double> classical(1.0);
  CHECK(ratio_bracket(4.0, 5.0, 2.0, 1.0, classical) == 4.0);

  const DeformationParams<double> params(1.2);
  const double expected = bracket(5.0, 1.2, 2.0) / bracket(5.0, 1.2);
  CHECK(ratio_bracket(1.0, 5.0, 2.0, 1.0, params) == doctest::Approx(expected).epsilon(1e-14));
  CHECK(expected == doctest::Approx(1.4214086419753086).epsilon(1e-14));  // rational evaluation at q = 6/5
  CHECK(ratio_bracket(0.0, 5.0, 2.0, 1.0, params) == 0.0);
  CHECK_THROWS_AS(ratio_bracket(1.0, 0.0, 2.0, 1.0, params), DivisionByZero);
}

TEST_CASE("Deformation helpers agree with the free functions") {
  const Deformation<double> d(1.37);
  for (int t = -9; t <= 9; ++t) {
    const HalfInt x = HalfInt::from_twice(t);
    CHECK(d.bracket(x) == doctest::Approx(bracket(x.value(), 1.37)).epsilon(1e-14));
    CHECK(d.bracket(x, 2) == doctest::Approx(bracket(x.value(), 1.37, 2.0)).epsilon(1e-14));
    CHECK(d.pow(x) == doctest::Approx(std::pow(1.37, x.value())).epsilon(1e-14));
  }
}

TEST_CASE("doubled_over_single continues [y]_2/[y] through y = 0") {
  const Deformation<double> d(1.5);
  for (double y : {-4.0, -1.5, 0.5, 1.0, 3.0, 9.0})
    CHECK(d.doubled_over_single(y) ==
          doctest::Approx(bracket(y, 1.5, 2.0) / bracket(y, 1.5)).epsilon(1e-13));
  CHECK(d.doubled_over_single(0.0) == doctest::Approx(2.0 / bracket(2.0, 1.5)).epsilon(1e-15));
  CHECK(Deformation<double>(1.0).doubled_over_single(0.0) == 1.0);
}

TEST_CASE("high precision bracket") {
  const HighPrecision q("1.5");
  const HighPrecision v = bracket(HighPrecision(3), q);
  // [3] = q^2 + 1 + q^-2
  const HighPrecision expected = q * q + 1 + 1 / (q * q);
  CHECK(abs(v - expected) < HighPrecision("1e-45"));
}
