#include "doctest.h"

#include <cmath>

#include "qso5/analysis.hpp"
#include "qso5/verify.hpp"

using namespace qso5;

namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

Rational R(long long n, long long d = 1) { return Rational(n, d); }

// Independent polynomial form of A4 (exact, computed offline).
Rational a4_polynomial(const IrrepLabel& irrep) {
  const Rational a = to_rational(irrep.n1), b = to_rational(irrep.n2);
  const Rational six_a4 = a * a * a * a + 6 * a * a * a + 6 * a * a * b * b + 6 * a * a * b + 11 * a * a +
                          18 * a * b * b + 18 * a * b + 6 * a + b * b * b * b + 2 * b * b * b + 11 * b * b + 10 * b;
  return six_a4 / 6;
}

std::vector<IrrepLabel> irreps_up_to(int twice_n1_max) {
  std::vector<IrrepLabel> out;
  for (int t1 = 0; t1 <= twice_n1_max; ++t1)
    for (int t2 = t1 % 2; t2 <= t1; t2 += 2) out.push_back(IrrepLabel::make(H(t1), H(t2)));
  return out;
}

}  // namespace

TEST_CASE("A2 matches the classical eigenvalue") {
  for (const auto& irrep : irreps_up_to(16)) {
    const auto e = casimir_delta_expansion(irrep, 2);
    CAPTURE(irrep.str());
    CHECK(e.A2 == a2_closed_form(irrep));
  }
  CHECK(a2_closed_form(IrrepLabel::equal(HalfInt(1))) == R(3));
  CHECK(a2_closed_form(IrrepLabel::make(HalfInt(3), HalfInt(1))) == R(10));
}

TEST_CASE("A4 matches the frozen polynomial") {
  for (const auto& irrep : irreps_up_to(16)) {
    CAPTURE(irrep.str());
    CHECK(casimir_delta_expansion(irrep, 4).A4 == a4_polynomial(irrep));
  }
  for (int n1 = 0; n1 <= 8; ++n1)
    CHECK(a4_polynomial(IrrepLabel::make(HalfInt(n1), HalfInt(0))) == R(n1 * (n1 + 1) * (n1 + 2) * (n1 + 3), 6));
}

TEST_CASE("series coefficient fixtures") {
  struct Fixture {
    IrrepLabel irrep;
    std::vector<Rational> coeffs;
  };
  const std::vector<Fixture> fixtures = {
      {IrrepLabel::equal(HalfInt(1)), {R(3), R(16), R(64, 3), R(512, 45)}},
      {IrrepLabel::equal(H(1)), {R(5, 4), R(15, 4), R(3, 2), R(1, 12)}},
      {IrrepLabel::make(HalfInt(2), HalfInt(0)), {R(5), R(20), R(68, 3), R(104, 9)}},
      {IrrepLabel::make(HalfInt(3), HalfInt(1)), {R(10), R(100), R(1156, 3), R(6760, 9)}},
  };
  for (const auto& f : fixtures) {
    const auto e = casimir_delta_expansion(f.irrep, 6);
    CAPTURE(f.irrep.str());
    CHECK(e.series.is_even());
    for (int k = 0; k < 4; ++k) CHECK(e.series[2 * k] == f.coeffs[static_cast<std::size_t>(k)]);
    REQUIRE(e.higher.size() == 2);
    CHECK(e.higher[0] == f.coeffs[2]);
    CHECK(e.higher[1] == f.coeffs[3]);
  }
}

TEST_CASE("ratio factor contribution to A4") {
  for (const auto& irrep : irreps_up_to(16)) {
    const Rational n1 = to_rational(irrep.n1), n2 = to_rational(irrep.n2);
    CAPTURE(irrep.str());
    CHECK(casimir_delta_expansion(irrep, 4).ratio_contribution_A4 == n2 * (n2 + 1) * (n1 + 1) * (n1 + 2));
  }
}

TEST_CASE("truncated series agrees with the exact eigenvalue near q = 1") {
  const double delta = 1e-3;
  for (const auto& irrep : irreps_up_to(10)) {
    const auto e = casimir_delta_expansion(irrep, 6);
    const double exact = casimir_eigenvalue_formula(irrep, std::exp(delta));
    const double approx = e.series.evaluate(delta);
    CAPTURE(irrep.str());
    CHECK(std::abs(exact - approx) <= 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST_CASE("expansion order validation") {
  const auto irrep = IrrepLabel::equal(HalfInt(1));
  CHECK_THROWS_AS(casimir_delta_expansion(irrep, 0), std::invalid_argument);
  CHECK_THROWS_AS(casimir_delta_expansion(irrep, 3), std::invalid_argument);
  CHECK(casimir_delta_expansion(irrep, 8).higher.size() == 3);
}

TEST_CASE("degenerate classical pairs separate under deformation") {
  const auto a = IrrepLabel::make(HalfInt(5), HalfInt(4));
  const auto b = IrrepLabel::make(HalfInt(6), HalfInt(2));
  REQUIRE(a2_closed_form(a) == a2_closed_form(b));
  for (double q : {1.01, 1.1, 1.5, 2.0}) {
    const auto r = separation_check({{a, b}}, q);
    REQUIRE(r.size() == 1);
    CHECK(r[0]);
  }
  CHECK_FALSE(separation_check({{a, a}}, 1.3)[0]);
  CHECK_THROWS_AS(separation_check({{a, b}}, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(separation_check({{a, IrrepLabel::make(HalfInt(6), HalfInt(1))}}, 1.2), std::invalid_argument);
}

TEST_CASE("contraction limit") {
  const auto from = [](HalfInt n2) {
    std::vector<HalfInt> v;
    for (int i = 0; i <= 40; ++i) v.push_back(n2 + i);
    return v;
  };
  const auto n1s = from(HalfInt(0));

  const auto zero = contraction_limit(HalfInt(0), 2.0, 1.0, n1s);
  CHECK(zero.limit_formula_value == doctest::Approx(1.0));
  CHECK(zero.converged);
  CHECK(zero.final_relative_error <= 1e-8);

  // lambda^2 homogeneity.
  for (double lambda : {0.5, 2.0, 3.0}) {
    const auto r = contraction_limit(HalfInt(1), 1.5, lambda, from(HalfInt(1)));
    const auto base = contraction_limit(HalfInt(1), 1.5, 1.0, from(HalfInt(1)));
    CHECK(r.limit_formula_value == doctest::Approx(lambda * lambda * base.limit_formula_value));
    for (std::size_t i = 0; i < r.sequence.size(); ++i)
      CHECK(r.sequence[i].scaled_eigenvalue ==
            doctest::Approx(lambda * lambda * base.sequence[i].scaled_eigenvalue).epsilon(1e-12));
  }

  // The limit grows with n2.
  double prev = 0;
  for (int t2 = 0; t2 <= 8; ++t2) {
    const double v = contraction_limit_value(H(t2), 1.3, 1.0);
    CHECK(v > prev);
    prev = v;
  }

  CHECK_THROWS_AS(contraction_limit(HalfInt(0), 1.0, 1.0, n1s), std::invalid_argument);
  CHECK_THROWS_AS(contraction_limit(HalfInt(0), 0.8, 1.0, n1s), std::invalid_argument);
  CHECK_THROWS_AS(contraction_limit(HalfInt(0), 2.0, 0.0, n1s), std::invalid_argument);
  CHECK_THROWS_AS(contraction_limit(HalfInt(0), 2.0, 1.0, {HalfInt(3), HalfInt(2)}), std::invalid_argument);
  CHECK_THROWS_AS(contraction_limit(HalfInt(2), 2.0, 1.0, {HalfInt(1)}), std::invalid_argument);
}
