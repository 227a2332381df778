#include "doctest.h"

#include <cmath>
#include <set>

#include "qso5/representation.hpp"

using namespace qso5;
using Mat = GeneratorMatrix<double>;

namespace {

HalfInt H(int twice) { return HalfInt::from_twice(twice); }

double max_abs(const Mat& m) {
  double r = 0;
  for (Index k = 0; k < m.outerSize(); ++k)
    for (Mat::InnerIterator it(m, k); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

bool all_finite(const Mat& m) {
  for (Index k = 0; k < m.outerSize(); ++k)
    for (Mat::InnerIterator it(m, k); it; ++it)
      if (!std::isfinite(it.value())) return false;
  return true;
}

double column_norm(const Mat& m, Index col) {
  double r = 0;
  for (Mat::InnerIterator it(m, col); it; ++it) r = std::max(r, std::abs(it.value()));
  return r;
}

}  // namespace

TEST_CASE("trivial irrep gives zero generators") {
  for (auto kind : {BuildKind::BasisI, BuildKind::BasisII}) {
    for (double q : {1.0, 1.3}) {
      const auto rep = build_representation<double>(kind, IrrepLabel::equal(HalfInt(0)), q);
      REQUIRE(rep.dim() == 1);
      for (const Mat* m : {&rep.e1, &rep.e2, &rep.f1, &rep.f2, &rep.e3p, &rep.e3m, &rep.e4, &rep.f3p, &rep.f3m, &rep.f4})
        CHECK(max_abs(*m) == 0.0);
      CHECK(rep.cartan.h1[0] == HalfInt(0));
      CHECK(rep.cartan.h2[0] == HalfInt(0));
    }
  }
}

TEST_CASE("Cartan eigenvalues on sample states") {
  const auto b2 = enumerate_basis2(IrrepLabel::equal(HalfInt(1)));
  const auto c2 = cartan_diagonals(b2);
  const auto i = *b2.index_of(BasisIIState{H(1), H(1), H(1), H(-1)});
  CHECK(c2.M[i] == HalfInt(-1));
  CHECK(c2.K[i] == HalfInt(0));
  CHECK(c2.h2[i] == H(1));

  const auto b1 = enumerate_basis1_merged(HalfInt(1));
  const auto c1 = cartan_diagonals(b1);
  const auto s = *b1.index_of(BasisIMergedState{HalfInt(1), HalfInt(0), HalfInt(1)});
  CHECK(c1.h1[s] == HalfInt(0));
  CHECK(c1.h2[s] == H(1));
  CHECK(c1.K[s] == HalfInt(1));

  for (int t = 0; t <= 8; ++t) {
    const HalfInt n = H(t);
    const auto b = enumerate_basis1_merged(n);
    const auto c = cartan_diagonals(b);
    const auto top = *b.index_of(BasisIMergedState{n, n, n});
    CHECK(c.M[top] == n);
    CHECK(c.K[top] == n);
    for (std::size_t k = 0; k < c.h1.size(); ++k) {
      CHECK(c.K[k] == c.h1[k] + 2 * c.h2[k]);
      CHECK(c.M4[k] == c.h1[k] + c.h2[k]);
      CHECK(c.M2[k] == c.h2[k]);
    }
  }
}

TEST_CASE("highest state of Basis I is annihilated by the raising generators") {
  for (int t = 1; t <= 8; ++t) {
    const HalfInt n = H(t);
    const auto rep = build_basis1_equal<double>(n, 1.2);
    const auto top = *rep.basis.index_of(BasisIMergedState{n, n, n});
    CAPTURE(n.str());
    CHECK(column_norm(rep.e1, top) == 0.0);
    CHECK(column_norm(rep.e2, top) == 0.0);
  }
}

TEST_CASE("e1 sparsity pattern in Basis I") {
  for (int t = 0; t <= 8; ++t) {
    const HalfInt n = H(t);
    long long expected = 0;
    for (int tj = t % 2; tj <= t; tj += 2) expected += static_cast<long long>(tj) * (tj + 1);
    CHECK(build_basis1_equal<double>(n, 1.4).e1.nonZeros() == expected);
  }
}

TEST_CASE("lowering generators are transposes and all entries are real and finite") {
  for (int t = 0; t <= 6; ++t) {
    for (double q : {0.7, 1.0, 1.25, 2.0}) {
      for (auto kind : {BuildKind::BasisI, BuildKind::BasisII}) {
        const auto rep = build_representation<double>(kind, IrrepLabel::equal(H(t)), q);
        CHECK(max_abs(Mat(rep.f1 - Mat(rep.e1.transpose()))) == 0.0);
        CHECK(max_abs(Mat(rep.f2 - Mat(rep.e2.transpose()))) == 0.0);
        for (const Mat* m : {&rep.e1, &rep.e2, &rep.e3p, &rep.e3m, &rep.e4}) CHECK(all_finite(*m));
        CHECK(rep.derived.within(1e-10));
      }
    }
  }
}

TEST_CASE("classical Basis II coefficient table") {
  for (int t = 0; t <= 8; ++t) {
    const HalfInt n = H(t);
    const ClassicalCoefficientTable<double> table(IrrepLabel::equal(n));
    for (int tj = 0; tj <= t; ++tj) {
      const HalfInt j2 = H(tj), j4 = n - j2;
      CHECK_FALSE(table(1, 1, j2, j4).has_value());
      if (j4 > HalfInt(0)) {
        const auto pm = table(1, -1, j2, j4);
        REQUIRE(pm.has_value());
        CHECK(*pm == doctest::Approx(1.0).epsilon(1e-14));
      }
    }
  }
  // c_(eps,eps')(j2,j4) = eps eps' c_(-eps,-eps')(j2 + eps/2, j4 + eps'/2)
  const auto irrep = IrrepLabel::make(HalfInt(4), HalfInt(2));
  const ClassicalCoefficientTable<double> table(irrep);
  std::set<std::pair<HalfInt, HalfInt>> domain;
  const auto basis = enumerate_basis2(irrep);
  for (const auto& s : basis.states())
    domain.emplace(std::get<BasisIIState>(s).j2, std::get<BasisIIState>(s).j4);
  int compared = 0;
  for (const auto& [j2, j4] : domain)
    for (int eps : {1, -1})
      for (int eps_p : {1, -1}) {
        const HalfInt j2t = j2 + eps * kHalf, j4t = j4 + eps_p * kHalf;
        if (!domain.count({j2t, j4t})) continue;
        const auto lhs = table(eps, eps_p, j2, j4);
        const auto rhs = table(-eps, -eps_p, j2t, j4t);
        CHECK(lhs.has_value() == rhs.has_value());
        if (lhs && rhs) CHECK(*lhs == doctest::Approx(eps * eps_p * *rhs).epsilon(1e-13));
        ++compared;
      }
  CHECK(compared > 20);
  CHECK_THROWS_AS(table(0, 1, HalfInt(1), HalfInt(1)), std::invalid_argument);
}

TEST_CASE("q-deformed Basis II reduces to the classical construction at q = 1") {
  for (int t = 0; t <= 8; ++t) {
    const HalfInt n = H(t);
    const auto deformed = build_basis2_qdeformed_equal<double>(n, 1.0);
    const auto classical = build_basis2_classical<double>(IrrepLabel::equal(n));
    CAPTURE(n.str());
    CHECK(max_abs(Mat(deformed.e1 - classical.e1)) <= 1e-12);
    CHECK(max_abs(Mat(deformed.e2 - classical.e2)) <= 1e-12);
  }
}

TEST_CASE("matrix elements are continuous at q = 1") {
  const double q = 1.0 + 1e-6;
  for (int t = 0; t <= 6; ++t) {
    const HalfInt n = H(t);
    for (auto kind : {BuildKind::BasisI, BuildKind::BasisII}) {
      const auto a = build_representation<double>(kind, IrrepLabel::equal(n), 1.0);
      const auto b = build_representation<double>(kind, IrrepLabel::equal(n), q);
      for (auto [x, y] : {std::pair{&a.e1, &b.e1}, std::pair{&a.e2, &b.e2}}) {
        const double scale = std::max(1.0, max_abs(*x));
        CHECK(max_abs(Mat(*x - *y)) <= 1e-4 * scale);
      }
    }
  }
}

TEST_CASE("derived generators satisfy both defining forms") {
  for (int t = 1; t <= 6; ++t) {
    const auto rep = build_basis2_qdeformed_equal<double>(H(t), 1.3);
    CHECK(rep.derived.e4_mismatch <= 1e-10);
    CHECK(rep.derived.f4_mismatch <= 1e-10);
  }
}

TEST_CASE("unsupported combinations and invalid q") {
  const auto general = IrrepLabel::make(HalfInt(2), HalfInt(1));
  CHECK_THROWS_AS(build_representation<double>(BuildKind::BasisI, general, 1.0), UnsupportedCase);
  CHECK_THROWS_AS(build_representation<double>(BuildKind::BasisII, general, 1.1), UnsupportedCase);
  CHECK_NOTHROW(build_representation<double>(BuildKind::BasisII, general, 1.0));
  CHECK_THROWS_AS(build_basis1_equal<double>(HalfInt(1), 0.0), std::invalid_argument);
  CHECK_THROWS_AS(build_basis1_equal<double>(HalfInt(1), -1.0), std::invalid_argument);
  CHECK_THROWS_AS(build_basis2_qdeformed_equal<double>(HalfInt(1), -2.0), std::invalid_argument);
}

TEST_CASE("high precision construction agrees with double") {
  const auto hp = build_basis1_equal<HighPrecision>(H(3), HighPrecision("1.2"));
  const auto dp = build_basis1_equal<double>(H(3), 1.2);
  REQUIRE(hp.dim() == dp.dim());
  double diff = 0;
  for (Index k = 0; k < dp.e2.outerSize(); ++k)
    for (Mat::InnerIterator it(dp.e2, k); it; ++it)
      diff = std::max(diff, std::abs(it.value() - static_cast<double>(hp.e2.coeff(it.row(), it.col()))));
  CHECK(diff <= 1e-14);
}
