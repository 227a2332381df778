#ifndef QSO5_VERIFY_HPP
#define QSO5_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "qso5/representation.hpp"

namespace qso5 {

/// One tag per checked identity.
enum class RelationId {
  // q^{+-h} X q^{-+h} = q^{+-c} X, both signs folded into one residual.
  H1E1,
  H1F1,
  TwoH2E1,
  TwoH2F1,
  H1E2,
  H1F2,
  H2E2,
  H2F2,
  CommE1F2,
  CommE2F1,
  CommE1F1,
  CommE2F2,
  E2E3Plus,
  E2E3Minus,
  F3PlusF2,
  F3MinusF2,
  CommE1E4,
  CommF1F4,
  E4TwoForms,
  F4TwoForms,
  TransposeE1F1,
  TransposeE2F2,
};

std::string to_string(RelationId id);
const std::vector<RelationId>& all_relations();

struct RelationResidual {
  RelationId relation_id;
  double max_abs_residual = 0;
  Index matrix_dim = 0;
};

struct CasimirCheck {
  double max_offdiag = 0;
  double eigenvalue_spread = 0;
  double formula_deviation = 0;
  double asymmetry = 0;
  double formula_value = 0;

  double worst() const { return std::max({max_offdiag, eigenvalue_spread, formula_deviation, asymmetry}); }
};

struct VerificationReport {
  IrrepLabel irrep;
  BasisKind basis_kind;
  std::string q;
  std::string precision;
  std::vector<RelationResidual> residuals;
  CasimirCheck casimir;
  double tolerance = 0;
  double casimir_tolerance = 0;
  bool passed = false;

  double worst_relation() const {
    double w = 0;
    for (const auto& r : residuals) w = std::max(w, r.max_abs_residual);
    return w;
  }
};

namespace detail {

template <class Scalar>
Scalar max_abs_entry(const GeneratorMatrix<Scalar>& m) {
  using std::abs;
  Scalar r(0);
  for (Index k = 0; k < m.outerSize(); ++k)
    for (typename GeneratorMatrix<Scalar>::InnerIterator it(m, k); it; ++it) {
      Scalar a = abs(it.value());
      if (a > r) r = a;
    }
  return r;
}

template <class Scalar>
GeneratorMatrix<Scalar> diagonal(const std::vector<Scalar>& values) {
  const auto n = static_cast<Index>(values.size());
  GeneratorMatrix<Scalar> d(n, n);
  d.reserve(Eigen::VectorXi::Constant(n, 1));
  for (Index i = 0; i < n; ++i) d.insert(i, i) = values[static_cast<std::size_t>(i)];
  d.makeCompressed();
  return d;
}

template <class Scalar, class Fn>
std::vector<Scalar> map_states(Index n, Fn&& fn) {
  std::vector<Scalar> v(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = fn(static_cast<std::size_t>(i));
  return v;
}

template <class Scalar>
void require_same_size(const GeneratorMatrix<Scalar>& a, const GeneratorMatrix<Scalar>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("generator matrices disagree in dimension");
}

// max over sign s of |X_rc (q^{s * weight * (h_r - h_c)} - q^{s * shift})|
template <class Scalar>
Scalar cartan_exchange_residual(const Deformation<Scalar>& d, const std::vector<HalfInt>& h, int weight,
                                const GeneratorMatrix<Scalar>& x, int shift) {
  using std::abs;
  Scalar worst(0);
  for (Index k = 0; k < x.outerSize(); ++k)
    for (typename GeneratorMatrix<Scalar>::InnerIterator it(x, k); it; ++it) {
      const HalfInt dh = weight * (h[static_cast<std::size_t>(it.row())] - h[static_cast<std::size_t>(it.col())]);
      for (int s : {1, -1}) {
        Scalar r = abs(Scalar(it.value() * (d.pow(s * dh) - d.pow(HalfInt(s * shift)))));
        if (r > worst) worst = r;
      }
    }
  return worst;
}

}  // namespace detail

/// Residuals of the defining relations, the e4/f4 two-form consistency and
/// the transpose convention, each as a max absolute matrix entry.
template <class Scalar>
std::vector<RelationResidual> check_relations(const Representation<Scalar>& rep) {
  using M = GeneratorMatrix<Scalar>;
  using detail::max_abs_entry;
  const Index n = rep.dim();
  for (const M* m : {&rep.e1, &rep.e2, &rep.f1, &rep.f2, &rep.e3p, &rep.e3m, &rep.e4, &rep.f3p, &rep.f3m, &rep.f4})
    if (m->rows() != n || m->cols() != n) throw std::invalid_argument("generator matrix dimension mismatch");

  const Deformation<Scalar> d(rep.q);
  const Scalar& q = rep.q;
  const Scalar q2 = q * q;
  const Scalar qm2 = Scalar(1) / q2;
  const auto& h1 = rep.cartan.h1;
  const auto& h2 = rep.cartan.h2;
  const auto& e1 = rep.e1;
  const auto& e2 = rep.e2;
  const auto& f1 = rep.f1;
  const auto& f2 = rep.f2;

  std::vector<RelationResidual> out;
  const auto push = [&](RelationId id, const Scalar& v) {
    out.push_back({id, static_cast<double>(v), n});
  };

  push(RelationId::H1E1, detail::cartan_exchange_residual(d, h1, 1, e1, 1));
  push(RelationId::H1F1, detail::cartan_exchange_residual(d, h1, 1, f1, -1));
  push(RelationId::TwoH2E1, detail::cartan_exchange_residual(d, h2, 2, e1, -1));
  push(RelationId::TwoH2F1, detail::cartan_exchange_residual(d, h2, 2, f1, 1));
  push(RelationId::H1E2, detail::cartan_exchange_residual(d, h1, 1, e2, -1));
  push(RelationId::H1F2, detail::cartan_exchange_residual(d, h1, 1, f2, 1));
  push(RelationId::H2E2, detail::cartan_exchange_residual(d, h2, 1, e2, 1));
  push(RelationId::H2F2, detail::cartan_exchange_residual(d, h2, 1, f2, -1));

  push(RelationId::CommE1F2, max_abs_entry(M(e1 * f2 - f2 * e1)));
  push(RelationId::CommE2F1, max_abs_entry(M(e2 * f1 - f1 * e2)));

  const M two_h1 = detail::diagonal(detail::map_states<Scalar>(n, [&](std::size_t i) { return d.bracket(2 * h1[i]); }));
  const M two_h2 =
      detail::diagonal(detail::map_states<Scalar>(n, [&](std::size_t i) { return d.bracket(2 * h2[i], 2); }));
  push(RelationId::CommE1F1, max_abs_entry(M(e1 * f1 - f1 * e1 - two_h1)));
  push(RelationId::CommE2F2, max_abs_entry(M(e2 * f2 - f2 * e2 - two_h2)));

  push(RelationId::E2E3Plus, max_abs_entry(M(e2 * rep.e3p - qm2 * M(rep.e3p * e2))));
  push(RelationId::E2E3Minus, max_abs_entry(M(e2 * rep.e3m - q2 * M(rep.e3m * e2))));
  push(RelationId::F3PlusF2, max_abs_entry(M(rep.f3p * f2 - qm2 * M(f2 * rep.f3p))));
  push(RelationId::F3MinusF2, max_abs_entry(M(rep.f3m * f2 - q2 * M(f2 * rep.f3m))));
  push(RelationId::CommE1E4, max_abs_entry(M(e1 * rep.e4 - rep.e4 * e1)));
  push(RelationId::CommF1F4, max_abs_entry(M(f1 * rep.f4 - rep.f4 * f1)));

  push(RelationId::E4TwoForms, rep.derived.e4_mismatch);
  push(RelationId::F4TwoForms, rep.derived.f4_mismatch);

  push(RelationId::TransposeE1F1, max_abs_entry(M(f1 - M(e1.transpose()))));
  push(RelationId::TransposeE2F2, max_abs_entry(M(f2 - M(e2.transpose()))));
  return out;
}

/// The quadratic Casimir
///   A = (1/[2]) { (f1 e1 + [M][M+1]) [2K+3]_2/[2K+3] + [K][K+3] }
///     + f2 e2 + f4 e4 / [2]^2 + (f3+ e3+ q^{2M+1} + f3- e3- q^{-2M-1}) / [2]^2,
/// with the Cartan functions acting as diagonal matrices on the side written.
template <class Scalar>
GeneratorMatrix<Scalar> build_casimir(const Representation<Scalar>& rep) {
  using M = GeneratorMatrix<Scalar>;
  const Index n = rep.dim();
  const Deformation<Scalar> d(rep.q);
  const auto& Mc = rep.cartan.M;
  const auto& Kc = rep.cartan.K;
  const Scalar two = d.bracket(HalfInt(2));
  const Scalar inv_two = Scalar(1) / two;
  const Scalar inv_two_sq = inv_two * inv_two;

  const M mm1 = detail::diagonal(
      detail::map_states<Scalar>(n, [&](std::size_t i) { return d.bracket(Mc[i]) * d.bracket(Mc[i] + 1); }));
  const M ratio = detail::diagonal(
      detail::map_states<Scalar>(n, [&](std::size_t i) { return d.doubled_over_single(2 * Kc[i] + 3); }));
  const M kk3 = detail::diagonal(
      detail::map_states<Scalar>(n, [&](std::size_t i) { return d.bracket(Kc[i]) * d.bracket(Kc[i] + 3); }));
  const M up = detail::diagonal(detail::map_states<Scalar>(n, [&](std::size_t i) { return d.pow(2 * Mc[i] + 1); }));
  const M down =
      detail::diagonal(detail::map_states<Scalar>(n, [&](std::size_t i) { return d.pow(-(2 * Mc[i] + 1)); }));

  M a = inv_two * M(M(M(rep.f1 * rep.e1) + mm1) * ratio + kk3);
  a += M(rep.f2 * rep.e2);
  a += inv_two_sq * M(rep.f4 * rep.e4);
  a += inv_two_sq * M(M(M(rep.f3p * rep.e3p) * up) + M(M(rep.f3m * rep.e3m) * down));
  a.makeCompressed();
  return a;
}

/// (1/[2]) { [n1][n1+3] + [n2][n2+1] [2n1+3]_2 / [2n1+3] }.
template <class Scalar>
Scalar casimir_eigenvalue_formula(const IrrepLabel& irrep, const Scalar& q) {
  const Deformation<Scalar> d(q);
  const HalfInt n1 = irrep.n1, n2 = irrep.n2;
  const Scalar ratio = ratio_bracket<Scalar>(Scalar(1), to_scalar<Scalar>(2 * n1 + 3), Scalar(2), Scalar(1),
                                             DeformationParams<Scalar>(q));
  return (d.bracket(n1) * d.bracket(n1 + 3) + d.bracket(n2) * d.bracket(n2 + 1) * ratio) / d.bracket(HalfInt(2));
}

template <class Scalar>
CasimirCheck check_casimir(const Representation<Scalar>& rep) {
  using std::abs;
  const GeneratorMatrix<Scalar> a = build_casimir(rep);
  const Scalar expected = casimir_eigenvalue_formula(rep.irrep, rep.q);

  Scalar offdiag(0), asym(0), dev(0);
  Scalar lo = std::numeric_limits<Scalar>::max(), hi = -std::numeric_limits<Scalar>::max();
  std::vector<Scalar> diag(static_cast<std::size_t>(rep.dim()), Scalar(0));
  for (Index k = 0; k < a.outerSize(); ++k)
    for (typename GeneratorMatrix<Scalar>::InnerIterator it(a, k); it; ++it) {
      if (it.row() == it.col()) {
        diag[static_cast<std::size_t>(it.row())] = it.value();
      } else {
        offdiag = std::max<Scalar>(offdiag, abs(it.value()));
        asym = std::max<Scalar>(asym, abs(Scalar(it.value() - a.coeff(it.col(), it.row()))));
      }
    }
  for (const auto& v : diag) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    dev = std::max<Scalar>(dev, abs(Scalar(v - expected)));
  }

  CasimirCheck c;
  c.max_offdiag = static_cast<double>(offdiag);
  c.eigenvalue_spread = diag.empty() ? 0.0 : static_cast<double>(Scalar(hi - lo));
  c.formula_deviation = static_cast<double>(dev);
  c.asymmetry = static_cast<double>(asym);
  c.formula_value = static_cast<double>(expected);
  return c;
}

template <class Scalar>
std::string precision_name() {
  return std::is_same_v<Scalar, double> ? "double" : "high";
}

/// Tolerance for the Casimir check: tol * max(q, 1/q)^{2 n1 + 3}, never below tol.
template <class Scalar>
double casimir_tolerance(const IrrepLabel& irrep, const Scalar& q, double tol) {
  using std::pow;
  const double qd = static_cast<double>(q);
  const double big = std::max(qd, 1.0 / qd);
  return tol * std::max(1.0, std::pow(big, 2.0 * irrep.n1.value() + 3.0));
}

template <class Scalar>
VerificationReport verify(const Representation<Scalar>& rep, double tolerance) {
  VerificationReport r{rep.irrep, rep.basis.kind(), to_decimal_string(rep.q), precision_name<Scalar>(), {}, {},
                       tolerance, casimir_tolerance(rep.irrep, rep.q, tolerance), false};
  r.residuals = check_relations(rep);
  r.casimir = check_casimir(rep);
  r.passed = r.worst_relation() <= r.tolerance && r.casimir.worst() <= r.casimir_tolerance;
  return r;
}

/// Default tolerance per precision mode.
template <class Scalar>
double default_tolerance() {
  return std::is_same_v<Scalar, double> ? 1e-9 : 1e-30;
}

}  // namespace qso5

#endif  // QSO5_VERIFY_HPP
