#ifndef QSO5_REPRESENTATION_HPP
#define QSO5_REPRESENTATION_HPP

#include <Eigen/SparseCore>

#include <cmath>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qso5/basis.hpp"
#include "qso5/qnumber.hpp"

namespace qso5 {

/// Sparse linear operator on an enumerated basis; entry (row, col) = <row| X |col>.
template <class Scalar>
using GeneratorMatrix = Eigen::SparseMatrix<Scalar>;

/// Requested (basis, irrep) combination has no known closed-form solution.
class UnsupportedCase : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// A matrix element targets a label outside the enumeration, or a radicand is negative.
class ConstructionError : public std::logic_error {
public:
  using std::logic_error::logic_error;
};

/// Per-state eigenvalues of the Cartan elements.
///
/// h1 = M, K = h1 + 2 h2, M2 = h2, M4 = h1 + h2.
struct CartanDiagonals {
  std::vector<HalfInt> h1, h2, M, K, M2, M4;
};

CartanDiagonals cartan_diagonals(const BasisEnumeration& basis);

/// Max |difference| between the two printed expressions for e4 and f4.
template <class Scalar>
struct DerivedConsistency {
  Scalar e4_mismatch{0};
  Scalar f4_mismatch{0};
  bool within(const Scalar& tol) const { return e4_mismatch <= tol && f4_mismatch <= tol; }
};

template <class Scalar>
struct Representation {
  IrrepLabel irrep;
  BasisEnumeration basis;
  Scalar q{1};
  CartanDiagonals cartan;

  GeneratorMatrix<Scalar> e1, e2, f1, f2;
  GeneratorMatrix<Scalar> e3p, e3m, e4, f3p, f3m, f4;
  DerivedConsistency<Scalar> derived;

  Index dim() const { return basis.size(); }
};

namespace detail {

struct BracketFactor {
  HalfInt arg;
  int p = 1;
};

/// sqrt(prod [num]_p / prod [den]_p), or nullopt when a numerator factor is exactly zero.
template <class Scalar>
std::optional<Scalar> bracket_root(const Deformation<Scalar>& d, std::initializer_list<BracketFactor> num,
                                   std::initializer_list<BracketFactor> den) {
  using std::sqrt;
  for (const auto& f : num)
    if (f.arg == HalfInt(0)) return std::nullopt;
  Scalar r(1);
  for (const auto& f : num) r *= d.bracket(f.arg, f.p);
  for (const auto& f : den) {
    if (f.arg == HalfInt(0)) throw DivisionByZero("matrix element denominator [0] with nonzero prefactor");
    r /= d.bracket(f.arg, f.p);
  }
  if (r < 0) throw ConstructionError("negative quantity under a square root");
  return Scalar(sqrt(r));
}

template <class Scalar>
class TripletSink {
public:
  explicit TripletSink(const BasisEnumeration& basis) : basis_(basis) {}

  void add(const StateLabel& target, Index col, const Scalar& value) {
    if (value == 0) return;
    auto row = basis_.index_of(target);
    if (!row)
      throw ConstructionError("matrix element from " + to_string(basis_.state(col)) + " targets " +
                              to_string(target) + " outside the basis");
    triplets_.emplace_back(*row, col, value);
  }

  GeneratorMatrix<Scalar> matrix() const {
    GeneratorMatrix<Scalar> m(basis_.size(), basis_.size());
    m.setFromTriplets(triplets_.begin(), triplets_.end());
    m.makeCompressed();
    return m;
  }

private:
  const BasisEnumeration& basis_;
  std::vector<Eigen::Triplet<Scalar>> triplets_;
};

template <class Scalar>
GeneratorMatrix<Scalar> transposed(const GeneratorMatrix<Scalar>& m) {
  GeneratorMatrix<Scalar> t = m.transpose();
  t.makeCompressed();
  return t;
}

template <class Scalar>
Representation<Scalar> empty_representation(BasisEnumeration basis, Scalar q) {
  Representation<Scalar> rep{basis.irrep(), std::move(basis), std::move(q), {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}, {}};
  rep.cartan = cartan_diagonals(rep.basis);
  return rep;
}

}  // namespace detail

/// Computes e3(+-), e4, f3(+-), f4 from e1, e2, f1, f2 and records the
/// mismatch between the two equivalent expressions for e4 and f4.
template <class Scalar>
const DerivedConsistency<Scalar>& build_derived(Representation<Scalar>& rep) {
  const Scalar& q = rep.q;
  const Scalar qi = Scalar(1) / q;
  const auto& e1 = rep.e1;
  const auto& e2 = rep.e2;
  const auto& f1 = rep.f1;
  const auto& f2 = rep.f2;
  using M = GeneratorMatrix<Scalar>;

  const M e1e2 = e1 * e2, e2e1 = e2 * e1;
  const M f2f1 = f2 * f1, f1f2 = f1 * f2;
  rep.e3p = q * e1e2 - qi * e2e1;
  rep.e3m = qi * e1e2 - q * e2e1;
  rep.f3p = q * f2f1 - qi * f1f2;
  rep.f3m = qi * f2f1 - q * f1f2;

  rep.e4 = qi * M(e1 * rep.e3p) - q * M(rep.e3p * e1);
  rep.f4 = qi * M(rep.f3p * f1) - q * M(f1 * rep.f3p);
  const M e4_alt = q * M(e1 * rep.e3m) - qi * M(rep.e3m * e1);
  const M f4_alt = q * M(rep.f3m * f1) - qi * M(f1 * rep.f3m);

  for (M* m : {&rep.e3p, &rep.e3m, &rep.e4, &rep.f3p, &rep.f3m, &rep.f4}) {
    m->prune(Scalar(0));
    m->makeCompressed();
  }

  const auto max_abs = [](const M& m) {
    Scalar r(0);
    for (Index k = 0; k < m.outerSize(); ++k)
      for (typename M::InnerIterator it(m, k); it; ++it) {
        using std::abs;
        Scalar a = abs(it.value());
        if (a > r) r = a;
      }
    return r;
  };
  rep.derived.e4_mismatch = max_abs(M(rep.e4 - e4_alt));
  rep.derived.f4_mismatch = max_abs(M(rep.f4 - f4_alt));
  return rep.derived;
}

/// Basis I, n1 = n2 = n, any q > 0, on the l-suppressed basis |j m k>.
template <class Scalar>
Representation<Scalar> build_basis1_equal(HalfInt n, const Scalar& q) {
  using detail::bracket_root;
  if (!(q > 0)) throw std::invalid_argument("deformation parameter q must be positive");
  const Deformation<Scalar> d(q);
  auto rep = detail::empty_representation<Scalar>(enumerate_basis1_merged(n), q);
  const Scalar inv_two = Scalar(1) / d.bracket(HalfInt(2));

  // a(j,k) = [2]^{-1} ([n-j]_2 [n+j+2]_2 [j+k+1] [j+k+2] / ([2j+3][2j+1][j+1]_2^2))^{1/2}
  const auto a = [&](HalfInt j, HalfInt k) -> std::optional<Scalar> {
    auto r = bracket_root(d, {{n - j, 2}, {n + j + 2, 2}, {j + k + 1}, {j + k + 2}},
                          {{2 * j + 3}, {2 * j + 1}, {j + 1, 2}, {j + 1, 2}});
    if (r) *r *= inv_two;
    return r;
  };
  const auto b = [&](HalfInt j, HalfInt k) { return a(j - 1, -k - 1); };
  // c(j,k) = [2]^{-1} [n+1]_2 ([j-k][j+k+1])^{1/2} / ([j+1]_2 [j]_2)
  const auto c = [&](HalfInt j, HalfInt k) -> std::optional<Scalar> {
    auto r = bracket_root(d, {{j - k}, {j + k + 1}}, {});
    if (!r) return r;
    if (j == HalfInt(0)) throw DivisionByZero("c(0,k) evaluated with nonzero prefactor");
    *r *= inv_two * d.bracket(n + 1, 2) / (d.bracket(j + 1, 2) * d.bracket(j, 2));
    return r;
  };

  detail::TripletSink<Scalar> e1(rep.basis), e2(rep.basis);
  for (Index col = 0; col < rep.dim(); ++col) {
    const auto& s = rep.basis.template as<BasisIMergedState>(col);
    const HalfInt j = s.j, m = s.m, k = s.k;

    if (auto v = bracket_root(d, {{j - m}, {j + m + 1}}, {})) e1.add(BasisIMergedState{j, m + 1, k}, col, *v);

    // Each e2 term: m-prefactor first; a zero prefactor drops the term before
    // its (possibly singular) coefficient is evaluated.
    if (auto pre = bracket_root(d, {{j - m + 1}, {j - m + 2}}, {}))
      if (auto coef = a(j, k)) e2.add(BasisIMergedState{j + 1, m - 1, k + 1}, col, *pre * *coef);
    if (auto pre = bracket_root(d, {{j + m}, {j + m - 1}}, {}))
      if (auto coef = b(j, k)) e2.add(BasisIMergedState{j - 1, m - 1, k + 1}, col, *pre * *coef);
    if (auto pre = bracket_root(d, {{j + m}, {j - m + 1}}, {}))
      if (auto coef = c(j, k)) e2.add(BasisIMergedState{j, m - 1, k + 1}, col, *pre * *coef);
  }

  rep.e1 = e1.matrix();
  rep.e2 = e2.matrix();
  rep.f1 = detail::transposed(rep.e1);
  rep.f2 = detail::transposed(rep.e2);
  build_derived(rep);
  return rep;
}

/// The classical (q = 1) Basis II coefficient table c_(eps,eps')(j2, j4) for irrep (n1, n2).
///
/// c_(++) and c_(+-) are given in closed form; c_(--) and c_(-+) follow from
/// c_(eps,eps')(j2,j4) = eps eps' c_(-eps,-eps')(j2 + eps/2, j4 + eps'/2).
/// Returns nullopt where a numerator factor vanishes.
template <class Scalar>
class ClassicalCoefficientTable {
public:
  explicit ClassicalCoefficientTable(IrrepLabel irrep) : irrep_(irrep), d_(Scalar(1)) {}

  std::optional<Scalar> operator()(int eps, int eps_p, HalfInt j2, HalfInt j4) const {
    if (eps == 1 && eps_p == 1) return plus_plus(j2, j4);
    if (eps == 1 && eps_p == -1) return plus_minus(j2, j4);
    if (eps == -1 && eps_p == -1) return plus_plus(j2 - kHalf, j4 - kHalf);
    if (eps == -1 && eps_p == 1) {
      auto v = plus_minus(j2 - kHalf, j4 + kHalf);
      if (v) *v = -*v;
      return v;
    }
    throw std::invalid_argument("eps, eps' must be +1 or -1");
  }

private:
  std::optional<Scalar> plus_plus(HalfInt j2, HalfInt j4) const {
    const HalfInt n1 = irrep_.n1, n2 = irrep_.n2, s = j2 + j4;
    return detail::bracket_root(d_, {{n1 + s + 3}, {n1 - s}, {s + n2 + 2}, {s - n2 + 1}},
                                {{2 * j2 + 1}, {2 * j2 + 2}, {2 * j4 + 1}, {2 * j4 + 2}});
  }
  std::optional<Scalar> plus_minus(HalfInt j2, HalfInt j4) const {
    const HalfInt n1 = irrep_.n1, n2 = irrep_.n2;
    return detail::bracket_root(d_, {{n1 + j2 - j4 + 2}, {n1 - j2 + j4 + 1}, {j2 - j4 + n2 + 1}, {j4 - j2 + n2}},
                                {{2 * j2 + 1}, {2 * j2 + 2}, {2 * j4}, {2 * j4 + 1}});
  }

  IrrepLabel irrep_;
  Deformation<Scalar> d_;
};

/// Basis II at q = 1 for any irrep (n1, n2).
template <class Scalar>
Representation<Scalar> build_basis2_classical(const IrrepLabel& irrep) {
  using detail::bracket_root;
  const Deformation<Scalar> d(Scalar(1));
  auto rep = detail::empty_representation<Scalar>(enumerate_basis2(irrep), Scalar(1));
  const ClassicalCoefficientTable<Scalar> table(irrep);

  detail::TripletSink<Scalar> e1(rep.basis), e2(rep.basis);
  for (Index col = 0; col < rep.dim(); ++col) {
    const auto& s = rep.basis.template as<BasisIIState>(col);
    const HalfInt j2 = s.j2, m2 = s.m2, j4 = s.j4, m4 = s.m4;

    if (auto v = bracket_root(d, {{j2 - m2}, {j2 + m2 + 1}}, {})) e2.add(BasisIIState{j2, m2 + 1, j4, m4}, col, *v);

    for (int eps : {1, -1}) {
      // (j2 - eps m2 + (1+eps)/2)^{1/2}
      auto m2_factor = bracket_root(d, {{j2 - eps * m2 + (eps + 1) / 2}}, {});
      if (!m2_factor) continue;
      for (int eps_p : {1, -1}) {
        // (j4 + eps' m4 + (1+eps')/2)^{1/2}
        auto m4_factor = bracket_root(d, {{j4 + eps_p * m4 + (eps_p + 1) / 2}}, {});
        if (!m4_factor) continue;
        auto coef = table(eps, eps_p, j2, j4);
        if (!coef) continue;
        e1.add(BasisIIState{j2 + eps * kHalf, m2 - kHalf, j4 + eps_p * kHalf, m4 + kHalf}, col,
               *m2_factor * *m4_factor * *coef);
      }
    }
  }

  rep.e1 = e1.matrix();
  rep.e2 = e2.matrix();
  rep.f1 = detail::transposed(rep.e1);
  rep.f2 = detail::transposed(rep.e2);
  build_derived(rep);
  return rep;
}

/// c_(+-)(j2) = ([2j2+1][2j2+2] / ([2j2+1]_2 [2j2+2]_2))^{1/2}; c_(-+)(j2) = -c_(+-)(j2 - 1/2).
template <class Scalar>
std::optional<Scalar> qdeformed_coefficient(const Deformation<Scalar>& d, int eps, HalfInt j2) {
  const HalfInt x = eps == 1 ? j2 : j2 - kHalf;
  auto v = detail::bracket_root(d, {{2 * x + 1}, {2 * x + 2}}, {{2 * x + 1, 2}, {2 * x + 2, 2}});
  if (v && eps == -1) *v = -*v;
  return v;
}

/// Basis II, n1 = n2 = n, any q > 0. Only (eps, -eps) terms contribute.
template <class Scalar>
Representation<Scalar> build_basis2_qdeformed_equal(HalfInt n, const Scalar& q) {
  using detail::bracket_root;
  using std::sqrt;
  if (!(q > 0)) throw std::invalid_argument("deformation parameter q must be positive");
  const Deformation<Scalar> d(q);
  auto rep = detail::empty_representation<Scalar>(enumerate_basis2(IrrepLabel::equal(n)), q);
  const Scalar top = d.bracket(n + 1, 2);

  detail::TripletSink<Scalar> e1(rep.basis), e2(rep.basis);
  for (Index col = 0; col < rep.dim(); ++col) {
    const auto& s = rep.basis.template as<BasisIIState>(col);
    const HalfInt j2 = s.j2, m2 = s.m2, j4 = s.j4, m4 = s.m4;

    if (auto v = bracket_root(d, {{j2 - m2, 2}, {j2 + m2 + 1, 2}}, {}))
      e2.add(BasisIIState{j2, m2 + 1, j4, m4}, col, *v);

    for (int eps : {1, -1}) {
      auto m2_factor = bracket_root(d, {{j2 - eps * m2 + (eps + 1) / 2, 2}}, {});
      if (!m2_factor) continue;
      // ([n+1]_2 - [x2]_2)^{1/2}, x2 = j2 + eps m4 + (1+eps)/2; zero exactly when x2 = n+1.
      const HalfInt x2 = j2 + eps * m4 + (eps + 1) / 2;
      if (x2 == n + 1) continue;
      if (x2 > n + 1) throw ConstructionError("negative m4-factor in q-deformed Basis II");
      const Scalar m4_factor = sqrt(Scalar(top - d.bracket(x2, 2)));
      auto coef = qdeformed_coefficient(d, eps, j2);
      if (!coef) continue;
      e1.add(BasisIIState{j2 + eps * kHalf, m2 - kHalf, j4 - eps * kHalf, m4 + kHalf}, col,
             *m2_factor * m4_factor * *coef);
    }
  }

  rep.e1 = e1.matrix();
  rep.e2 = e2.matrix();
  rep.f1 = detail::transposed(rep.e1);
  rep.f2 = detail::transposed(rep.e2);
  build_derived(rep);
  return rep;
}

/// Which construction to use.
enum class BuildKind { BasisI, BasisII };

/// Dispatches to the implemented builders; anything else is UnsupportedCase.
template <class Scalar>
Representation<Scalar> build_representation(BuildKind kind, const IrrepLabel& irrep, const Scalar& q) {
  const bool equal = irrep.n1 == irrep.n2;
  if (kind == BuildKind::BasisI) {
    if (!equal)
      throw UnsupportedCase("Basis I matrix elements are only available for n1 = n2; no closed form is "
                            "implemented for general (n1, n2), including n2 = 0 and n2 = 1/2");
    return build_basis1_equal<Scalar>(irrep.n1, q);
  }
  if (q == 1) return build_basis2_classical<Scalar>(irrep);
  if (!equal)
    throw UnsupportedCase("q-deformed Basis II matrix elements are only available for n1 = n2; no solution "
                          "is known for general (n1, n2)");
  return build_basis2_qdeformed_equal<Scalar>(irrep.n1, q);
}

}  // namespace qso5

#endif  // QSO5_REPRESENTATION_HPP
