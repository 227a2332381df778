#ifndef QSO5_BASIS_HPP
#define QSO5_BASIS_HPP

#include <Eigen/Core>

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "qso5/half_integer.hpp"

namespace qso5 {

using Index = Eigen::Index;

/// Highest-weight labels (n1, n2) of an irrep: n1 >= n2 >= 0, equal parity.
struct IrrepLabel {
  HalfInt n1;
  HalfInt n2;

  /// Throws std::invalid_argument unless the labels describe an irrep.
  static IrrepLabel make(HalfInt n1, HalfInt n2);
  static IrrepLabel equal(HalfInt n) { return make(n, n); }

  bool is_integer() const { return n1.is_integer(); }
  std::string str() const { return "(" + n1.str() + "," + n2.str() + ")"; }

  friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;
};

enum class BasisKind { BasisIMerged, BasisIFull, BasisII };

std::string to_string(BasisKind kind);

struct BasisIState {
  HalfInt j, m, k, l;
  friend auto operator<=>(const BasisIState&, const BasisIState&) = default;
};

/// Basis I state with the l-label suppressed (only meaningful for n1 = n2).
struct BasisIMergedState {
  HalfInt j, m, k;
  friend auto operator<=>(const BasisIMergedState&, const BasisIMergedState&) = default;
};

struct BasisIIState {
  HalfInt j2, m2, j4, m4;
  friend auto operator<=>(const BasisIIState&, const BasisIIState&) = default;
};

using StateLabel = std::variant<BasisIState, BasisIMergedState, BasisIIState>;

std::string to_string(const StateLabel& s);

/// Ordered states of one irrep in one basis, with a label -> index map.
class BasisEnumeration {
public:
  /// Sorts the states lexicographically; throws on duplicates or mixed variants.
  BasisEnumeration(IrrepLabel irrep, BasisKind kind, std::vector<StateLabel> states);

  const IrrepLabel& irrep() const { return irrep_; }
  BasisKind kind() const { return kind_; }
  Index size() const { return static_cast<Index>(states_.size()); }
  const std::vector<StateLabel>& states() const { return states_; }
  const StateLabel& state(Index i) const { return states_.at(static_cast<std::size_t>(i)); }

  std::optional<Index> index_of(const StateLabel& s) const;
  bool contains(const StateLabel& s) const { return index_.count(s) != 0; }

  template <class State>
  const State& as(Index i) const {
    return std::get<State>(state(i));
  }

private:
  IrrepLabel irrep_;
  BasisKind kind_;
  std::vector<StateLabel> states_;
  std::map<StateLabel, Index> index_;
};

/// (1/6)(2n2+1)(2n1+3)(n1+n2+2)(n1-n2+1).
long long dim_formula(const IrrepLabel& irrep);

/// (1/3)(n+1)(2n+1)(2n+3), the n1 = n2 = n specialisation.
long long dim_equal_labels(HalfInt n);

BasisEnumeration enumerate_basis1_full(const IrrepLabel& irrep);
BasisEnumeration enumerate_basis1_merged(HalfInt n);
BasisEnumeration enumerate_basis2(const IrrepLabel& irrep);

/// Dispatch on kind; BasisIMerged requires n1 = n2.
BasisEnumeration enumerate(BasisKind kind, const IrrepLabel& irrep);

}  // namespace qso5

#endif  // QSO5_BASIS_HPP
