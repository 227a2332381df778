#include "qso5/basis.hpp"

#include <algorithm>
#include <stdexcept>

namespace qso5 {

namespace {

constexpr HalfInt kOne{1};
constexpr HalfInt kTwo{2};

// x in {lo, lo+step, ..., hi}.
bool in_lattice(HalfInt x, HalfInt lo, HalfInt hi, HalfInt step) {
  if (x < lo || x > hi) return false;
  return (x.twice() - lo.twice()) % step.twice() == 0;
}

HalfInt lowest_spin(bool integer) { return integer ? HalfInt(0) : kHalf; }

}  // namespace

IrrepLabel IrrepLabel::make(HalfInt n1, HalfInt n2) {
  if (n2 < HalfInt(0)) throw std::invalid_argument("irrep label n2 must be >= 0");
  if (n1 < n2) throw std::invalid_argument("irrep labels require n1 >= n2");
  if (n1.is_integer() != n2.is_integer())
    throw std::invalid_argument("irrep labels n1, n2 must both be integers or both half-odd-integers");
  return IrrepLabel{n1, n2};
}

std::string to_string(BasisKind kind) {
  switch (kind) {
    case BasisKind::BasisIMerged: return "I";
    case BasisKind::BasisIFull: return "I-full";
    case BasisKind::BasisII: return "II";
  }
  return "?";
}

std::string to_string(const StateLabel& s) {
  return std::visit(
      [](const auto& st) -> std::string {
        using T = std::decay_t<decltype(st)>;
        if constexpr (std::is_same_v<T, BasisIState>)
          return "|" + st.j.str() + " " + st.m.str() + " " + st.k.str() + " " + st.l.str() + ">";
        else if constexpr (std::is_same_v<T, BasisIMergedState>)
          return "|" + st.j.str() + " " + st.m.str() + " " + st.k.str() + ">";
        else
          return "|" + st.j2.str() + " " + st.m2.str() + " " + st.j4.str() + " " + st.m4.str() + ">";
      },
      s);
}

BasisEnumeration::BasisEnumeration(IrrepLabel irrep, BasisKind kind, std::vector<StateLabel> states)
    : irrep_(irrep), kind_(kind), states_(std::move(states)) {
  std::sort(states_.begin(), states_.end());
  for (std::size_t i = 0; i < states_.size(); ++i) {
    if (i > 0 && states_[i].index() != states_[0].index())
      throw std::invalid_argument("basis enumeration mixes state variants");
    if (!index_.emplace(states_[i], static_cast<Index>(i)).second)
      throw std::invalid_argument("duplicate state " + to_string(states_[i]));
  }
}

std::optional<Index> BasisEnumeration::index_of(const StateLabel& s) const {
  auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

long long dim_formula(const IrrepLabel& irrep) {
  const long long t1 = irrep.n1.twice();
  const long long t2 = irrep.n2.twice();
  // (2n2+1)(2n1+3)(n1+n2+2)(n1-n2+1)/6 with n = t/2.
  return (t2 + 1) * (t1 + 3) * (t1 + t2 + 4) * (t1 - t2 + 2) / 24;
}

long long dim_equal_labels(HalfInt n) {
  if (n < HalfInt(0)) throw std::invalid_argument("n must be >= 0");
  const long long t = n.twice();
  // (n+1)(2n+1)(2n+3)/3 with n = t/2.
  return (t + 2) * (t + 1) * (t + 3) / 6;
}

BasisEnumeration enumerate_basis1_full(const IrrepLabel& irrep) {
  const HalfInt n1 = irrep.n1;
  const HalfInt n2 = irrep.n2;
  const bool integer = irrep.is_integer();
  std::vector<StateLabel> states;

  for_each_in_range(lowest_spin(integer), n1, kOne, [&](HalfInt j) {
    for_each_in_range(lowest_spin(integer), n1 + n2 - j, kOne, [&](HalfInt l) {
      const HalfInt sum = j + l;
      const HalfInt diff = j - l;
      HalfInt k_step;
      if (integer) {
        if (!in_lattice(sum, n1 - n2, n1 + n2, kOne)) return;
        // j - l - (1 - (-1)^{n1+n2-j-l})/2
        const int parity = ((n1 + n2 - sum).twice() / 2) % 2 != 0 ? 1 : 0;
        if (!in_lattice(diff - HalfInt(parity), n2 - n1, n1 - n2, kTwo)) return;
        k_step = kTwo;
      } else {
        if (!in_lattice(sum, n1 - n2 + 1, n1 + n2, kTwo)) return;
        if (!in_lattice(diff, n2 - n1, n1 - n2, kTwo)) return;
        k_step = kOne;
      }
      for_each_in_range(-j, j, kOne, [&](HalfInt m) {
        for_each_in_range(-l, l, k_step, [&](HalfInt k) { states.emplace_back(BasisIState{j, m, k, l}); });
      });
    });
  });
  return BasisEnumeration(irrep, BasisKind::BasisIFull, std::move(states));
}

BasisEnumeration enumerate_basis1_merged(HalfInt n) {
  const IrrepLabel irrep = IrrepLabel::equal(n);
  std::vector<StateLabel> states;
  for_each_in_range(lowest_spin(n.is_integer()), n, kOne, [&](HalfInt j) {
    for_each_in_range(-j, j, kOne, [&](HalfInt m) {
      for_each_in_range(-j, j, kOne, [&](HalfInt k) { states.emplace_back(BasisIMergedState{j, m, k}); });
    });
  });
  return BasisEnumeration(irrep, BasisKind::BasisIMerged, std::move(states));
}

BasisEnumeration enumerate_basis2(const IrrepLabel& irrep) {
  const HalfInt n1 = irrep.n1;
  const HalfInt n2 = irrep.n2;
  const HalfInt top = HalfInt::from_twice((n1 + n2).twice() / 2);
  std::vector<StateLabel> states;
  for_each_in_range(HalfInt(0), top, kHalf, [&](HalfInt j2) {
    for_each_in_range(HalfInt(0), top, kHalf, [&](HalfInt j4) {
      if (!in_lattice(j2 + j4, n2, n1, kOne)) return;
      if (!in_lattice(j2 - j4, -n2, n2, kOne)) return;
      for_each_in_range(-j2, j2, kOne, [&](HalfInt m2) {
        for_each_in_range(-j4, j4, kOne, [&](HalfInt m4) { states.emplace_back(BasisIIState{j2, m2, j4, m4}); });
      });
    });
  });
  return BasisEnumeration(irrep, BasisKind::BasisII, std::move(states));
}

BasisEnumeration enumerate(BasisKind kind, const IrrepLabel& irrep) {
  switch (kind) {
    case BasisKind::BasisIFull: return enumerate_basis1_full(irrep);
    case BasisKind::BasisII: return enumerate_basis2(irrep);
    case BasisKind::BasisIMerged:
      if (irrep.n1 != irrep.n2) throw std::invalid_argument("merged Basis I enumeration requires n1 = n2");
      return enumerate_basis1_merged(irrep.n1);
  }
  throw std::invalid_argument("unknown basis kind");
}

}  // namespace qso5
