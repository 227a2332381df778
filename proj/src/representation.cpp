#include "qso5/representation.hpp"

namespace qso5 {

namespace {

// (K - M)/2; K - M is always an integer on a valid Basis I state.
HalfInt half_of(HalfInt x) {
  if (!x.is_integer()) throw std::logic_error("K - M must be an integer on Basis I");
  return HalfInt::from_twice(x.twice() / 2);
}

}  // namespace

CartanDiagonals cartan_diagonals(const BasisEnumeration& basis) {
  CartanDiagonals c;
  const auto n = static_cast<std::size_t>(basis.size());
  for (auto* v : {&c.h1, &c.h2, &c.M, &c.K, &c.M2, &c.M4}) v->reserve(n);

  for (const auto& label : basis.states()) {
    HalfInt h1, h2;
    if (const auto* s = std::get_if<BasisIMergedState>(&label)) {
      h1 = s->m;
      h2 = half_of(s->k - s->m);
    } else if (const auto* s = std::get_if<BasisIState>(&label)) {
      h1 = s->m;
      h2 = half_of(s->k - s->m);
    } else {
      const auto& t = std::get<BasisIIState>(label);
      h1 = t.m4 - t.m2;
      h2 = t.m2;
    }
    c.h1.push_back(h1);
    c.h2.push_back(h2);
    c.M.push_back(h1);
    c.K.push_back(h1 + 2 * h2);
    c.M2.push_back(h2);
    c.M4.push_back(h1 + h2);
  }
  return c;
}

}  // namespace qso5
