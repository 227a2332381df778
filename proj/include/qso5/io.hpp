#ifndef QSO5_IO_HPP
#define QSO5_IO_HPP

#include <algorithm>
#include <ostream>
#include <string>
#include <tuple>
#include <vector>

#include "json.hpp"
#include "qso5/analysis.hpp"
#include "qso5/representation.hpp"
#include "qso5/verify.hpp"

namespace qso5 {

using Json = nlohmann::json;

/// {"dim": d, "generator": name, "entries": [[row, col, "value"], ...]}, row-major order,
/// values as full-precision decimal strings.
template <class Scalar>
Json generator_to_json(const std::string& name, const GeneratorMatrix<Scalar>& m) {
  std::vector<std::tuple<Index, Index, Scalar>> entries;
  for (Index k = 0; k < m.outerSize(); ++k)
    for (typename GeneratorMatrix<Scalar>::InnerIterator it(m, k); it; ++it)
      if (it.value() != 0) entries.emplace_back(it.row(), it.col(), it.value());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return std::tie(std::get<0>(a), std::get<1>(a)) < std::tie(std::get<0>(b), std::get<1>(b));
  });
  Json rows = Json::array();
  for (const auto& [r, c, v] : entries) rows.push_back(Json::array({r, c, to_decimal_string(v)}));
  return Json{{"dim", m.rows()}, {"generator", name}, {"entries", std::move(rows)}};
}

template <class Scalar>
GeneratorMatrix<Scalar> generator_from_json(const Json& j) {
  const Index dim = j.at("dim").get<Index>();
  std::vector<Eigen::Triplet<Scalar>> triplets;
  for (const auto& e : j.at("entries")) {
    const Index r = e.at(0).get<Index>();
    const Index c = e.at(1).get<Index>();
    if (r < 0 || c < 0 || r >= dim || c >= dim) throw std::invalid_argument("triplet index out of range");
    triplets.emplace_back(r, c, parse_scalar<Scalar>(e.at(2).get<std::string>()));
  }
  GeneratorMatrix<Scalar> m(dim, dim);
  m.setFromTriplets(triplets.begin(), triplets.end());
  m.makeCompressed();
  return m;
}

Json irrep_to_json(const IrrepLabel& irrep);
IrrepLabel irrep_from_json(const Json& j);
BasisKind basis_kind_from_string(const std::string& s);

/// Irrep, basis, q, state labels and the e1, e2, f1, f2 triplets.
template <class Scalar>
Json representation_to_json(const Representation<Scalar>& rep) {
  Json states = Json::array();
  for (const auto& s : rep.basis.states()) states.push_back(to_string(s));
  Json gens = Json::array({generator_to_json("e1", rep.e1), generator_to_json("e2", rep.e2),
                           generator_to_json("f1", rep.f1), generator_to_json("f2", rep.f2)});
  return Json{{"irrep", irrep_to_json(rep.irrep)},
              {"basis", to_string(rep.basis.kind())},
              {"q", to_decimal_string(rep.q)},
              {"precision", precision_name<Scalar>()},
              {"states", std::move(states)},
              {"generators", std::move(gens)}};
}

/// Rebuilds a representation from an exported document; derived generators are recomputed.
template <class Scalar>
Representation<Scalar> representation_from_json(const Json& j) {
  const IrrepLabel irrep = irrep_from_json(j.at("irrep"));
  const BasisKind kind = basis_kind_from_string(j.at("basis").get<std::string>());
  BasisEnumeration basis = enumerate(kind, irrep);
  auto rep = detail::empty_representation<Scalar>(std::move(basis), parse_scalar<Scalar>(j.at("q").get<std::string>()));
  for (const auto& g : j.at("generators")) {
    const auto name = g.at("generator").get<std::string>();
    auto m = generator_from_json<Scalar>(g);
    if (m.rows() != rep.dim()) throw std::invalid_argument("generator " + name + " has wrong dimension");
    if (name == "e1") rep.e1 = std::move(m);
    else if (name == "e2") rep.e2 = std::move(m);
    else if (name == "f1") rep.f1 = std::move(m);
    else if (name == "f2") rep.f2 = std::move(m);
  }
  for (const auto* m : {&rep.e1, &rep.e2, &rep.f1, &rep.f2})
    if (m->rows() != rep.dim()) throw std::invalid_argument("document is missing one of e1, e2, f1, f2");
  build_derived(rep);
  return rep;
}

Json report_to_json(const VerificationReport& report);
Json expansion_to_json(const CasimirExpansion& e);
Json contraction_to_json(const ContractionResult& r);

/// CSV rows: n1,n2,q,scaled_eigenvalue,limit.
void write_contraction_csv(std::ostream& os, const ContractionResult& r);
/// CSV rows: n1,n2,A2,A4,ratio_contribution_A4.
void write_expansion_csv(std::ostream& os, const CasimirExpansion& e);

std::string to_string(const Rational& r);

}  // namespace qso5

#endif  // QSO5_IO_HPP
