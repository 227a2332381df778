#include "qso5/io.hpp"

#include <iomanip>
#include <limits>
#include <sstream>

namespace qso5 {

namespace {

std::string full(double x) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return os.str();
}

}  // namespace

std::string to_string(const Rational& r) { return r.str(); }

Json irrep_to_json(const IrrepLabel& irrep) { return Json{{"n1", irrep.n1.str()}, {"n2", irrep.n2.str()}}; }

IrrepLabel irrep_from_json(const Json& j) {
  return IrrepLabel::make(HalfInt::parse(j.at("n1").get<std::string>()), HalfInt::parse(j.at("n2").get<std::string>()));
}

BasisKind basis_kind_from_string(const std::string& s) {
  if (s == "I") return BasisKind::BasisIMerged;
  if (s == "I-full") return BasisKind::BasisIFull;
  if (s == "II") return BasisKind::BasisII;
  throw std::invalid_argument("unknown basis '" + s + "'");
}

Json report_to_json(const VerificationReport& report) {
  Json residuals = Json::array();
  for (const auto& r : report.residuals)
    residuals.push_back(Json{{"relation", to_string(r.relation_id)},
                             {"max_abs_residual", r.max_abs_residual},
                             {"matrix_dim", r.matrix_dim}});
  return Json{{"irrep", irrep_to_json(report.irrep)},
              {"basis", to_string(report.basis_kind)},
              {"q", report.q},
              {"precision", report.precision},
              {"residuals", std::move(residuals)},
              {"casimir",
               Json{{"max_offdiag", report.casimir.max_offdiag},
                    {"eigenvalue_spread", report.casimir.eigenvalue_spread},
                    {"formula_deviation", report.casimir.formula_deviation},
                    {"asymmetry", report.casimir.asymmetry},
                    {"formula_value", report.casimir.formula_value}}},
              {"tolerance", report.tolerance},
              {"casimir_tolerance", report.casimir_tolerance},
              {"passed", report.passed}};
}

Json expansion_to_json(const CasimirExpansion& e) {
  Json higher = Json::array();
  for (const auto& h : e.higher) higher.push_back(to_string(h));
  return Json{{"irrep", irrep_to_json(e.irrep)},
              {"A2", to_string(e.A2)},
              {"A4", to_string(e.A4)},
              {"higher", std::move(higher)},
              {"ratio_contribution_A4", to_string(e.ratio_contribution_A4)}};
}

Json contraction_to_json(const ContractionResult& r) {
  Json seq = Json::array();
  for (const auto& p : r.sequence) seq.push_back(Json{{"n1", p.n1.str()}, {"scaled_eigenvalue", p.scaled_eigenvalue}});
  return Json{{"lambda", r.lambda},
              {"q", r.q},
              {"n2", r.n2.str()},
              {"sequence", std::move(seq)},
              {"limit", r.limit_formula_value},
              {"final_relative_error", r.final_relative_error},
              {"converged", r.converged}};
}

void write_contraction_csv(std::ostream& os, const ContractionResult& r) {
  os << "n1,n2,q,scaled_eigenvalue,limit\n";
  for (const auto& p : r.sequence)
    os << p.n1.str() << ',' << r.n2.str() << ',' << full(r.q) << ',' << full(p.scaled_eigenvalue) << ','
       << full(r.limit_formula_value) << '\n';
}

void write_expansion_csv(std::ostream& os, const CasimirExpansion& e) {
  os << "n1,n2,A2,A4,ratio_contribution_A4\n";
  os << e.irrep.n1.str() << ',' << e.irrep.n2.str() << ',' << to_string(e.A2) << ',' << to_string(e.A4) << ','
     << to_string(e.ratio_contribution_A4) << '\n';
}

}  // namespace qso5
