#include "qso5/verify.hpp"

namespace qso5 {

std::string to_string(RelationId id) {
  switch (id) {
    case RelationId::H1E1: return "qh1_e1";
    case RelationId::H1F1: return "qh1_f1";
    case RelationId::TwoH2E1: return "q2h2_e1";
    case RelationId::TwoH2F1: return "q2h2_f1";
    case RelationId::H1E2: return "qh1_e2";
    case RelationId::H1F2: return "qh1_f2";
    case RelationId::H2E2: return "qh2_e2";
    case RelationId::H2F2: return "qh2_f2";
    case RelationId::CommE1F2: return "comm_e1_f2";
    case RelationId::CommE2F1: return "comm_e2_f1";
    case RelationId::CommE1F1: return "comm_e1_f1";
    case RelationId::CommE2F2: return "comm_e2_f2";
    case RelationId::E2E3Plus: return "e2_e3plus";
    case RelationId::E2E3Minus: return "e2_e3minus";
    case RelationId::F3PlusF2: return "f3plus_f2";
    case RelationId::F3MinusF2: return "f3minus_f2";
    case RelationId::CommE1E4: return "comm_e1_e4";
    case RelationId::CommF1F4: return "comm_f1_f4";
    case RelationId::E4TwoForms: return "e4_two_forms";
    case RelationId::F4TwoForms: return "f4_two_forms";
    case RelationId::TransposeE1F1: return "transpose_e1_f1";
    case RelationId::TransposeE2F2: return "transpose_e2_f2";
  }
  return "?";
}

const std::vector<RelationId>& all_relations() {
  static const std::vector<RelationId> ids = [] {
    std::vector<RelationId> v;
    for (int i = 0; i <= static_cast<int>(RelationId::TransposeE2F2); ++i) v.push_back(static_cast<RelationId>(i));
    return v;
  }();
  return ids;
}

}  // namespace qso5
