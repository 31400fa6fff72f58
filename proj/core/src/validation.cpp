#include "digroup/validation.hpp"

#include <algorithm>
#include <tuple>

namespace digroup {

  std::string_view to_string(Law law) noexcept {
    switch (law) {
      case Law::kDiassocLeftLeft: return "DIASSOC_1";
      case Law::kDiassocLeftMixed: return "DIASSOC_2";
      case Law::kDiassocMiddle: return "DIASSOC_3";
      case Law::kDiassocRightMixed: return "DIASSOC_4";
      case Law::kDiassocRightRight: return "DIASSOC_5";
      case Law::kBarUnitRight: return "BARUNIT_RIGHT";
      case Law::kBarUnitLeft: return "BARUNIT_LEFT";
      case Law::kBarUnitSwap: return "BARUNIT_SWAP";
      case Law::kInverseMissing: return "INVERSE_MISSING";
      case Law::kTranslateRightProduct: return "TRANSLATE_RIGHT_PRODUCT";
      case Law::kTranslateLeftProduct: return "TRANSLATE_LEFT_PRODUCT";
      case Law::kTranslateLeftAbsorb: return "TRANSLATE_LEFT_ABSORB";
      case Law::kTranslateMixedProduct: return "TRANSLATE_MIXED_PRODUCT";
      case Law::kTranslateUnit: return "TRANSLATE_UNIT";
      case Law::kTranslateRightUnit: return "TRANSLATE_RIGHT_UNIT";
      case Law::kTranslateUnitSwap: return "TRANSLATE_UNIT_SWAP";
      case Law::kTranslateGroupInverse: return "TRANSLATE_GROUP_INVERSE";
      case Law::kTranslateLeftInverse: return "TRANSLATE_LEFT_INVERSE";
      case Law::kTranslateClosure: return "TRANSLATE_CLOSURE";
      case Law::kGroupIdentity: return "GROUP_IDENTITY";
      case Law::kGroupClosure: return "GROUP_CLOSURE";
      case Law::kGroupInverse: return "GROUP_INVERSE";
      case Law::kSemiClosure: return "SEMI_CLOSURE";
      case Law::kRightUnit: return "RIGHT_UNIT";
      case Law::kLeftInverse: return "LEFT_INVERSE";
      case Law::kPhiHomomorphism: return "PHI_HOMOMORPHISM";
      case Law::kPhiActionClosure: return "PHI_ACTION_CLOSURE";
      case Law::kPhiUnit: return "PHI_UNIT";
      case Law::kPhiUnitSwap: return "PHI_UNIT_SWAP";
      case Law::kPhiLeftInverse: return "PHI_LEFT_INVERSE";
      case Law::kPhiAbsorb: return "PHI_ABSORB";
      case Law::kPhiTwist: return "PHI_TWIST";
    }
    return "UNKNOWN";
  }

  ValidationReport::ValidationReport(std::vector<Violation> violations)
      : _violations(std::move(violations)) {
    std::stable_sort(_violations.begin(),
              _violations.end(),
              [](Violation const& a, Violation const& b) {
                return std::tie(a.law, a.witnesses)
                       < std::tie(b.law, b.witnesses);
              });
  }

  bool ValidationReport::contains(Law law) const noexcept {
    return std::any_of(_violations.begin(),
                       _violations.end(),
                       [law](Violation const& v) { return v.law == law; });
  }

}  // namespace digroup
