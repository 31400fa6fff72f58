#ifndef DIGROUP_VALIDATION_HPP_
#define DIGROUP_VALIDATION_HPP_

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

namespace digroup {

  // Every law any checker in this library can report. Within one report,
  // violations are sorted by (law, witnesses), so the enumerator order below
  // is part of the output contract.
  enum class Law {
    // Digroup axioms. Each diassociative equality is checked separately.
    kDiassocLeftLeft,    // x -> (y -> z) == (x -> y) -> z
    kDiassocLeftMixed,   // x -> (y -> z) == x -> (y <- z)
    kDiassocMiddle,      // (x <- y) -> z == x <- (y -> z)
    kDiassocRightMixed,  // (x -> y) <- z == (x <- y) <- z
    kDiassocRightRight,  // (x <- y) <- z == x <- (y <- z)
    kBarUnitRight,       // x -> e == x
    kBarUnitLeft,        // e <- x == x
    kBarUnitSwap,        // x <- e == e -> x
    kInverseMissing,     // no y with y -> x == e == x <- y

    // Left translation identities. Witnesses are digroup elements.
    kTranslateRightProduct,  // L<_{a*b} == L<_a L<_b  for * in {->, <-}
    kTranslateLeftProduct,   // L>_{a->b} == L>_a L>_b
    kTranslateLeftAbsorb,    // L>_a L>_b == L>_a L<_b
    kTranslateMixedProduct,  // L>_{a<-b} == L<_a L>_b
    kTranslateUnit,          // L<_e == 1
    kTranslateRightUnit,     // L>_a L>_e == L>_a
    kTranslateUnitSwap,      // L>_e L>_a == L<_a L>_e
    kTranslateGroupInverse,  // L<_{a^-1} L<_a == 1 == L<_a L<_{a^-1}
    kTranslateLeftInverse,   // L>_{a^-1} L>_a == L>_e == L<_a L>_{a^-1}
    kTranslateClosure,       // both translation sets closed under composition

    // Standard triple conditions. Witnesses are transform indices.
    kGroupIdentity,     // the identity transform belongs to the group part
    kGroupClosure,      // group part closed under composition
    kGroupInverse,      // group part closed under inverses
    kSemiClosure,       // semigroup part closed under composition
    kRightUnit,         // f e_S == f
    kLeftInverse,       // f^{l-1} f == e_S
    kPhiHomomorphism,   // phi(fg) == phi(f) phi(g)
    kPhiActionClosure,  // phi(f) g lies in the semigroup part
    kPhiUnit,           // phi(e_S) f == f
    kPhiUnitSwap,       // e_S f == phi(f) e_S
    kPhiLeftInverse,    // phi(f) f^{l-1} == e_S
    kPhiAbsorb,         // f phi(g) == f g
    kPhiTwist,          // phi(phi(f) g) == phi(f) phi(g)
  };

  std::string_view to_string(Law law) noexcept;

  struct Violation {
    Law                        law;
    std::vector<std::size_t>   witnesses;
    std::optional<std::size_t> lhs;
    std::optional<std::size_t> rhs;

    bool operator==(Violation const&) const = default;
  };

  class ValidationReport {
   public:
    ValidationReport() = default;
    explicit ValidationReport(std::vector<Violation> violations);

    bool ok() const noexcept { return _violations.empty(); }
    std::vector<Violation> const& violations() const noexcept {
      return _violations;
    }

    bool contains(Law law) const noexcept;

    bool operator==(ValidationReport const&) const = default;

   private:
    std::vector<Violation> _violations;
  };

}  // namespace digroup

#endif  // DIGROUP_VALIDATION_HPP_
