#ifndef DIGROUP_STANDARD_TRIPLE_HPP_
#define DIGROUP_STANDARD_TRIPLE_HPP_

#include <vector>

#include "digroup/table.hpp"
#include "digroup/translations.hpp"
#include "digroup/validation.hpp"

namespace digroup {

  // A transformation group, a transformation semigroup with a chosen right
  // unit and chosen left inverses, and a map phi from the semigroup to the
  // group. All transforms act on one carrier; indices refer to positions in
  // group_part and semi_part.
  struct StandardTriple {
    std::size_t              carrier_size = 0;
    std::vector<Transform>   group_part;
    std::vector<Transform>   semi_part;
    std::size_t              right_unit = 0;
    std::vector<std::size_t> left_inverse;  // semi index -> semi index
    std::vector<std::size_t> phi;           // semi index -> group index

    bool operator==(StandardTriple const&) const = default;
  };

  // Throws StructureError for malformed triples (index out of range, wrong
  // carrier, duplicate transforms, size mismatch). Otherwise checks every
  // condition exhaustively over all pairs of transforms; witnesses are
  // transform indices.
  ValidationReport validate_triple(StandardTriple const& triple);

  // Group part from x |-> a <- x, semigroup part from x |-> a -> x, right
  // unit x |-> e -> x, left inverses from Liu inverses.
  StandardTriple triple_from_digroup(DigroupTable const& table);

  // The digroup on group_part x semi_part, pair (i, j) at index
  // i * |semi_part| + j, with
  //   (a, f) -> (b, g) = (ab, fg)
  //   (a, f) <- (b, g) = (ab, phi(f) g)
  // Throws std::invalid_argument if the triple does not validate.
  DigroupTable digroup_from_triple(StandardTriple const& triple);

}  // namespace digroup

#endif  // DIGROUP_STANDARD_TRIPLE_HPP_
