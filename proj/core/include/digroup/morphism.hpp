#ifndef DIGROUP_MORPHISM_HPP_
#define DIGROUP_MORPHISM_HPP_

#include <optional>
#include <vector>

#include "digroup/table.hpp"

namespace digroup {

  // Sends identity to identity and preserves both products. Returns false
  // when the mapping's sizes do not match the two orders.
  bool is_homomorphism(DigroupTable const& from,
                       DigroupTable const& to,
                       Mapping const&      map);

  // The first bijective homomorphism in lexicographic backtracking order
  // (images chosen for 0, 1, ... in increasing order), if any.
  std::optional<Mapping> find_isomorphism(DigroupTable const& from,
                                          DigroupTable const& to);

  // All bijective self-homomorphisms, in lexicographic order of their image
  // sequences. Throws OrderError above kMaxCanonicalOrder.
  std::vector<Mapping> automorphisms(DigroupTable const& table);

  // The table obtained by renaming every x to relabel(x). Labels, when
  // present, travel with their elements.
  DigroupTable relabel(DigroupTable const& table, Mapping const& relabel);

  struct CanonicalTable {
    DigroupTable table;        // identity at 0, no labels
    Mapping      certificate;  // source element -> canonical element
  };

  // The lexicographically least relabeling (left table then right table,
  // row-major) over all bijections that send the identity to 0. Two
  // digroups are isomorphic iff their canonical tables are equal. Throws
  // OrderError above kMaxCanonicalOrder.
  CanonicalTable canonical_form(DigroupTable const& table);

  inline constexpr std::size_t kMaxCanonicalOrder = 8;

}  // namespace digroup

#endif  // DIGROUP_MORPHISM_HPP_
