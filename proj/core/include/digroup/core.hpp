#ifndef DIGROUP_CORE_HPP_
#define DIGROUP_CORE_HPP_

#include <string_view>

#include "digroup/table.hpp"
#include "digroup/validation.hpp"

namespace digroup {

  // Checks the five diassociative equalities on all n^3 triples, the
  // bar-unit laws for the distinguished identity, and existence of a Liu
  // inverse for every element. Every failing (law, witness) pair is
  // reported, sorted by law and then lexicographically by witness tuple.
  ValidationReport validate_digroup(DigroupTable const& table);

  // The unique y with y -> x == e == x <- y. The table must have passed
  // validate_digroup; throws std::invalid_argument if no inverse exists.
  Element liu_inverse(DigroupTable const& table, Element x);

  // x |-> liu_inverse(table, x).
  Mapping liu_inverse_map(DigroupTable const& table);

  // x -> y == y <- x
  bool commutes(DigroupTable const& table, Element x, Element y);

  bool is_commutative(DigroupTable const& table);

  // The two products coincide.
  bool is_group(DigroupTable const& table);

  // Tables shipped with the library:
  //
  //   M            the two-element digroup {0, a} with projection products
  //   N            the six-element non-commutative digroup {e, α, ..., ε}
  //   trivial(n)   x -> y = x, x <- y = y, identity 0 (so M == trivial(2))
  //   cyclic(n)    addition mod n, also accepted as Zn
  //   S3           the symmetric group on three points
  //
  // Throws std::invalid_argument for unknown names.
  DigroupTable builtin(std::string_view name);

  DigroupTable trivial_digroup(std::size_t n);
  DigroupTable cyclic_group(std::size_t n);
  DigroupTable symmetric_group_s3();

  // Componentwise products on the carrier pairs (i, j) -> i * n2 + j.
  DigroupTable direct_product(DigroupTable const& first,
                              DigroupTable const& second);

}  // namespace digroup

#endif  // DIGROUP_CORE_HPP_
