#ifndef DIGROUP_ENUMERATOR_HPP_
#define DIGROUP_ENUMERATOR_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "digroup/table.hpp"

namespace digroup {

  struct CatalogEntry {
    DigroupTable canonical;
    std::size_t  order;
    bool         commutative;
    bool         group;
    std::size_t  subdigroup_count;

    bool operator==(CatalogEntry const&) const = default;
  };

  // Builds the entry for a table that is already in canonical form.
  CatalogEntry make_catalog_entry(DigroupTable canonical);

  enum class SearchMode { kPropagating, kNaive };

  struct SearchOptions {
    // Stop once this many isomorphism classes have been found. The search
    // then runs on one worker, in a fixed order, so the result is still
    // deterministic.
    std::optional<std::size_t> max_solutions;
    std::size_t                workers = 1;
    SearchMode                 mode    = SearchMode::kPropagating;
    // Permit orders 7 and 8 in propagating mode. No timing promise.
    bool allow_large_order = false;
  };

  inline constexpr std::size_t kMaxDefaultEnumerationOrder = 6;
  inline constexpr std::size_t kMaxNaiveOrder              = 3;

  // One entry per isomorphism class of digroups of order n, identity at 0,
  // sorted by canonical table (flattened left then right). Throws OrderError
  // for unsupported orders.
  std::vector<CatalogEntry> enumerate_digroups(std::size_t          n,
                                               SearchOptions const& opts = {});

  // Scans every table pair satisfying the unit laws, keeps those passing
  // validate_digroup, and deduplicates by canonical form. n <= 3.
  std::vector<CatalogEntry> naive_enumerate(std::size_t n);

  struct ClassCounts {
    std::size_t total           = 0;
    std::size_t commutative     = 0;
    std::size_t groups          = 0;
    std::size_t non_group       = 0;
    std::size_t non_commutative = 0;

    bool operator==(ClassCounts const&) const = default;
  };

  ClassCounts count_classes(std::vector<CatalogEntry> const& entries);
  ClassCounts count_by_class(std::size_t n, SearchOptions const& opts = {});

  struct ClaimRecord {
    std::string id;
    std::string expected;
    std::string observed;
    bool        pass;
    double      runtime_seconds;
  };

  struct ClaimReport {
    std::vector<ClaimRecord> claims;

    bool all_pass() const noexcept;
  };

  // Checks the minimality and uniqueness statements about the builtin
  // examples M and N against exhaustive enumerations up to order 6:
  //   C1  order 1 holds only the trivial group
  //   C2  order 2 holds a non-group class isomorphic to M
  //   C3  all digroups of orders 3, 4 and 5 are commutative
  //   C4  order 6 holds exactly one non-commutative class that is not a
  //       group, and it is N; every non-commutative class is listed
  //   C5  N is non-commutative at (β, β)
  // Failures are recorded, never thrown. Only opts.workers is consulted.
  ClaimReport verify_claims(SearchOptions const& opts = {});

}  // namespace digroup

#endif  // DIGROUP_ENUMERATOR_HPP_
