#ifndef DIGROUP_SUBDIGROUP_HPP_
#define DIGROUP_SUBDIGROUP_HPP_

#include <compare>
#include <cstdint>
#include <vector>

#include "digroup/table.hpp"

namespace digroup {

  // A subset of a carrier of the given order, bitmask semantics. Masks
  // compare as unsigned integers with element k at bit k.
  class SubsetMask {
   public:
    SubsetMask() = default;
    explicit SubsetMask(std::size_t order);
    SubsetMask(std::size_t order, std::vector<Element> const& members);

    // The mask whose bit k is bit k of `bits`; order must be <= 64.
    static SubsetMask from_bits(std::size_t order, std::uint64_t bits);
    static SubsetMask full(std::size_t order);

    std::size_t order() const noexcept { return _order; }
    bool        contains(Element x) const;
    void        insert(Element x);
    void        erase(Element x);
    std::size_t size() const noexcept;
    bool        empty() const noexcept { return size() == 0; }

    // Members in increasing order.
    std::vector<Element> members() const;

    bool is_subset_of(SubsetMask const& other) const;

    bool                 operator==(SubsetMask const&) const = default;
    std::strong_ordering operator<=>(SubsetMask const& other) const;

   private:
    std::size_t                _order = 0;
    std::vector<std::uint64_t> _words;
  };

  // Nonempty, closed under both products and under Liu inverses taken in
  // the ambient digroup.
  bool is_subdigroup(DigroupTable const& table, SubsetMask const& subset);

  struct SubdigroupCriteria {
    bool restricted_is_digroup;     // e in H and H is a digroup on its own
    bool closed_under_quotients;    // e in H, H -> H^-1 and H^-1 <- H in H
    bool closed_under_products;     // is_subdigroup

    bool all_equal() const noexcept {
      return restricted_is_digroup == closed_under_quotients
             && closed_under_quotients == closed_under_products;
    }
  };

  // Evaluates the three equivalent subdigroup characterisations, each
  // independently from its own definition.
  SubdigroupCriteria subdigroup_criteria(DigroupTable const& table,
                                         SubsetMask const&   subset);

  // The operations of `table` restricted to `subset`, re-indexed by the
  // increasing order of the members. Throws StructureError if the subset is
  // not closed under both products or does not contain the identity.
  DigroupTable restrict_to(DigroupTable const& table, SubsetMask const& subset);

  // Smallest subdigroup containing `generators` and the identity.
  SubsetMask generated_subdigroup(DigroupTable const& table,
                                  SubsetMask const&   generators);

  // Every subdigroup, in ascending mask order. Throws OrderError above
  // order 16.
  std::vector<SubsetMask> all_subdigroups(DigroupTable const& table);

  inline constexpr std::size_t kMaxSubsetScanOrder = 16;

}  // namespace digroup

#endif  // DIGROUP_SUBDIGROUP_HPP_
