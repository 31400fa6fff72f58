#include "digroup/subdigroup.hpp"

#include <bit>
#include <string>

#include "digroup/core.hpp"

namespace digroup {

  SubsetMask::SubsetMask(std::size_t order)
      : _order(order), _words((order + 63) / 64, 0) {}

  SubsetMask::SubsetMask(std::size_t order, std::vector<Element> const& members)
      : SubsetMask(order) {
    for (Element x : members) {
      insert(x);
    }
  }

  SubsetMask SubsetMask::from_bits(std::size_t order, std::uint64_t bits) {
    if (order > 64) {
      throw OrderError("from_bits supports orders up to 64");
    }
    if (order < 64 && (bits >> order) != 0) {
      throw StructureError("bitmask has members outside the carrier");
    }
    SubsetMask mask(order);
    if (!mask._words.empty()) {
      mask._words[0] = bits;
    }
    return mask;
  }

  SubsetMask SubsetMask::full(std::size_t order) {
    SubsetMask mask(order);
    for (Element x = 0; x < order; ++x) {
      mask.insert(x);
    }
    return mask;
  }

  bool SubsetMask::contains(Element x) const {
    return x < _order && ((_words[x / 64] >> (x % 64)) & 1U);
  }

  void SubsetMask::insert(Element x) {
    if (x >= _order) {
      throw StructureError("element " + std::to_string(x)
                           + " outside carrier of order "
                           + std::to_string(_order));
    }
    _words[x / 64] |= std::uint64_t{1} << (x % 64);
  }

  void SubsetMask::erase(Element x) {
    if (x < _order) {
      _words[x / 64] &= ~(std::uint64_t{1} << (x % 64));
    }
  }

  std::size_t SubsetMask::size() const noexcept {
    std::size_t count = 0;
    for (auto w : _words) {
      count += static_cast<std::size_t>(std::popcount(w));
    }
    return count;
  }

  std::vector<Element> SubsetMask::members() const {
    std::vector<Element> out;
    for (Element x = 0; x < _order; ++x) {
      if (contains(x)) {
        out.push_back(x);
      }
    }
    return out;
  }

  bool SubsetMask::is_subset_of(SubsetMask const& other) const {
    for (Element x : members()) {
      if (!other.contains(x)) {
        return false;
      }
    }
    return true;
  }

  std::strong_ordering SubsetMask::operator<=>(SubsetMask const& other) const {
    if (auto c = _order <=> other._order; c != 0) {
      return c;
    }
    for (auto i = _words.size(); i-- > 0;) {
      if (auto c = _words[i] <=> other._words[i]; c != 0) {
        return c;
      }
    }
    return std::strong_ordering::equal;
  }

  namespace {

    void require_same_order(DigroupTable const& t, SubsetMask const& h) {
      if (h.order() != t.order()) {
        throw StructureError("subset order " + std::to_string(h.order())
                             + " does not match digroup order "
                             + std::to_string(t.order()));
      }
    }

    bool closed_under_both_products(DigroupTable const&         t,
                                    std::vector<Element> const& members,
                                    SubsetMask const&           h) {
      for (Element x : members) {
        for (Element y : members) {
          if (!h.contains(t.left(x, y)) || !h.contains(t.right(x, y))) {
            return false;
          }
        }
      }
      return true;
    }

  }  // namespace

  bool is_subdigroup(DigroupTable const& t, SubsetMask const& h) {
    require_same_order(t, h);
    auto const members = h.members();
    if (members.empty()) {
      return false;
    }
    for (Element x : members) {
      if (!h.contains(liu_inverse(t, x))) {
        return false;
      }
    }
    return closed_under_both_products(t, members, h);
  }

  DigroupTable restrict_to(DigroupTable const& t, SubsetMask const& h) {
    require_same_order(t, h);
    auto const members = h.members();
    if (!h.contains(t.identity())) {
      throw StructureError("subset does not contain the identity");
    }
    if (!closed_under_both_products(t, members, h)) {
      throw StructureError("subset is not closed under both products");
    }
    std::vector<Element> position(t.order(), 0);
    for (Element i = 0; i < members.size(); ++i) {
      position[members[i]] = i;
    }
    auto const               m = members.size();
    std::vector<Element>     left(m * m), right(m * m);
    std::vector<std::string> labels;
    for (Element i = 0; i < m; ++i) {
      for (Element j = 0; j < m; ++j) {
        left[i * m + j]  = position[t.left(members[i], members[j])];
        right[i * m + j] = position[t.right(members[i], members[j])];
      }
      if (t.has_labels()) {
        labels.push_back(t.label(members[i]));
      }
    }
    return DigroupTable(m,
                        position[t.identity()],
                        std::move(left),
                        std::move(right),
                        std::move(labels));
  }

  SubdigroupCriteria subdigroup_criteria(DigroupTable const& t,
                                         SubsetMask const&   h) {
    require_same_order(t, h);
    auto const         members = h.members();
    auto const         e       = t.identity();
    SubdigroupCriteria result{};

    // The restricted structure must itself satisfy every axiom, including
    // existence of inverses computed inside H.
    if (h.contains(e) && closed_under_both_products(t, members, h)) {
      result.restricted_is_digroup = validate_digroup(restrict_to(t, h)).ok();
    }

    if (h.contains(e)) {
      bool closed = true;
      for (Element x : members) {
        for (Element y : members) {
          auto const y_inv = liu_inverse(t, y);
          auto const x_inv = liu_inverse(t, x);
          if (!h.contains(t.left(x, y_inv)) || !h.contains(t.right(x_inv, y))) {
            closed = false;
            break;
          }
        }
        if (!closed) {
          break;
        }
      }
      result.closed_under_quotients = closed;
    }

    result.closed_under_products = is_subdigroup(t, h);
    return result;
  }

  SubsetMask generated_subdigroup(DigroupTable const& t,
                                  SubsetMask const&   generators) {
    require_same_order(t, generators);
    SubsetMask closure = generators;
    closure.insert(t.identity());
    bool changed = true;
    while (changed) {
      changed              = false;
      auto const members = closure.members();
      auto       add     = [&closure, &changed](Element x) {
        if (!closure.contains(x)) {
          closure.insert(x);
          changed = true;
        }
      };
      for (Element x : members) {
        add(liu_inverse(t, x));
        for (Element y : members) {
          add(t.left(x, y));
          add(t.right(x, y));
        }
      }
    }
    return closure;
  }

  std::vector<SubsetMask> all_subdigroups(DigroupTable const& t) {
    auto const n = t.order();
    if (n > kMaxSubsetScanOrder) {
      throw OrderError("all_subdigroups scans 2^n subsets; order "
                       + std::to_string(n) + " exceeds the cap of "
                       + std::to_string(kMaxSubsetScanOrder));
    }
    std::vector<SubsetMask> out;
    std::uint64_t const     limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 1; bits < limit; ++bits) {
      auto h = SubsetMask::from_bits(n, bits);
      if (is_subdigroup(t, h)) {
        out.push_back(std::move(h));
      }
    }
    return out;
  }

}  // namespace digroup
