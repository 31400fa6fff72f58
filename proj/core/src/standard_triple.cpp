#include "digroup/standard_triple.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

#include "digroup/core.hpp"

namespace digroup {

  namespace {

    void check_structure(StandardTriple const& t) {
      auto fail = [](std::string const& msg) {
        throw StructureError("malformed standard triple: " + msg);
      };
      if (t.carrier_size == 0) {
        fail("carrier must be nonempty");
      }
      if (t.group_part.empty() || t.semi_part.empty()) {
        fail("group and semigroup parts must be nonempty");
      }
      for (auto const* part : {&t.group_part, &t.semi_part}) {
        std::set<Transform> distinct;
        for (auto const& f : *part) {
          if (f.carrier_size() != t.carrier_size) {
            fail("transform acts on a carrier of size "
                 + std::to_string(f.carrier_size()) + ", expected "
                 + std::to_string(t.carrier_size));
          }
          if (!distinct.insert(f).second) {
            fail("duplicate transform");
          }
        }
      }
      auto const s = t.semi_part.size();
      if (t.right_unit >= s) {
        fail("right_unit index out of range");
      }
      if (t.left_inverse.size() != s || t.phi.size() != s) {
        fail("left_inverse and phi need one entry per semigroup transform");
      }
      for (auto i : t.left_inverse) {
        if (i >= s) {
          fail("left_inverse index out of range");
        }
      }
      for (auto i : t.phi) {
        if (i >= t.group_part.size()) {
          fail("phi index out of range");
        }
      }
    }

    std::map<Transform, std::size_t> index_map(std::vector<Transform> const& part) {
      std::map<Transform, std::size_t> out;
      for (std::size_t i = 0; i < part.size(); ++i) {
        out.emplace(part[i], i);
      }
      return out;
    }

    std::optional<std::size_t> find(std::map<Transform, std::size_t> const& m,
                                    Transform const&                        f) {
      auto it = m.find(f);
      if (it == m.end()) {
        return std::nullopt;
      }
      return it->second;
    }

  }  // namespace

  ValidationReport validate_triple(StandardTriple const& t) {
    check_structure(t);
    auto const& group = t.group_part;
    auto const& semi  = t.semi_part;
    auto const  gi    = index_map(group);
    auto const  si    = index_map(semi);
    auto const& unit  = semi[t.right_unit];
    auto        phi   = [&](std::size_t j) -> Transform const& {
      return group[t.phi[j]];
    };

    std::vector<Violation> found;
    auto expect = [&found](bool holds, Law law, std::vector<std::size_t> w) {
      if (!holds) {
        found.push_back({law, std::move(w), std::nullopt, std::nullopt});
      }
    };

    expect(find(gi, Transform::identity(t.carrier_size)).has_value(),
           Law::kGroupIdentity,
           {});
    for (std::size_t i = 0; i < group.size(); ++i) {
      expect(group[i].is_bijective() && find(gi, group[i].inverse()).has_value(),
             Law::kGroupInverse,
             {i});
      for (std::size_t k = 0; k < group.size(); ++k) {
        expect(find(gi, compose(group[i], group[k])).has_value(),
               Law::kGroupClosure,
               {i, k});
      }
    }

    for (std::size_t j = 0; j < semi.size(); ++j) {
      auto const& f = semi[j];
      expect(compose(f, unit) == f, Law::kRightUnit, {j});
      expect(compose(semi[t.left_inverse[j]], f) == unit, Law::kLeftInverse, {j});
      expect(compose(phi(t.right_unit), f) == f, Law::kPhiUnit, {j});
      expect(compose(unit, f) == compose(phi(j), unit), Law::kPhiUnitSwap, {j});
      expect(compose(phi(j), semi[t.left_inverse[j]]) == unit,
             Law::kPhiLeftInverse,
             {j});

      for (std::size_t l = 0; l < semi.size(); ++l) {
        auto const& g  = semi[l];
        auto const  fg = compose(f, g);
        auto const  fg_index = find(si, fg);
        expect(fg_index.has_value(), Law::kSemiClosure, {j, l});
        auto const phi_f_phi_g = compose(phi(j), phi(l));
        if (fg_index) {
          expect(phi(*fg_index) == phi_f_phi_g, Law::kPhiHomomorphism, {j, l});
        }
        auto const twisted = find(si, compose(phi(j), g));
        expect(twisted.has_value(), Law::kPhiActionClosure, {j, l});
        if (twisted) {
          expect(phi(*twisted) == phi_f_phi_g, Law::kPhiTwist, {j, l});
        }
        expect(compose(f, phi(l)) == fg, Law::kPhiAbsorb, {j, l});
      }
    }
    return ValidationReport(std::move(found));
  }

  StandardTriple triple_from_digroup(DigroupTable const& table) {
    auto const sets = left_translations(table);
    auto const e    = table.identity();
    auto const inv  = liu_inverse_map(table);

    StandardTriple t;
    t.carrier_size = table.order();
    t.group_part   = sets.right_product.transforms();
    t.semi_part    = sets.left_product.transforms();
    t.right_unit   = sets.left_product.label_of()(e);
    for (auto const& f : t.semi_part) {
      // x |-> a -> x sends e to a.
      t.left_inverse.push_back(sets.left_product.label_of()(inv(f(e))));
    }
    t.phi = phi(table).image();
    return t;
  }

  DigroupTable digroup_from_triple(StandardTriple const& t) {
    auto const report = validate_triple(t);
    if (!report.ok()) {
      throw std::invalid_argument(
          "standard triple fails "
          + std::string(to_string(report.violations().front().law)));
    }
    auto const g     = t.group_part.size();
    auto const s     = t.semi_part.size();
    auto const order = g * s;
    auto const gi    = index_map(t.group_part);
    auto const si    = index_map(t.semi_part);

    std::vector<Element> left(order * order), right(order * order);
    for (std::size_t a = 0; a < g; ++a) {
      for (std::size_t f = 0; f < s; ++f) {
        for (std::size_t b = 0; b < g; ++b) {
          for (std::size_t h = 0; h < s; ++h) {
            auto const cell  = (a * s + f) * order + (b * s + h);
            auto const first = gi.at(compose(t.group_part[a], t.group_part[b]));
            left[cell] = first * s + si.at(compose(t.semi_part[f], t.semi_part[h]));
            right[cell]
                = first * s
                  + si.at(compose(t.group_part[t.phi[f]], t.semi_part[h]));
          }
        }
      }
    }
    auto const identity
        = gi.at(Transform::identity(t.carrier_size)) * s + t.right_unit;
    return DigroupTable(order, identity, std::move(left), std::move(right));
  }

}  // namespace digroup
