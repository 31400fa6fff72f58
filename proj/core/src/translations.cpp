#include "digroup/translations.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "digroup/core.hpp"
#include "digroup/morphism.hpp"

namespace digroup {

  Transform::Transform(std::vector<Element> image) : _image(std::move(image)) {
    for (Element y : _image) {
      if (y >= _image.size()) {
        throw StructureError("transform image " + std::to_string(y)
                             + " outside carrier of size "
                             + std::to_string(_image.size()));
      }
    }
  }

  Transform Transform::identity(std::size_t n) {
    return Transform(Mapping::identity(n).image());
  }

  bool Transform::is_bijective() const {
    return Mapping(_image.size(), _image.size(), _image).is_bijective();
  }

  Transform Transform::inverse() const {
    std::vector<Element> inv(_image.size());
    for (Element x = 0; x < _image.size(); ++x) {
      inv[_image[x]] = x;
    }
    return Transform(std::move(inv));
  }

  Transform compose(Transform const& f, Transform const& g) {
    if (f.carrier_size() != g.carrier_size()) {
      throw StructureError("cannot compose transforms of different carriers");
    }
    std::vector<Element> image(g.carrier_size());
    for (Element x = 0; x < image.size(); ++x) {
      image[x] = f(g(x));
    }
    return Transform(std::move(image));
  }

  TransformSet TransformSet::from_elements(std::size_t carrier_size,
                                           std::vector<Transform> const& by_element) {
    TransformSet         set;
    std::vector<Element> label_of(by_element.size());
    set._carrier_size = carrier_size;
    for (Element a = 0; a < by_element.size(); ++a) {
      if (by_element[a].carrier_size() != carrier_size) {
        throw StructureError("transform carrier mismatch");
      }
      auto found = set.index_of(by_element[a]);
      if (!found) {
        set._transforms.push_back(by_element[a]);
        found = set._transforms.size() - 1;
      }
      label_of[a] = *found;
    }
    set._label_of = Mapping(by_element.size(), set._transforms.size(), std::move(label_of));
    return set;
  }

  std::optional<std::size_t> TransformSet::index_of(Transform const& f) const {
    auto it = std::find(_transforms.begin(), _transforms.end(), f);
    if (it == _transforms.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - _transforms.begin());
  }

  namespace {

    Transform row_of(DigroupTable const& t, Element a, bool right_product) {
      std::vector<Element> image(t.order());
      for (Element x = 0; x < t.order(); ++x) {
        image[x] = right_product ? t.right(a, x) : t.left(a, x);
      }
      return Transform(std::move(image));
    }

    Transform column_of(DigroupTable const& t, Element a, bool right_product) {
      std::vector<Element> image(t.order());
      for (Element x = 0; x < t.order(); ++x) {
        image[x] = right_product ? t.right(x, a) : t.left(x, a);
      }
      return Transform(std::move(image));
    }

    TransformSet collect(DigroupTable const& t, bool rows, bool right_product) {
      std::vector<Transform> by_element;
      for (Element a = 0; a < t.order(); ++a) {
        by_element.push_back(rows ? row_of(t, a, right_product)
                                  : column_of(t, a, right_product));
      }
      return TransformSet::from_elements(t.order(), by_element);
    }

    std::size_t index_or_throw(TransformSet const& set,
                               Transform const&    f,
                               char const*         what) {
      auto found = set.index_of(f);
      if (!found) {
        throw ConstructionError(std::string(what)
                                + ": composition left the transform set");
      }
      return *found;
    }

    // Verifies everything an embedding into a product digroup promises.
    void verify_embedding(DigroupTable const& source, ProductDigroup const& p) {
      auto report = validate_digroup(p.table);
      if (!report.ok()) {
        throw ConstructionError(
            "product construction failed digroup validation at law "
            + std::string(to_string(report.violations().front().law)));
      }
      if (!p.eta.is_injective()) {
        throw ConstructionError("embedding is not injective");
      }
      if (!is_homomorphism(source, p.table, p.eta)) {
        throw ConstructionError("embedding is not a homomorphism");
      }
      if (!is_subdigroup(p.table, p.diagonal)) {
        throw ConstructionError("diagonal is not a subdigroup");
      }
      auto restricted = restrict_to(p.table, p.diagonal);
      if (!find_isomorphism(source, restricted)) {
        throw ConstructionError("diagonal is not isomorphic to the source");
      }
    }

  }  // namespace

  LeftTranslations left_translations(DigroupTable const& t) {
    return {collect(t, true, true), collect(t, true, false)};
  }

  RightTranslations right_translations(DigroupTable const& t) {
    return {collect(t, false, false), collect(t, false, true)};
  }

  Mapping phi(DigroupTable const& t) {
    auto const           sets = left_translations(t);
    auto const&          to   = sets.right_product;
    auto const&          from = sets.left_product;
    std::vector<Element> image(from.size(), 0);
    std::vector<bool>    seen(from.size(), false);
    for (Element a = 0; a < t.order(); ++a) {
      auto const i = from.label_of()(a);
      auto const j = to.label_of()(a);
      if (seen[i] && image[i] != j) {
        throw ConstructionError("phi is not well defined on this table");
      }
      seen[i]  = true;
      image[i] = j;
    }
    return Mapping(from.size(), to.size(), std::move(image));
  }

  ValidationReport verify_translation_identities(DigroupTable const& t) {
    auto const             n    = t.order();
    auto const             e    = t.identity();
    std::vector<Violation> found;

    std::vector<Transform> bar, arrow;  // x |-> a <- x, x |-> a -> x
    for (Element a = 0; a < n; ++a) {
      bar.push_back(row_of(t, a, true));
      arrow.push_back(row_of(t, a, false));
    }
    auto const one = Transform::identity(n);
    auto const inv = liu_inverse_map(t);

    auto expect = [&found](bool holds, Law law, std::vector<std::size_t> w) {
      if (!holds) {
        found.push_back({law, std::move(w), std::nullopt, std::nullopt});
      }
    };

    auto const sets = left_translations(t);
    auto const phi_map = phi(t);
    // phi as a function on transforms, through the labeled sets.
    auto phi_of = [&](Transform const& f) -> std::optional<Transform> {
      auto i = sets.left_product.index_of(f);
      if (!i) {
        return std::nullopt;
      }
      return sets.right_product[phi_map(*i)];
    };

    expect(bar[e] == one, Law::kTranslateUnit, {e});

    for (Element a = 0; a < n; ++a) {
      auto const a_inv = inv(a);
      expect(compose(arrow[a], arrow[e]) == arrow[a], Law::kTranslateRightUnit, {a});
      expect(compose(arrow[e], arrow[a]) == compose(bar[a], arrow[e]),
             Law::kTranslateUnitSwap,
             {a});
      expect(compose(bar[a_inv], bar[a]) == one
                 && compose(bar[a], bar[a_inv]) == one,
             Law::kTranslateGroupInverse,
             {a});
      expect(compose(arrow[a_inv], arrow[a]) == arrow[e]
                 && compose(bar[a], arrow[a_inv]) == arrow[e],
             Law::kTranslateLeftInverse,
             {a});

      auto const phi_a = phi_of(arrow[a]);
      expect(phi_a.has_value() && *phi_a == bar[a], Law::kPhiHomomorphism, {a});
      if (a == e) {
        expect(phi_a.has_value() && *phi_a == one, Law::kPhiUnit, {a});
      }
      if (phi_a) {
        expect(compose(arrow[e], arrow[a]) == compose(*phi_a, arrow[e]),
               Law::kPhiUnitSwap,
               {a});
        expect(compose(*phi_a, arrow[a_inv]) == arrow[e],
               Law::kPhiLeftInverse,
               {a});
      }

      for (Element b = 0; b < n; ++b) {
        auto const bar_ab = compose(bar[a], bar[b]);
        expect(bar[t.left(a, b)] == bar_ab && bar[t.right(a, b)] == bar_ab,
               Law::kTranslateRightProduct,
               {a, b});
        auto const arrow_ab = compose(arrow[a], arrow[b]);
        expect(arrow[t.left(a, b)] == arrow_ab, Law::kTranslateLeftProduct, {a, b});
        expect(arrow_ab == compose(arrow[a], bar[b]), Law::kTranslateLeftAbsorb, {a, b});
        expect(arrow[t.right(a, b)] == compose(bar[a], arrow[b]),
               Law::kTranslateMixedProduct,
               {a, b});
        expect(sets.right_product.index_of(bar_ab).has_value()
                   && sets.left_product.index_of(arrow_ab).has_value(),
               Law::kTranslateClosure,
               {a, b});

        auto const phi_b = phi_of(arrow[b]);
        auto const phi_ab = phi_of(arrow_ab);
        if (phi_a && phi_b) {
          expect(phi_ab.has_value() && *phi_ab == compose(*phi_a, *phi_b),
                 Law::kPhiHomomorphism,
                 {a, b});
          expect(compose(arrow[a], *phi_b) == arrow_ab, Law::kPhiAbsorb, {a, b});
          auto const twisted = phi_of(compose(*phi_a, arrow[b]));
          expect(twisted.has_value() && *twisted == compose(*phi_a, *phi_b),
                 Law::kPhiTwist,
                 {a, b});
        }
      }
    }
    return ValidationReport(std::move(found));
  }

  ProductDigroup translation_product_digroup(DigroupTable const& t) {
    auto        sets   = left_translations(t);
    auto const& group  = sets.right_product;
    auto const& semi   = sets.left_product;
    auto const  phi_map = phi(t);
    auto const  e      = t.identity();
    auto const  g      = group.size();
    auto const  s      = semi.size();
    auto const  order  = g * s;

    std::vector<std::size_t> group_product(g * g), semi_product(s * s),
        semi_twisted(s * s);
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t k = 0; k < g; ++k) {
        group_product[i * g + k]
            = index_or_throw(group, compose(group[i], group[k]), "group part");
      }
    }
    for (std::size_t j = 0; j < s; ++j) {
      for (std::size_t l = 0; l < s; ++l) {
        semi_product[j * s + l]
            = index_or_throw(semi, compose(semi[j], semi[l]), "semigroup part");
        // Recover b and d from their translations and look up b <- d.
        auto const b          = semi[j](e);
        auto const d          = semi[l](e);
        auto const via_values = semi.label_of()(t.right(b, d));
        auto const via_phi    = index_or_throw(
            semi, compose(group[phi_map(j)], semi[l]), "twisted part");
        if (via_values != via_phi) {
          throw ConstructionError(
              "twisted product disagrees between element lookup and phi");
        }
        semi_twisted[j * s + l] = via_values;
      }
    }

    std::vector<Element> left(order * order), right(order * order);
    std::vector<std::pair<std::size_t, std::size_t>> pair_labels;
    for (std::size_t i = 0; i < g; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        pair_labels.emplace_back(i, j);
        for (std::size_t k = 0; k < g; ++k) {
          for (std::size_t l = 0; l < s; ++l) {
            auto const cell  = (i * s + j) * order + (k * s + l);
            auto const first = group_product[i * g + k];
            left[cell]       = first * s + semi_product[j * s + l];
            right[cell]      = first * s + semi_twisted[j * s + l];
          }
        }
      }
    }

    std::vector<Element> eta(t.order());
    SubsetMask           diagonal(order);
    for (Element a = 0; a < t.order(); ++a) {
      eta[a] = group.label_of()(a) * s + semi.label_of()(a);
      diagonal.insert(eta[a]);
    }
    auto const identity = eta[e];
    return ProductDigroup{
        DigroupTable(order, identity, std::move(left), std::move(right)),
        std::move(sets.right_product),
        std::move(sets.left_product),
        std::move(pair_labels),
        Mapping(t.order(), order, std::move(eta)),
        std::move(diagonal)};
  }

  ProductDigroup cayley_embedding(DigroupTable const& t) {
    auto product = translation_product_digroup(t);
    verify_embedding(t, product);
    return product;
  }

  std::pair<Element, Element> pair_action(ProductDigroup const&       p,
                                          Element                     pair,
                                          std::pair<Element, Element> point) {
    auto const [i, j] = p.pair_labels.at(pair);
    return {p.first[i](point.first), p.second[j](point.second)};
  }

  ProductDigroup right_translation_product(DigroupTable const& t) {
    auto        sets  = right_translations(t);
    auto const& semi  = sets.right_product;  // x |-> x <- a
    auto const& group = sets.left_product;   // x |-> x -> a
    auto const  e     = t.identity();
    auto const  s     = semi.size();
    auto const  g     = group.size();
    auto const  order = s * g;

    // x |-> x <- a determines a as its value at e.
    auto psi = [&](std::size_t i) -> Transform const& {
      return group[group.label_of()(semi[i](e))];
    };

    std::vector<std::size_t> semi_product(s * s), semi_twisted(s * s),
        group_product(g * g);
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t k = 0; k < s; ++k) {
        semi_product[i * s + k]
            = index_or_throw(semi, compose(semi[k], semi[i]), "semigroup part");
        semi_twisted[i * s + k]
            = index_or_throw(semi, compose(psi(k), semi[i]), "twisted part");
      }
    }
    for (std::size_t j = 0; j < g; ++j) {
      for (std::size_t l = 0; l < g; ++l) {
        group_product[j * g + l]
            = index_or_throw(group, compose(group[l], group[j]), "group part");
      }
    }

    std::vector<Element> left(order * order), right(order * order);
    std::vector<std::pair<std::size_t, std::size_t>> pair_labels;
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < g; ++j) {
        pair_labels.emplace_back(i, j);
        for (std::size_t k = 0; k < s; ++k) {
          for (std::size_t l = 0; l < g; ++l) {
            auto const cell   = (i * g + j) * order + (k * g + l);
            auto const second = group_product[j * g + l];
            left[cell]        = semi_twisted[i * s + k] * g + second;
            right[cell]       = semi_product[i * s + k] * g + second;
          }
        }
      }
    }

    std::vector<Element> eta(t.order());
    SubsetMask           diagonal(order);
    for (Element a = 0; a < t.order(); ++a) {
      eta[a] = semi.label_of()(a) * g + group.label_of()(a);
      diagonal.insert(eta[a]);
    }
    auto const     identity = eta[e];
    ProductDigroup product{
        DigroupTable(order, identity, std::move(left), std::move(right)),
        std::move(sets.right_product),
        std::move(sets.left_product),
        std::move(pair_labels),
        Mapping(t.order(), order, std::move(eta)),
        std::move(diagonal)};
    verify_embedding(t, product);
    return product;
  }

}  // namespace digroup
