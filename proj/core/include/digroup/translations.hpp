#ifndef DIGROUP_TRANSLATIONS_HPP_
#define DIGROUP_TRANSLATIONS_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "digroup/subdigroup.hpp"
#include "digroup/table.hpp"
#include "digroup/validation.hpp"

namespace digroup {

  // A self-map of {0, ..., n-1}.
  class Transform {
   public:
    Transform() = default;
    explicit Transform(std::vector<Element> image);

    static Transform identity(std::size_t n);

    std::size_t                 carrier_size() const noexcept { return _image.size(); }
    std::vector<Element> const& image() const noexcept { return _image; }
    Element operator()(Element x) const { return _image.at(x); }

    bool is_bijective() const;
    // Only meaningful for bijections.
    Transform inverse() const;

    auto operator<=>(Transform const&) const = default;

   private:
    std::vector<Element> _image;
  };

  // (f * g)(x) == f(g(x))
  Transform compose(Transform const& f, Transform const& g);

  // A set of distinct transforms of one carrier, together with the element
  // each was generated from. Transforms are stored in order of first
  // appearance when the generating elements are scanned 0, 1, ...
  class TransformSet {
   public:
    TransformSet() = default;

    // Collapses equal transforms; by_element[a] is the transform labelled
    // by element a.
    static TransformSet from_elements(std::size_t                   carrier_size,
                                      std::vector<Transform> const& by_element);

    std::size_t                   carrier_size() const noexcept { return _carrier_size; }
    std::size_t                   size() const noexcept { return _transforms.size(); }
    std::vector<Transform> const& transforms() const noexcept { return _transforms; }
    Transform const& operator[](std::size_t i) const { return _transforms.at(i); }

    // element -> index of its transform; surjective onto the set.
    Mapping const& label_of() const noexcept { return _label_of; }

    std::optional<std::size_t> index_of(Transform const& f) const;

   private:
    std::size_t            _carrier_size = 0;
    std::vector<Transform> _transforms;
    Mapping                _label_of;
  };

  // The maps a -> (x |-> a <- x) and a -> (x |-> a -> x).
  struct LeftTranslations {
    TransformSet right_product;  // x |-> a <- x, forms a group
    TransformSet left_product;   // x |-> a -> x, always n distinct maps
  };

  // The maps a -> (x |-> x -> a) and a -> (x |-> x <- a).
  struct RightTranslations {
    TransformSet left_product;   // x |-> x -> a, forms a group
    TransformSet right_product;  // x |-> x <- a, always n distinct maps
  };

  LeftTranslations  left_translations(DigroupTable const& table);
  RightTranslations right_translations(DigroupTable const& table);

  // Sends the left-product translation by a to the right-product
  // translation by a, as a map between transform indices of
  // left_translations(table).
  Mapping phi(DigroupTable const& table);

  // Exhaustive check of the composition identities satisfied by left
  // translations, the group and right-unit structure of the two translation
  // sets, and the homomorphism identities of phi.
  ValidationReport verify_translation_identities(DigroupTable const& table);

  // A digroup built on a product of two transform sets. Pair (i, j) has
  // index i * second.size() + j.
  struct ProductDigroup {
    DigroupTable                                 table;
    TransformSet                                 first;
    TransformSet                                 second;
    std::vector<std::pair<std::size_t, std::size_t>> pair_labels;
    Mapping                                      eta;       // source -> product
    SubsetMask                                   diagonal;  // image of eta
  };

  // The digroup on (x |-> a <- x) x (x |-> b -> x), with
  //   (f, g) -> (h, k) = (fh, gk)
  //   (f, g) <- (h, k) = (fh, L>_{g(e) <- k(e)})
  // eta sends a to its pair of translations.
  ProductDigroup translation_product_digroup(DigroupTable const& table);

  // translation_product_digroup, additionally verified: the product passes
  // validate_digroup, eta is an injective homomorphism, the diagonal is a
  // subdigroup and the restriction to it is isomorphic to the source.
  // Throws ConstructionError if any check fails.
  ProductDigroup cayley_embedding(DigroupTable const& table);

  // (f, g)(x, y) = (f(x), g(y))
  std::pair<Element, Element> pair_action(ProductDigroup const&        product,
                                          Element                      pair,
                                          std::pair<Element, Element> point);

  // The analogous construction on (x |-> x <- a) x (x |-> x -> a), with
  // composition reversed because right translations reverse products:
  //   (f, g) -> (h, k) = (psi(h) f, k g)
  //   (f, g) <- (h, k) = (h f, k g)
  // where psi sends x |-> x <- a to x |-> x -> a. Verified as in
  // cayley_embedding; throws ConstructionError on failure.
  ProductDigroup right_translation_product(DigroupTable const& table);

}  // namespace digroup

#endif  // DIGROUP_TRANSLATIONS_HPP_
