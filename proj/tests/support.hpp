#ifndef DIGROUP_TESTS_SUPPORT_HPP_
#define DIGROUP_TESTS_SUPPORT_HPP_

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "digroup/digroup.hpp"

namespace digroup::testing {

  // Element indices of N in its builtin labelling.
  inline constexpr Element kE = 0, kAlpha = 1, kBeta = 2, kGamma = 3, kDelta = 4, kEps = 5;

  inline DigroupTable M() { return builtin("M"); }
  inline DigroupTable N() { return builtin("N"); }

  // The named pool used for the translation and embedding checks.
  inline std::vector<std::pair<std::string, DigroupTable>> named_pool() {
    return {
        {"M", builtin("M")},
        {"N", builtin("N")},
        {"Z2", builtin("Z2")},
        {"Z4", builtin("Z4")},
        {"S3", builtin("S3")},
        {"MxZ2", direct_product(builtin("M"), builtin("Z2"))},
        {"trivial3", builtin("trivial(3)")},
    };
  }

  // Named pool plus every enumerated class of order at most 4.
  inline std::vector<std::pair<std::string, DigroupTable>> embedding_pool() {
    auto pool = named_pool();
    for (std::size_t n = 1; n <= 4; ++n) {
      auto const entries = enumerate_digroups(n);
      for (std::size_t i = 0; i < entries.size(); ++i) {
        pool.emplace_back("enum" + std::to_string(n) + "_" + std::to_string(i),
                          entries[i].canonical);
      }
    }
    return pool;
  }

  inline Mapping random_permutation(std::size_t n, std::mt19937& rng) {
    std::vector<Element> image(n);
    std::iota(image.begin(), image.end(), Element{0});
    std::shuffle(image.begin(), image.end(), rng);
    return Mapping(n, n, std::move(image));
  }

  // Random bijection that keeps `fixed` in place.
  inline Mapping random_permutation_fixing(std::size_t n, Element fixed, std::mt19937& rng) {
    std::vector<Element> others;
    for (Element x = 0; x < n; ++x) {
      if (x != fixed) {
        others.push_back(x);
      }
    }
    auto shuffled = others;
    std::shuffle(shuffled.begin(), shuffled.end(), rng);
    std::vector<Element> image(n);
    image[fixed] = fixed;
    for (std::size_t i = 0; i < others.size(); ++i) {
      image[others[i]] = shuffled[i];
    }
    return Mapping(n, n, std::move(image));
  }

  // Every y with y -> x == e == x <- y, by direct scan.
  inline std::vector<Element> scan_liu_inverses(DigroupTable const& t, Element x) {
    std::vector<Element> out;
    for (Element y = 0; y < t.order(); ++y) {
      if (t.left(y, x) == t.identity() && t.right(x, y) == t.identity()) {
        out.push_back(y);
      }
    }
    return out;
  }

  // Closure under both products, by direct scan.
  inline bool scan_closed(DigroupTable const& t, std::vector<Element> const& h) {
    auto in = [&h](Element z) { return std::find(h.begin(), h.end(), z) != h.end(); };
    if (!in(t.identity())) {
      return false;
    }
    for (auto x : h) {
      for (auto y : h) {
        if (!in(t.left(x, y)) || !in(t.right(x, y))) {
          return false;
        }
      }
      if (scan_liu_inverses(t, x).empty() || !in(scan_liu_inverses(t, x).front())) {
        return false;
      }
    }
    return true;
  }

  // Sends (group index, semigroup index) of a triple-built digroup to the
  // matching pair of the translation product, by transform lookup.
  inline std::optional<Mapping> align_to_product(StandardTriple const& triple,
                                                 ProductDigroup const& product) {
    auto const s     = triple.semi_part.size();
    auto const order = triple.group_part.size() * s;
    if (order != product.table.order()) {
      return std::nullopt;
    }
    std::vector<Element> image(order);
    for (std::size_t a = 0; a < triple.group_part.size(); ++a) {
      for (std::size_t f = 0; f < s; ++f) {
        auto const i = product.first.index_of(triple.group_part[a]);
        auto const j = product.second.index_of(triple.semi_part[f]);
        if (!i || !j) {
          return std::nullopt;
        }
        image[a * s + f] = *i * product.second.size() + *j;
      }
    }
    Mapping m(order, order, std::move(image));
    if (!m.is_bijective()) {
      return std::nullopt;
    }
    return m;
  }

  // The triple round trip lands exactly on the translation product.
  inline bool round_trip_matches_product(DigroupTable const& t) {
    auto const triple  = triple_from_digroup(t);
    auto const built   = digroup_from_triple(triple);
    auto const product = translation_product_digroup(t);
    auto const align   = align_to_product(triple, product);
    return align && relabel(built, *align) == product.table;
  }

}  // namespace digroup::testing

#endif  // DIGROUP_TESTS_SUPPORT_HPP_
