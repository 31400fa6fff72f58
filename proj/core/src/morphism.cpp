#include "digroup/morphism.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace digroup {

  bool is_homomorphism(DigroupTable const& from,
                       DigroupTable const& to,
                       Mapping const&      map) {
    if (map.domain_size() != from.order() || map.codomain_size() != to.order()) {
      return false;
    }
    if (map(from.identity()) != to.identity()) {
      return false;
    }
    for (Element x = 0; x < from.order(); ++x) {
      for (Element y = 0; y < from.order(); ++y) {
        if (map(from.left(x, y)) != to.left(map(x), map(y))
            || map(from.right(x, y)) != to.right(map(x), map(y))) {
          return false;
        }
      }
    }
    return true;
  }

  namespace {

    constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);

    // Depth-first search for bijective homomorphisms, assigning images to
    // source elements 0, 1, ... and rejecting a partial map as soon as a
    // product of assigned elements contradicts it.
    class IsomorphismSearch {
     public:
      IsomorphismSearch(DigroupTable const& from, DigroupTable const& to)
          : _from(from),
            _to(to),
            _image(from.order(), kUnassigned),
            _used(to.order(), false) {}

      // Calls visit on every isomorphism until it returns false.
      void run(std::function<bool(Mapping const&)> const& visit) {
        if (_from.order() != _to.order()) {
          return;
        }
        _visit = &visit;
        descend(0);
      }

     private:
      bool descend(Element x) {
        auto const n = _from.order();
        if (x == n) {
          Mapping m(n, n, _image);
          return (*_visit)(m);
        }
        for (Element y = 0; y < n; ++y) {
          if (_used[y]) {
            continue;
          }
          if ((x == _from.identity()) != (y == _to.identity())) {
            continue;
          }
          _image[x] = y;
          _used[y]  = true;
          bool keep_going = true;
          if (consistent(x)) {
            keep_going = descend(x + 1);
          }
          _used[y]  = false;
          _image[x] = kUnassigned;
          if (!keep_going) {
            return false;
          }
        }
        return true;
      }

      bool consistent_product(Element z, Element w) const {
        if (_image[z] != kUnassigned) {
          return _image[z] == w;
        }
        return !_used[w];
      }

      bool consistent(Element x) const {
        for (Element y = 0; y <= x; ++y) {
          if (_image[y] == kUnassigned) {
            continue;
          }
          auto const fx = _image[x];
          auto const fy = _image[y];
          if (!consistent_product(_from.left(x, y), _to.left(fx, fy))
              || !consistent_product(_from.left(y, x), _to.left(fy, fx))
              || !consistent_product(_from.right(x, y), _to.right(fx, fy))
              || !consistent_product(_from.right(y, x), _to.right(fy, fx))) {
            return false;
          }
        }
        return true;
      }

      DigroupTable const&                        _from;
      DigroupTable const&                        _to;
      std::vector<Element>                       _image;
      std::vector<bool>                          _used;
      std::function<bool(Mapping const&)> const* _visit = nullptr;
    };

    void require_canonical_order(DigroupTable const& t, char const* what) {
      if (t.order() > kMaxCanonicalOrder) {
        throw OrderError(std::string(what) + " supports orders up to "
                         + std::to_string(kMaxCanonicalOrder) + ", got "
                         + std::to_string(t.order()));
      }
    }

  }  // namespace

  std::optional<Mapping> find_isomorphism(DigroupTable const& from,
                                          DigroupTable const& to) {
    std::optional<Mapping> found;
    IsomorphismSearch(from, to).run([&found](Mapping const& m) {
      found = m;
      return false;
    });
    if (found && !is_homomorphism(from, to, *found)) {
      throw ConstructionError("isomorphism search returned a non-homomorphism");
    }
    return found;
  }

  std::vector<Mapping> automorphisms(DigroupTable const& t) {
    require_canonical_order(t, "automorphisms");
    std::vector<Mapping> out;
    IsomorphismSearch(t, t).run([&out](Mapping const& m) {
      out.push_back(m);
      return true;
    });
    return out;
  }

  DigroupTable relabel(DigroupTable const& t, Mapping const& p) {
    if (!p.is_bijective() || p.domain_size() != t.order()) {
      throw StructureError("relabeling must be a bijection of the carrier");
    }
    auto const           n = t.order();
    std::vector<Element> left(n * n), right(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        left[p(x) * n + p(y)]  = p(t.left(x, y));
        right[p(x) * n + p(y)] = p(t.right(x, y));
      }
    }
    std::vector<std::string> labels;
    if (t.has_labels()) {
      labels.resize(n);
      for (Element x = 0; x < n; ++x) {
        labels[p(x)] = t.labels()[x];
      }
    }
    return DigroupTable(
        n, p(t.identity()), std::move(left), std::move(right), std::move(labels));
  }

  CanonicalTable canonical_form(DigroupTable const& t) {
    require_canonical_order(t, "canonical_form");
    auto const n     = t.order();
    auto const cells = 2 * n * n;

    // source[k] is the source element that receives canonical label k.
    std::vector<Element> source;
    source.push_back(t.identity());
    for (Element x = 0; x < n; ++x) {
      if (x != t.identity()) {
        source.push_back(x);
      }
    }

    std::vector<Element> best, best_source, candidate(cells), label_of(n);
    // Non-identity labels are permuted via next_permutation on source[1..].
    do {
      for (Element k = 0; k < n; ++k) {
        label_of[source[k]] = k;
      }
      // 0: equal so far, -1: already smaller, +1: abandoned.
      int state = best.empty() ? -1 : 0;
      for (std::size_t c = 0; c < cells && state != 1; ++c) {
        auto const op_right = c >= n * n;
        auto const i        = (c % (n * n)) / n;
        auto const j        = c % n;
        auto const product  = op_right ? t.right(source[i], source[j])
                                       : t.left(source[i], source[j]);
        candidate[c] = label_of[product];
        if (state == 0) {
          if (candidate[c] < best[c]) {
            state = -1;
          } else if (candidate[c] > best[c]) {
            state = 1;
          }
        }
      }
      if (state == -1) {
        best        = candidate;
        best_source = source;
      }
    } while (std::next_permutation(source.begin() + 1, source.end()));

    std::vector<Element> certificate(n);
    for (Element k = 0; k < n; ++k) {
      certificate[best_source[k]] = k;
    }
    std::vector<Element> left(best.begin(), best.begin() + n * n);
    std::vector<Element> right(best.begin() + n * n, best.end());
    return CanonicalTable{DigroupTable(n, 0, std::move(left), std::move(right)),
                          Mapping(n, n, std::move(certificate))};
  }

}  // namespace digroup
