#include "digroup/core.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <stdexcept>
#include <string>

namespace digroup {

  ValidationReport validate_digroup(DigroupTable const& t) {
    auto const             n = t.order();
    auto const             e = t.identity();
    std::vector<Violation> found;

    auto check = [&found](Law         law,
                          Element     lhs,
                          Element     rhs,
                          std::vector<std::size_t> witnesses) {
      if (lhs != rhs) {
        found.push_back({law, std::move(witnesses), lhs, rhs});
      }
    };

    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        for (Element z = 0; z < n; ++z) {
          auto const l_yz = t.left(y, z);
          auto const r_yz = t.right(y, z);
          auto const l_xy = t.left(x, y);
          auto const r_xy = t.right(x, y);
          check(Law::kDiassocLeftLeft,
                t.left(x, l_yz),
                t.left(l_xy, z),
                {x, y, z});
          check(Law::kDiassocLeftMixed,
                t.left(x, l_yz),
                t.left(x, r_yz),
                {x, y, z});
          check(Law::kDiassocMiddle,
                t.left(r_xy, z),
                t.right(x, l_yz),
                {x, y, z});
          check(Law::kDiassocRightMixed,
                t.right(l_xy, z),
                t.right(r_xy, z),
                {x, y, z});
          check(Law::kDiassocRightRight,
                t.right(r_xy, z),
                t.right(x, r_yz),
                {x, y, z});
        }
      }
    }

    for (Element x = 0; x < n; ++x) {
      check(Law::kBarUnitRight, t.left(x, e), x, {x});
      check(Law::kBarUnitLeft, t.right(e, x), x, {x});
      check(Law::kBarUnitSwap, t.right(x, e), t.left(e, x), {x});
    }

    for (Element x = 0; x < n; ++x) {
      bool has_inverse = false;
      for (Element y = 0; y < n && !has_inverse; ++y) {
        has_inverse = t.left(y, x) == e && t.right(x, y) == e;
      }
      if (!has_inverse) {
        found.push_back({Law::kInverseMissing, {x}, std::nullopt, std::nullopt});
      }
    }
    return ValidationReport(std::move(found));
  }

  Element liu_inverse(DigroupTable const& t, Element x) {
    if (x >= t.order()) {
      throw std::out_of_range("element " + std::to_string(x)
                              + " out of range");
    }
    for (Element y = 0; y < t.order(); ++y) {
      if (t.left(y, x) == t.identity() && t.right(x, y) == t.identity()) {
        return y;
      }
    }
    throw std::invalid_argument("element " + t.label(x)
                                + " has no Liu inverse; table is not a "
                                  "validated digroup");
  }

  Mapping liu_inverse_map(DigroupTable const& t) {
    std::vector<Element> image(t.order());
    for (Element x = 0; x < t.order(); ++x) {
      image[x] = liu_inverse(t, x);
    }
    return Mapping(t.order(), t.order(), std::move(image));
  }

  bool commutes(DigroupTable const& t, Element x, Element y) {
    return t.left(x, y) == t.right(y, x);
  }

  bool is_commutative(DigroupTable const& t) {
    for (Element x = 0; x < t.order(); ++x) {
      for (Element y = 0; y < t.order(); ++y) {
        if (!commutes(t, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_group(DigroupTable const& t) {
    return std::equal(t.left_table().begin(),
                      t.left_table().end(),
                      t.right_table().begin());
  }

  DigroupTable trivial_digroup(std::size_t n) {
    std::vector<Element> left(n * n), right(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        left[x * n + y]  = x;
        right[x * n + y] = y;
      }
    }
    return DigroupTable(n, 0, std::move(left), std::move(right));
  }

  DigroupTable cyclic_group(std::size_t n) {
    std::vector<Element> op(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        op[x * n + y] = (x + y) % n;
      }
    }
    return DigroupTable(n, 0, op, op);
  }

  DigroupTable symmetric_group_s3() {
    // Elements are the permutations of {0, 1, 2} in lexicographic order, so
    // the identity permutation lands at index 0.
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3>              p = {0, 1, 2};
    do {
      perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    auto index_of = [&perms](std::array<int, 3> const& q) {
      return static_cast<Element>(
          std::find(perms.begin(), perms.end(), q) - perms.begin());
    };

    std::size_t const    n = perms.size();
    std::vector<Element> op(n * n);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        std::array<int, 3> composed{};
        for (int i = 0; i < 3; ++i) {
          composed[i] = perms[x][perms[y][i]];
        }
        op[x * n + y] = index_of(composed);
      }
    }
    return DigroupTable(n,
                        0,
                        op,
                        op,
                        {"()", "(1 2)", "(0 1)", "(0 1 2)", "(0 2 1)", "(0 2)"});
  }

  namespace {

    DigroupTable builtin_m() {
      return trivial_digroup(2).with_labels({"0", "a"});
    }

    DigroupTable builtin_n() {
      // e, α, β, γ, δ, ε  ->  0..5
      std::vector<Element> left = {
          0, 1, 1, 1, 0, 0,  // e
          1, 0, 0, 0, 1, 1,  // α
          2, 4, 4, 4, 2, 2,  // β
          3, 5, 5, 5, 3, 3,  // γ
          4, 2, 2, 2, 4, 4,  // δ
          5, 3, 3, 3, 5, 5,  // ε
      };
      std::vector<Element> right = {
          0, 1, 2, 3, 4, 5,  // e
          1, 0, 5, 4, 3, 2,  // α
          1, 0, 5, 4, 3, 2,  // β
          1, 0, 5, 4, 3, 2,  // γ
          0, 1, 2, 3, 4, 5,  // δ
          0, 1, 2, 3, 4, 5,  // ε
      };
      return DigroupTable(6,
                          0,
                          std::move(left),
                          std::move(right),
                          {"e", "α", "β", "γ", "δ", "ε"});
    }

    // Parses "name(k)" or "namek"; returns 0 when the suffix is malformed.
    std::size_t parse_size_suffix(std::string_view rest) {
      if (rest.size() >= 2 && rest.front() == '(' && rest.back() == ')') {
        rest = rest.substr(1, rest.size() - 2);
      }
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc() || ptr != rest.data() + rest.size()) {
        return 0;
      }
      return value;
    }

  }  // namespace

  DigroupTable builtin(std::string_view name) {
    if (name == "M") {
      return builtin_m();
    }
    if (name == "N") {
      return builtin_n();
    }
    if (name == "S3") {
      return symmetric_group_s3();
    }
    auto sized = [&name](std::string_view prefix) -> std::size_t {
      if (name.substr(0, prefix.size()) != prefix) {
        return 0;
      }
      return parse_size_suffix(name.substr(prefix.size()));
    };
    if (auto n = sized("trivial"); n > 0) {
      return trivial_digroup(n);
    }
    if (auto n = sized("cyclic"); n > 0) {
      return cyclic_group(n);
    }
    if (auto n = sized("Z"); n > 0) {
      return cyclic_group(n);
    }
    throw std::invalid_argument(
        "unknown builtin '" + std::string(name)
        + "'; expected M, N, S3, trivial(n), cyclic(n) or Zn");
  }

  DigroupTable direct_product(DigroupTable const& first,
                              DigroupTable const& second) {
    auto const           n1 = first.order();
    auto const           n2 = second.order();
    auto const           n  = n1 * n2;
    std::vector<Element> left(n * n), right(n * n);
    for (Element a1 = 0; a1 < n1; ++a1) {
      for (Element a2 = 0; a2 < n2; ++a2) {
        for (Element b1 = 0; b1 < n1; ++b1) {
          for (Element b2 = 0; b2 < n2; ++b2) {
            auto const cell = (a1 * n2 + a2) * n + (b1 * n2 + b2);
            left[cell]  = first.left(a1, b1) * n2 + second.left(a2, b2);
            right[cell] = first.right(a1, b1) * n2 + second.right(a2, b2);
          }
        }
      }
    }
    std::vector<std::string> labels;
    if (first.has_labels() || second.has_labels()) {
      for (Element a1 = 0; a1 < n1; ++a1) {
        for (Element a2 = 0; a2 < n2; ++a2) {
          labels.push_back("(" + first.label(a1) + "," + second.label(a2)
                           + ")");
        }
      }
    }
    return DigroupTable(n,
                        first.identity() * n2 + second.identity(),
                        std::move(left),
                        std::move(right),
                        std::move(labels));
  }

}  // namespace digroup
