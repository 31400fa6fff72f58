#ifndef DIGROUP_TABLE_HPP_
#define DIGROUP_TABLE_HPP_

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace digroup {

  // Elements of a finite carrier are dense indices 0..n-1.
  using Element = std::size_t;

  // Raised when a table, mapping or triple is not even well-formed (wrong
  // dimensions, out-of-range entries, duplicate labels). Axiom failures are
  // never reported this way; they go into a ValidationReport.
  class StructureError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  // Raised when an operation is asked to work on an order it does not
  // support (exhaustive scans, canonical forms, enumeration).
  class OrderError : public std::out_of_range {
   public:
    using std::out_of_range::out_of_range;
  };

  // Raised when a construction produces something that fails its own
  // verification. Never caught internally.
  class ConstructionError : public std::logic_error {
   public:
    using std::logic_error::logic_error;
  };

  // A function between two finite carriers.
  class Mapping {
   public:
    Mapping() = default;
    Mapping(std::size_t domain_size,
            std::size_t codomain_size,
            std::vector<Element> image);

    static Mapping identity(std::size_t n);

    std::size_t domain_size() const noexcept { return _domain_size; }
    std::size_t codomain_size() const noexcept { return _codomain_size; }
    std::vector<Element> const& image() const noexcept { return _image; }

    Element operator()(Element x) const { return _image.at(x); }

    bool is_injective() const;
    bool is_bijective() const;

    bool operator==(Mapping const&) const = default;

   private:
    std::size_t          _domain_size   = 0;
    std::size_t          _codomain_size = 0;
    std::vector<Element> _image;
  };

  // A pointed carrier with two n x n operation tables: the left product
  // (x -> y) and the right product (x <- y), stored row-major with the row
  // index being the left operand. Satisfying the digroup axioms is not an
  // invariant of this type; see validate_digroup.
  class DigroupTable {
   public:
    DigroupTable(std::size_t              order,
                 Element                  identity,
                 std::vector<Element>     left,
                 std::vector<Element>     right,
                 std::vector<std::string> labels = {});

    std::size_t order() const noexcept { return _order; }
    Element     identity() const noexcept { return _identity; }

    Element left(Element x, Element y) const noexcept {
      return _left[x * _order + y];
    }
    Element right(Element x, Element y) const noexcept {
      return _right[x * _order + y];
    }

    std::span<Element const> left_table() const noexcept { return _left; }
    std::span<Element const> right_table() const noexcept { return _right; }

    bool has_labels() const noexcept { return !_labels.empty(); }
    std::vector<std::string> const& labels() const noexcept { return _labels; }
    // The display label of x, or its decimal index when unlabeled.
    std::string label(Element x) const;

    // Same carrier and operations, labels dropped.
    DigroupTable without_labels() const;
    DigroupTable with_labels(std::vector<std::string> labels) const;

    // Both tables equal, labels ignored.
    bool same_operations(DigroupTable const& other) const noexcept;

    bool operator==(DigroupTable const&) const = default;

   private:
    std::size_t              _order;
    Element                  _identity;
    std::vector<Element>     _left;
    std::vector<Element>     _right;
    std::vector<std::string> _labels;
  };

  // Left table followed by right table, row-major; the order used for
  // canonical comparisons.
  std::vector<Element> flatten(DigroupTable const& table);

}  // namespace digroup

#endif  // DIGROUP_TABLE_HPP_
