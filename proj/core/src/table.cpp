#include "digroup/table.hpp"

#include <algorithm>
#include <set>

namespace digroup {

  Mapping::Mapping(std::size_t          domain_size,
                   std::size_t          codomain_size,
                   std::vector<Element> image)
      : _domain_size(domain_size),
        _codomain_size(codomain_size),
        _image(std::move(image)) {
    if (_image.size() != _domain_size) {
      throw StructureError("mapping has " + std::to_string(_image.size())
                           + " images for a domain of size "
                           + std::to_string(_domain_size));
    }
    for (Element y : _image) {
      if (y >= _codomain_size) {
        throw StructureError("mapping image " + std::to_string(y)
                             + " outside codomain of size "
                             + std::to_string(_codomain_size));
      }
    }
  }

  Mapping Mapping::identity(std::size_t n) {
    std::vector<Element> image(n);
    for (Element x = 0; x < n; ++x) {
      image[x] = x;
    }
    return Mapping(n, n, std::move(image));
  }

  bool Mapping::is_injective() const {
    std::vector<bool> seen(_codomain_size, false);
    for (Element y : _image) {
      if (seen[y]) {
        return false;
      }
      seen[y] = true;
    }
    return true;
  }

  bool Mapping::is_bijective() const {
    return _domain_size == _codomain_size && is_injective();
  }

  DigroupTable::DigroupTable(std::size_t              order,
                             Element                  identity,
                             std::vector<Element>     left,
                             std::vector<Element>     right,
                             std::vector<std::string> labels)
      : _order(order),
        _identity(identity),
        _left(std::move(left)),
        _right(std::move(right)),
        _labels(std::move(labels)) {
    if (_order == 0) {
      throw StructureError("a digroup carrier must be nonempty");
    }
    if (_identity >= _order) {
      throw StructureError("identity " + std::to_string(_identity)
                           + " out of range for order "
                           + std::to_string(_order));
    }
    auto const cells = _order * _order;
    if (_left.size() != cells || _right.size() != cells) {
      throw StructureError("operation tables must have "
                           + std::to_string(cells) + " entries");
    }
    auto out_of_range = [this](Element v) { return v >= _order; };
    if (std::any_of(_left.begin(), _left.end(), out_of_range)
        || std::any_of(_right.begin(), _right.end(), out_of_range)) {
      throw StructureError("operation table entry out of range for order "
                           + std::to_string(_order));
    }
    if (!_labels.empty()) {
      if (_labels.size() != _order) {
        throw StructureError("expected " + std::to_string(_order)
                             + " labels, got "
                             + std::to_string(_labels.size()));
      }
      std::set<std::string> distinct(_labels.begin(), _labels.end());
      if (distinct.size() != _labels.size()) {
        throw StructureError("labels must be pairwise distinct");
      }
    }
  }

  std::string DigroupTable::label(Element x) const {
    return _labels.empty() ? std::to_string(x) : _labels.at(x);
  }

  DigroupTable DigroupTable::without_labels() const {
    return DigroupTable(_order, _identity, _left, _right);
  }

  DigroupTable DigroupTable::with_labels(std::vector<std::string> labels) const {
    return DigroupTable(_order, _identity, _left, _right, std::move(labels));
  }

  bool DigroupTable::same_operations(DigroupTable const& other) const noexcept {
    return _order == other._order && _identity == other._identity
           && _left == other._left && _right == other._right;
  }

  std::vector<Element> flatten(DigroupTable const& table) {
    std::vector<Element> out(table.left_table().begin(),
                             table.left_table().end());
    out.insert(
        out.end(), table.right_table().begin(), table.right_table().end());
    return out;
  }

}  // namespace digroup
