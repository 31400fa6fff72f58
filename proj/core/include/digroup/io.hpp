#ifndef DIGROUP_IO_HPP_
#define DIGROUP_IO_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

#include "digroup/enumerator.hpp"
#include "digroup/standard_triple.hpp"
#include "digroup/table.hpp"

namespace digroup {

  // A document that could not be turned into a well-formed value. The
  // message names the offending field (and the byte offset for syntax
  // errors).
  class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
  };

  // Digroup documents are JSON objects:
  //
  //   {
  //     "order": 2,
  //     "identity": 0,
  //     "left": [[0, 0], [1, 1]],
  //     "right": [[0, 1], [0, 1]],
  //     "labels": ["0", "a"]
  //   }
  //
  // Matrices are row-major with the row index being the left operand;
  // "labels" is optional. Parsing checks structure only, not the axioms.
  DigroupTable parse_digroup(std::string_view text);
  std::string  serialize_digroup(DigroupTable const& table);

  // Triple documents carry carrier_size, group_part and semi_part (lists of
  // image lists), right_unit, left_inverse and phi (index lists).
  StandardTriple parse_triple(std::string_view text);
  std::string    serialize_triple(StandardTriple const& triple);

  // One catalog entry per line: the digroup fields plus "flags" and
  // "subdigroup_count". No trailing newline.
  std::string  catalog_line(CatalogEntry const& entry);
  CatalogEntry parse_catalog_line(std::string_view line);

  // The two operation tables side by side, left product first, each with a
  // header row and column of labels.
  std::string render_table(DigroupTable const& table);

}  // namespace digroup

#endif  // DIGROUP_IO_HPP_
