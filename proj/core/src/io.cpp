#include "digroup/io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <json.hpp>

namespace digroup {

  namespace {

    using json         = nlohmann::json;
    using ordered_json = nlohmann::ordered_json;

    json parse_document(std::string_view text) {
      try {
        auto doc = json::parse(text.begin(), text.end());
        if (!doc.is_object()) {
          throw ParseError("malformed document: top level must be an object");
        }
        return doc;
      } catch (json::parse_error const& e) {
        throw ParseError(std::string("malformed document: ") + e.what());
      }
    }

    json const& field(json const& doc, char const* name) {
      auto it = doc.find(name);
      if (it == doc.end()) {
        throw ParseError(std::string(name) + ": missing field");
      }
      return *it;
    }

    std::size_t read_index(json const& value, std::string const& where) {
      if (!value.is_number_unsigned()) {
        throw ParseError(where + ": expected a non-negative integer");
      }
      return value.get<std::size_t>();
    }

    std::vector<std::size_t> read_index_list(json const& value, std::string const& where) {
      if (!value.is_array()) {
        throw ParseError(where + ": expected an array");
      }
      std::vector<std::size_t> out;
      for (std::size_t i = 0; i < value.size(); ++i) {
        out.push_back(read_index(value[i], where + "[" + std::to_string(i) + "]"));
      }
      return out;
    }

    std::vector<Element> read_matrix(json const& doc, char const* name, std::size_t n) {
      auto const&       rows = field(doc, name);
      std::string const where(name);
      if (!rows.is_array()) {
        throw ParseError(where + ": expected an array of rows");
      }
      if (rows.size() != n) {
        throw ParseError(where + ": expected " + std::to_string(n) + " rows, got "
                         + std::to_string(rows.size()));
      }
      std::vector<Element> out;
      for (std::size_t i = 0; i < n; ++i) {
        auto const row_where = where + "[" + std::to_string(i) + "]";
        auto const row       = read_index_list(rows[i], row_where);
        if (row.size() != n) {
          throw ParseError(row_where + ": expected " + std::to_string(n)
                           + " entries, got " + std::to_string(row.size()));
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (row[j] >= n) {
            throw ParseError(row_where + "[" + std::to_string(j) + "]: entry "
                             + std::to_string(row[j]) + " out of range for order "
                             + std::to_string(n));
          }
        }
        out.insert(out.end(), row.begin(), row.end());
      }
      return out;
    }

    DigroupTable read_digroup(json const& doc) {
      auto const n = read_index(field(doc, "order"), "order");
      if (n == 0) {
        throw ParseError("order: must be positive");
      }
      auto const identity = read_index(field(doc, "identity"), "identity");
      if (identity >= n) {
        throw ParseError("identity: " + std::to_string(identity)
                         + " out of range for order " + std::to_string(n));
      }
      auto left  = read_matrix(doc, "left", n);
      auto right = read_matrix(doc, "right", n);

      std::vector<std::string> labels;
      if (auto it = doc.find("labels"); it != doc.end() && !it->is_null()) {
        if (!it->is_array()) {
          throw ParseError("labels: expected an array of strings");
        }
        if (it->size() != n) {
          throw ParseError("labels: expected " + std::to_string(n) + " labels, got "
                           + std::to_string(it->size()));
        }
        std::set<std::string> seen;
        for (std::size_t i = 0; i < n; ++i) {
          if (!(*it)[i].is_string()) {
            throw ParseError("labels[" + std::to_string(i) + "]: expected a string");
          }
          auto label = (*it)[i].get<std::string>();
          if (!seen.insert(label).second) {
            throw ParseError("labels: duplicate label '" + label + "'");
          }
          labels.push_back(std::move(label));
        }
      }
      return DigroupTable(n, identity, std::move(left), std::move(right), std::move(labels));
    }

    void write_rows(std::ostringstream&         out,
                    std::span<Element const>    cells,
                    std::size_t                 width,
                    std::string const&          indent) {
      out << "[";
      auto const rows = width == 0 ? 0 : cells.size() / width;
      for (std::size_t i = 0; i < rows; ++i) {
        out << (i == 0 ? "\n" : ",\n") << indent << "  [";
        for (std::size_t j = 0; j < width; ++j) {
          out << (j == 0 ? "" : ", ") << cells[i * width + j];
        }
        out << "]";
      }
      out << "\n" << indent << "]";
    }

    void write_list(std::ostringstream& out, std::vector<std::size_t> const& xs) {
      out << "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out << (i == 0 ? "" : ", ") << xs[i];
      }
      out << "]";
    }

    ordered_json matrix_json(std::span<Element const> cells, std::size_t n) {
      auto rows = ordered_json::array();
      for (std::size_t i = 0; i < n; ++i) {
        rows.push_back(std::vector<Element>(cells.begin() + i * n,
                                            cells.begin() + (i + 1) * n));
      }
      return rows;
    }

    // Display width in code points; labels are short and never contain
    // combining characters.
    std::size_t display_width(std::string const& s) {
      return static_cast<std::size_t>(std::count_if(
          s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
    }

    std::string pad(std::string const& s, std::size_t width) {
      return std::string(width - std::min(width, display_width(s)), ' ') + s;
    }

  }  // namespace

  DigroupTable parse_digroup(std::string_view text) {
    return read_digroup(parse_document(text));
  }

  std::string serialize_digroup(DigroupTable const& t) {
    std::ostringstream out;
    out << "{\n  \"order\": " << t.order() << ",\n  \"identity\": " << t.identity()
        << ",\n  \"left\": ";
    write_rows(out, t.left_table(), t.order(), "  ");
    out << ",\n  \"right\": ";
    write_rows(out, t.right_table(), t.order(), "  ");
    if (t.has_labels()) {
      out << ",\n  \"labels\": [";
      for (std::size_t i = 0; i < t.order(); ++i) {
        out << (i == 0 ? "" : ", ") << json(t.labels()[i]).dump();
      }
      out << "]";
    }
    out << "\n}\n";
    return out.str();
  }

  StandardTriple parse_triple(std::string_view text) {
    auto const doc = parse_document(text);

    StandardTriple t;
    t.carrier_size = read_index(field(doc, "carrier_size"), "carrier_size");
    auto read_part = [&](char const* name) {
      auto const& rows = field(doc, name);
      if (!rows.is_array()) {
        throw ParseError(std::string(name) + ": expected an array of image lists");
      }
      std::vector<Transform> part;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        auto const where = std::string(name) + "[" + std::to_string(i) + "]";
        auto       image = read_index_list(rows[i], where);
        if (image.size() != t.carrier_size) {
          throw ParseError(where + ": expected " + std::to_string(t.carrier_size)
                           + " images, got " + std::to_string(image.size()));
        }
        try {
          part.emplace_back(std::move(image));
        } catch (StructureError const& e) {
          throw ParseError(where + ": " + e.what());
        }
      }
      return part;
    };
    t.group_part   = read_part("group_part");
    t.semi_part    = read_part("semi_part");
    t.right_unit   = read_index(field(doc, "right_unit"), "right_unit");
    t.left_inverse = read_index_list(field(doc, "left_inverse"), "left_inverse");
    t.phi          = read_index_list(field(doc, "phi"), "phi");
    return t;
  }

  std::string serialize_triple(StandardTriple const& t) {
    std::ostringstream out;
    auto write_part = [&out, &t](std::vector<Transform> const& part) {
      std::vector<Element> cells;
      for (auto const& f : part) {
        cells.insert(cells.end(), f.image().begin(), f.image().end());
      }
      write_rows(out, cells, t.carrier_size, "  ");
    };
    out << "{\n  \"carrier_size\": " << t.carrier_size << ",\n  \"group_part\": ";
    write_part(t.group_part);
    out << ",\n  \"semi_part\": ";
    write_part(t.semi_part);
    out << ",\n  \"right_unit\": " << t.right_unit << ",\n  \"left_inverse\": ";
    write_list(out, t.left_inverse);
    out << ",\n  \"phi\": ";
    write_list(out, t.phi);
    out << "\n}\n";
    return out.str();
  }

  std::string catalog_line(CatalogEntry const& entry) {
    auto const&  t = entry.canonical;
    ordered_json doc;
    doc["order"]    = t.order();
    doc["identity"] = t.identity();
    doc["left"]     = matrix_json(t.left_table(), t.order());
    doc["right"]    = matrix_json(t.right_table(), t.order());
    if (t.has_labels()) {
      doc["labels"] = t.labels();
    }
    doc["flags"] = {{"commutative", entry.commutative}, {"group", entry.group}};
    doc["subdigroup_count"] = entry.subdigroup_count;
    return doc.dump();
  }

  CatalogEntry parse_catalog_line(std::string_view line) {
    auto const doc   = parse_document(line);
    auto       table = read_digroup(doc);
    auto const& flags = field(doc, "flags");
    auto read_flag   = [&flags](char const* name) {
      auto it = flags.find(name);
      if (it == flags.end() || !it->is_boolean()) {
        throw ParseError(std::string("flags.") + name + ": expected a boolean");
      }
      return it->get<bool>();
    };
    auto const commutative = read_flag("commutative");
    auto const group       = read_flag("group");
    auto const subs = read_index(field(doc, "subdigroup_count"), "subdigroup_count");
    auto const n    = table.order();
    return CatalogEntry{std::move(table), n, commutative, group, subs};
  }

  std::string render_table(DigroupTable const& t) {
    auto const n     = t.order();
    std::size_t width = 1;
    for (Element x = 0; x < n; ++x) {
      width = std::max(width, display_width(t.label(x)));
    }

    auto grid = [&](bool right_product) {
      std::vector<std::string> lines;
      std::string header = pad(right_product ? "↼" : "⇀", width) + " |";
      for (Element y = 0; y < n; ++y) {
        header += " " + pad(t.label(y), width);
      }
      lines.push_back(header);
      lines.push_back(std::string(width + 1, '-') + "+" + std::string((width + 1) * n, '-'));
      for (Element x = 0; x < n; ++x) {
        std::string line = pad(t.label(x), width) + " |";
        for (Element y = 0; y < n; ++y) {
          line += " " + pad(t.label(right_product ? t.right(x, y) : t.left(x, y)), width);
        }
        lines.push_back(line);
      }
      return lines;
    };

    auto const left  = grid(false);
    auto const right = grid(true);
    std::string out;
    for (std::size_t i = 0; i < left.size(); ++i) {
      out += left[i] + "    " + right[i] + "\n";
    }
    return out;
  }

}  // namespace digroup
