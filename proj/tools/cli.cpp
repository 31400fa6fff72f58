#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>

#include "digroup/digroup.hpp"

namespace digroup::cli {

  namespace {

    // Unreadable files and similar problems with the command's inputs.
    class InputError : public std::runtime_error {
     public:
      using std::runtime_error::runtime_error;
    };

    std::string read_file(std::string const& path) {
      std::ifstream in(path, std::ios::binary);
      if (!in) {
        throw InputError("cannot read " + path);
      }
      std::ostringstream buffer;
      buffer << in.rdbuf();
      return buffer.str();
    }

    void write_output(std::string const& path, std::string const& text, std::ostream& out) {
      if (path.empty()) {
        out << text;
        return;
      }
      std::ofstream file(path, std::ios::binary);
      if (!file || !(file << text)) {
        throw InputError("cannot write " + path);
      }
    }

    std::string join_labels(DigroupTable const&         t,
                            std::vector<std::size_t> const& xs,
                            char const*                 open,
                            char const*                 close) {
      std::string s = open;
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i == 0 ? "" : ", ") + t.label(xs[i]);
      }
      return s + close;
    }

    void print_report(DigroupTable const& t, ValidationReport const& report, std::ostream& out) {
      if (report.ok()) {
        out << "ok: digroup of order " << t.order() << " with identity "
            << t.label(t.identity()) << "\n";
        return;
      }
      out << "not a digroup: " << report.violations().size() << " violation(s)\n";
      for (auto const& v : report.violations()) {
        out << "  " << to_string(v.law) << " at " << join_labels(t, v.witnesses, "(", ")");
        if (v.lhs && v.rhs) {
          out << ": " << t.label(*v.lhs) << " != " << t.label(*v.rhs);
        }
        out << "\n";
      }
    }

    void print_triple_report(ValidationReport const& report, std::ostream& out) {
      if (report.ok()) {
        out << "ok: standard triple\n";
        return;
      }
      out << "not a standard triple: " << report.violations().size() << " violation(s)\n";
      for (auto const& v : report.violations()) {
        out << "  " << to_string(v.law) << " at [";
        for (std::size_t i = 0; i < v.witnesses.size(); ++i) {
          out << (i == 0 ? "" : ", ") << v.witnesses[i];
        }
        out << "]\n";
      }
    }

    // Loads a digroup document and requires it to pass validation. Returns
    // nullopt (after printing the report) when it does not.
    std::optional<DigroupTable> load_valid(std::string const& path, std::ostream& out) {
      auto table  = parse_digroup(read_file(path));
      auto report = validate_digroup(table);
      if (!report.ok()) {
        out << path << ": ";
        print_report(table, report, out);
        return std::nullopt;
      }
      return table;
    }

    std::string mapping_text(DigroupTable const& from, DigroupTable const& to, Mapping const& m) {
      std::string s;
      for (Element x = 0; x < from.order(); ++x) {
        s += (x == 0 ? "" : " ") + from.label(x) + "->" + to.label(m(x));
      }
      return s;
    }

    std::string index_list(std::vector<std::size_t> const& xs) {
      std::string s = "[";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        s += (i == 0 ? "" : ", ") + std::to_string(xs[i]);
      }
      return s + "]";
    }

    int cmd_check(std::string const& path, std::ostream& out) {
      auto table  = parse_digroup(read_file(path));
      auto report = validate_digroup(table);
      print_report(table, report, out);
      return report.ok() ? kSuccess : kPropertyFalse;
    }

    int cmd_info(std::string const& path, std::ostream& out) {
      auto table = load_valid(path, out);
      if (!table) {
        return kPropertyFalse;
      }
      auto const& t   = *table;
      auto const  inv = liu_inverse_map(t);
      out << "order: " << t.order() << "\n"
          << "identity: " << t.label(t.identity()) << "\n"
          << "commutative: " << (is_commutative(t) ? "yes" : "no") << "\n"
          << "group: " << (is_group(t) ? "yes" : "no") << "\n"
          << "liu_inverse: " << mapping_text(t, t, inv) << "\n";
      if (t.order() <= kMaxSubsetScanOrder) {
        out << "subdigroups: " << all_subdigroups(t).size() << "\n";
      } else {
        out << "subdigroups: not counted above order " << kMaxSubsetScanOrder << "\n";
      }
      out << "\n" << render_table(t);
      return kSuccess;
    }

    int cmd_subs(std::string const& path, std::ostream& out) {
      auto table = load_valid(path, out);
      if (!table) {
        return kPropertyFalse;
      }
      for (auto const& h : all_subdigroups(*table)) {
        out << join_labels(*table, h.members(), "{", "}") << "\n";
      }
      return kSuccess;
    }

    int cmd_iso(std::string const& first, std::string const& second, std::ostream& out) {
      auto a = load_valid(first, out);
      auto b = load_valid(second, out);
      if (!a || !b) {
        return kPropertyFalse;
      }
      auto iso = find_isomorphism(*a, *b);
      if (!iso) {
        out << "not isomorphic\n";
        return kPropertyFalse;
      }
      out << mapping_text(*a, *b, *iso) << "\n";
      return kSuccess;
    }

    int cmd_embed(std::string const& path, bool use_right, std::string const& out_path, std::ostream& out) {
      auto table = load_valid(path, out);
      if (!table) {
        return kPropertyFalse;
      }
      auto const product = use_right ? right_translation_product(*table)
                                     : cayley_embedding(*table);
      write_output(out_path, serialize_digroup(product.table), out);
      out << "eta: " << index_list(product.eta.image()) << "\n"
          << "diagonal: " << index_list(product.diagonal.members()) << "\n";
      return kSuccess;
    }

    int cmd_triple_extract(std::string const& path, std::string const& out_path, std::ostream& out) {
      auto table = load_valid(path, out);
      if (!table) {
        return kPropertyFalse;
      }
      write_output(out_path, serialize_triple(triple_from_digroup(*table)), out);
      return kSuccess;
    }

    int cmd_triple_check(std::string const& path, std::ostream& out) {
      auto const report = validate_triple(parse_triple(read_file(path)));
      print_triple_report(report, out);
      return report.ok() ? kSuccess : kPropertyFalse;
    }

    int cmd_triple_build(std::string const& path, std::string const& out_path, std::ostream& out) {
      auto const triple = parse_triple(read_file(path));
      auto const report = validate_triple(triple);
      if (!report.ok()) {
        print_triple_report(report, out);
        return kPropertyFalse;
      }
      write_output(out_path, serialize_digroup(digroup_from_triple(triple)), out);
      return kSuccess;
    }

    std::string counts_text(ClassCounts const& c) {
      std::ostringstream s;
      s << "total=" << c.total << " commutative=" << c.commutative << " groups=" << c.groups
        << " non_group=" << c.non_group << " non_commutative=" << c.non_commutative << "\n";
      return s.str();
    }

    int cmd_enumerate(std::size_t          n,
                      SearchOptions const& opts,
                      bool                 count_only,
                      std::string const&   out_path,
                      std::ostream&        out) {
      auto const entries = enumerate_digroups(n, opts);
      if (count_only) {
        write_output(out_path, counts_text(count_classes(entries)), out);
        return kSuccess;
      }
      std::string text;
      for (auto const& entry : entries) {
        text += catalog_line(entry) + "\n";
      }
      write_output(out_path, text, out);
      return kSuccess;
    }

    int cmd_claims(std::size_t workers, std::ostream& out) {
      SearchOptions opts;
      opts.workers      = workers;
      auto const report = verify_claims(opts);
      for (auto const& claim : report.claims) {
        out << claim.id << " " << (claim.pass ? "PASS" : "FAIL") << " (" << std::fixed
            << std::setprecision(2) << claim.runtime_seconds << "s)\n"
            << "  expected: " << claim.expected << "\n"
            << "  observed: " << claim.observed << "\n";
      }
      return report.all_pass() ? kSuccess : kPropertyFalse;
    }

  }  // namespace

  int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite digroup toolkit", "digroup"};
    app.require_subcommand(1);

    std::function<int()> action;
    std::string          file, file2, out_path, name;
    std::size_t          order   = 0;
    std::size_t          workers = 1;
    bool                 naive = false, count_only = false, allow_large = false,
         use_right = false;

    auto* check = app.add_subcommand("check", "Validate a digroup file and print the report");
    check->add_option("FILE", file)->required();
    check->callback([&] { action = [&] { return cmd_check(file, out); }; });

    auto* info = app.add_subcommand("info", "Order, commutativity, Liu inverses, subdigroup count");
    info->add_option("FILE", file)->required();
    info->callback([&] { action = [&] { return cmd_info(file, out); }; });

    auto* subs = app.add_subcommand("subs", "List all subdigroups");
    subs->add_option("FILE", file)->required();
    subs->callback([&] { action = [&] { return cmd_subs(file, out); }; });

    auto* iso = app.add_subcommand("iso", "Find an isomorphism between two digroups");
    iso->add_option("FILE1", file)->required();
    iso->add_option("FILE2", file2)->required();
    iso->callback([&] { action = [&] { return cmd_iso(file, file2, out); }; });

    auto* embed = app.add_subcommand("embed", "Embed a digroup into its translation product");
    embed->add_option("FILE", file)->required();
    embed->add_option("--out", out_path, "Write the product digroup here");
    embed->add_flag("--right", use_right, "Use right translations instead of left");
    embed->callback([&] { action = [&] { return cmd_embed(file, use_right, out_path, out); }; });

    auto* triple = app.add_subcommand("triple", "Standard triple workflows");
    triple->require_subcommand(1);
    auto* extract = triple->add_subcommand("extract", "Standard triple of a digroup");
    extract->add_option("FILE", file)->required();
    extract->add_option("--out", out_path);
    extract->callback([&] { action = [&] { return cmd_triple_extract(file, out_path, out); }; });
    auto* tcheck = triple->add_subcommand("check", "Validate a standard triple file");
    tcheck->add_option("FILE", file)->required();
    tcheck->callback([&] { action = [&] { return cmd_triple_check(file, out); }; });
    auto* build = triple->add_subcommand("build", "Digroup produced by a standard triple");
    build->add_option("FILE", file)->required();
    build->add_option("--out", out_path);
    build->callback([&] { action = [&] { return cmd_triple_build(file, out_path, out); }; });

    auto* enumerate = app.add_subcommand("enumerate", "Digroups of order N up to isomorphism");
    enumerate->add_option("N", order)->required()->check(CLI::PositiveNumber);
    enumerate->add_flag("--naive", naive, "Use the brute-force scan (N <= 3)");
    enumerate->add_flag("--count-only", count_only, "Print class counts only");
    enumerate->add_option("--out", out_path, "Write the JSONL catalog here");
    enumerate->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_flag("--allow-large-order", allow_large, "Permit orders 7 and 8");
    enumerate->callback([&] {
      action = [&] {
        SearchOptions opts;
        opts.workers           = workers;
        opts.mode              = naive ? SearchMode::kNaive : SearchMode::kPropagating;
        opts.allow_large_order = allow_large;
        return cmd_enumerate(order, opts, count_only, out_path, out);
      };
    });

    auto* claims = app.add_subcommand("claims", "Check the minimality and uniqueness claims");
    claims->add_option("--workers", workers, "Worker threads")->check(CLI::PositiveNumber);
    claims->callback([&] { action = [&] { return cmd_claims(workers, out); }; });

    auto* builtin_cmd = app.add_subcommand("builtin", "Emit a builtin digroup");
    builtin_cmd->add_option("NAME", name, "M, N, S3, trivial(n), cyclic(n) or Zn")->required();
    builtin_cmd->add_option("--out", out_path);
    builtin_cmd->callback([&] {
      action = [&] {
        write_output(out_path, serialize_digroup(builtin(name)), out);
        return kSuccess;
      };
    });

    std::reverse(args.begin(), args.end());
    try {
      app.parse(args);
    } catch (CLI::CallForHelp const&) {
      out << app.help();
      return kSuccess;
    } catch (CLI::CallForAllHelp const&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kSuccess;
    } catch (CLI::ParseError const& e) {
      err << "error: " << e.what() << "\n\n" << app.help();
      return kUsageError;
    }

    try {
      return action();
    } catch (ParseError const& e) {
      err << "error: " << e.what() << "\n";
    } catch (StructureError const& e) {
      err << "error: " << e.what() << "\n";
    } catch (OrderError const& e) {
      err << "error: " << e.what() << "\n";
    } catch (InputError const& e) {
      err << "error: " << e.what() << "\n";
    } catch (std::invalid_argument const& e) {
      err << "error: " << e.what() << "\n";
    }
    return kUsageError;
  }

}  // namespace digroup::cli
