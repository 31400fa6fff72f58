#include "digroup/enumerator.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "digroup/core.hpp"
#include "digroup/morphism.hpp"
#include "digroup/subdigroup.hpp"

namespace digroup {

  CatalogEntry make_catalog_entry(DigroupTable canonical) {
    auto const order       = canonical.order();
    auto const commutative = is_commutative(canonical);
    auto const group       = is_group(canonical);
    auto const subs        = all_subdigroups(canonical).size();
    return CatalogEntry{std::move(canonical), order, commutative, group, subs};
  }

  namespace {

    using Flat = std::vector<Element>;

    constexpr int kLeftOp  = 0;
    constexpr int kRightOp = 1;

    // One side of a diassociative equality: outer(x, inner(y, z)) when
    // inner_right, otherwise outer(inner(x, y), z).
    struct Side {
      int  outer;
      int  inner;
      bool inner_right;
    };

    struct Equation {
      Side lhs;
      Side rhs;
    };

    constexpr std::array<Equation, 5> kEquations = {{
        {{kLeftOp, kLeftOp, true}, {kLeftOp, kLeftOp, false}},
        {{kLeftOp, kLeftOp, true}, {kLeftOp, kRightOp, true}},
        {{kLeftOp, kRightOp, false}, {kRightOp, kLeftOp, true}},
        {{kRightOp, kLeftOp, false}, {kRightOp, kRightOp, false}},
        {{kRightOp, kRightOp, false}, {kRightOp, kRightOp, true}},
    }};

    using Decision = std::pair<int, int>;  // cell, value

    // Backtracking search over the 2n^2 cells of a table pair with identity
    // 0. Every assignment is propagated through the five diassociative
    // equalities: once one side of an instance is fully known and the other
    // side only lacks its outer cell, that cell is forced. The unit laws are
    // seeded up front and a Liu-inverse feasibility check runs after each
    // propagation round. Symmetry is broken with the least-number heuristic;
    // exact deduplication happens by canonical form at the leaves.
    class TableSearch {
     public:
      explicit TableSearch(int n)
          : _n(n), _nn(n * n), _cells(2 * n * n, kUnknown) {
        for (int a = 0; a < n; ++a) {
          for (int b = 0; b < n; ++b) {
            _order.push_back(index(kLeftOp, a, b));
            _order.push_back(index(kRightOp, a, b));
          }
        }
        std::stable_sort(_order.begin(), _order.end(), [this](int c1, int c2) {
          return std::max(row(c1), col(c1)) < std::max(row(c2), col(c2));
        });
      }

      // Seeds x -> 0 = x and 0 <- x = x. Returns false if the theory has no
      // model of this order at all.
      bool seed() {
        for (int x = 0; x < _n; ++x) {
          if (!assign(index(kLeftOp, x, 0), x)
              || !assign(index(kRightOp, 0, x), x)) {
            return false;
          }
        }
        bool ok = propagate();
        // The seeded state is invariant under every permutation fixing 0,
        // so only later assignments count towards the used labels.
        _track = true;
        return ok;
      }

      bool replay(std::vector<Decision> const& path) {
        for (auto [c, v] : path) {
          if (!assign(c, v) || !propagate()) {
            return false;
          }
        }
        return true;
      }

      // Depth-first search below the current state. on_leaf receives every
      // complete table and returns false to stop the search.
      template <typename Leaf>
      bool run(Leaf&& on_leaf) {
        int const c = next_unassigned();
        if (c < 0) {
          return on_leaf(_cells);
        }
        for (int v : candidates(c)) {
          auto const mark  = _trail.size();
          auto const saved = _max_seen;
          bool       keep  = true;
          if (assign(c, v) && propagate()) {
            keep = run(on_leaf);
          }
          undo(mark);
          _max_seen = saved;
          if (!keep) {
            return false;
          }
        }
        return true;
      }

      // Decision paths of length `depth` (or shorter, if they already reach
      // a complete table) that survive propagation, in search order.
      void split(std::size_t                         depth,
                 std::vector<Decision>&              path,
                 std::vector<std::vector<Decision>>& out) {
        int const c = next_unassigned();
        if (c < 0 || path.size() == depth) {
          out.push_back(path);
          return;
        }
        for (int v : candidates(c)) {
          auto const mark  = _trail.size();
          auto const saved = _max_seen;
          if (assign(c, v) && propagate()) {
            path.emplace_back(c, v);
            split(depth, path, out);
            path.pop_back();
          }
          undo(mark);
          _max_seen = saved;
        }
      }

     private:
      static constexpr std::int8_t kUnknown = -1;

      int index(int op, int a, int b) const noexcept {
        return op * _nn + a * _n + b;
      }
      int op_of(int c) const noexcept { return c / _nn; }
      int row(int c) const noexcept { return (c % _nn) / _n; }
      int col(int c) const noexcept { return c % _n; }
      int get(int op, int a, int b) const noexcept {
        return _cells[index(op, a, b)];
      }

      int next_unassigned() const noexcept {
        for (int c : _order) {
          if (_cells[c] == kUnknown) {
            return c;
          }
        }
        return -1;
      }

      // Least-number heuristic: labels above every label in use (and above
      // the coordinates of c) are interchangeable, so only the first of them
      // is tried.
      std::vector<int> candidates(int c) const {
        int const bound = std::max({_max_seen, row(c), col(c)}) + 1;
        int const top   = std::min(_n - 1, bound);
        std::vector<int> out;
        for (int v = 0; v <= top; ++v) {
          out.push_back(v);
        }
        return out;
      }

      bool assign(int c, int v) {
        if (_cells[c] == v) {
          return true;
        }
        if (_cells[c] != kUnknown) {
          return false;
        }
        _cells[c] = static_cast<std::int8_t>(v);
        _trail.push_back(c);
        _pending.push_back(c);
        if (_track) {
          _max_seen = std::max({_max_seen, row(c), col(c), v});
        }
        return true;
      }

      void undo(std::size_t mark) {
        while (_trail.size() > mark) {
          _cells[_trail.back()] = kUnknown;
          _trail.pop_back();
        }
      }

      bool propagate() {
        bool ok = true;
        while (ok) {
          while (ok && _head < _pending.size()) {
            ok = on_assigned(_pending[_head++]);
          }
          if (!ok) {
            break;
          }
          ok = check_inverses();
          if (_head == _pending.size()) {
            break;
          }
        }
        _pending.clear();
        _head = 0;
        return ok;
      }

      // Each x needs some y with y -> x == 0 and x <- y == 0; a unique
      // remaining candidate is forced.
      bool check_inverses() {
        for (int x = 0; x < _n; ++x) {
          int  count     = 0;
          int  candidate = -1;
          bool settled   = false;
          for (int y = 0; y < _n; ++y) {
            int const l = get(kLeftOp, y, x);
            int const r = get(kRightOp, x, y);
            if ((l == kUnknown || l == 0) && (r == kUnknown || r == 0)) {
              ++count;
              candidate = y;
              settled   = settled || (l == 0 && r == 0);
            }
          }
          if (count == 0) {
            return false;
          }
          if (count == 1 && !settled) {
            if (!assign(index(kLeftOp, candidate, x), 0)
                || !assign(index(kRightOp, x, candidate), 0)) {
              return false;
            }
          }
        }
        return true;
      }

      struct Evaluated {
        int cell;   // outer cell, or -1 when the inner product is unknown
        int value;  // value of the outer cell, or kUnknown
      };

      Evaluated evaluate(Side const& s, int x, int y, int z) const noexcept {
        int const inner = s.inner_right ? get(s.inner, y, z) : get(s.inner, x, y);
        if (inner == kUnknown) {
          return {-1, kUnknown};
        }
        int const cell = s.inner_right ? index(s.outer, x, inner)
                                       : index(s.outer, inner, z);
        return {cell, _cells[cell]};
      }

      bool check(Equation const& eq, int x, int y, int z) {
        auto const l = evaluate(eq.lhs, x, y, z);
        if (l.cell < 0) {
          return true;
        }
        auto const r = evaluate(eq.rhs, x, y, z);
        if (r.cell < 0) {
          return true;
        }
        if (l.value != kUnknown && r.value != kUnknown) {
          return l.value == r.value;
        }
        if (l.value != kUnknown) {
          return assign(r.cell, l.value);
        }
        if (r.value != kUnknown) {
          return assign(l.cell, r.value);
        }
        return true;
      }

      // Re-examines every equation instance in which cell c occurs, either
      // as an inner product or as an outer one.
      bool on_assigned(int c) {
        int const op = op_of(c);
        int const a  = row(c);
        int const b  = col(c);
        int const v  = _cells[c];

        // x <- 0 == 0 -> x
        if (op == kLeftOp && a == 0 && !assign(index(kRightOp, b, 0), v)) {
          return false;
        }
        if (op == kRightOp && b == 0 && !assign(index(kLeftOp, 0, a), v)) {
          return false;
        }

        for (auto const& eq : kEquations) {
          for (Side const* s : {&eq.lhs, &eq.rhs}) {
            if (s->inner == op) {
              for (int w = 0; w < _n; ++w) {
                bool const ok = s->inner_right ? check(eq, w, a, b)
                                               : check(eq, a, b, w);
                if (!ok) {
                  return false;
                }
              }
            }
            if (s->outer == op) {
              // The inner product must evaluate to the coordinate of c that
              // it feeds into.
              int const wanted = s->inner_right ? b : a;
              for (int p = 0; p < _n; ++p) {
                for (int q = 0; q < _n; ++q) {
                  if (get(s->inner, p, q) != wanted) {
                    continue;
                  }
                  bool const ok = s->inner_right ? check(eq, a, p, q)
                                                 : check(eq, p, q, b);
                  if (!ok) {
                    return false;
                  }
                }
              }
            }
          }
        }
        return true;
      }

      int                       _n;
      int                       _nn;
      std::vector<std::int8_t>  _cells;
      std::vector<int>          _order;
      std::vector<int>          _trail;
      std::vector<int>          _pending;
      std::size_t               _head     = 0;
      int                       _max_seen = 0;
      bool                      _track    = false;
    };

    DigroupTable table_from_cells(std::size_t                     n,
                                  std::vector<std::int8_t> const& cells) {
      std::vector<Element> left(n * n), right(n * n);
      for (std::size_t i = 0; i < n * n; ++i) {
        left[i]  = static_cast<Element>(cells[i]);
        right[i] = static_cast<Element>(cells[n * n + i]);
      }
      return DigroupTable(n, 0, std::move(left), std::move(right));
    }

    // Canonical flattened table of a leaf. Leaves are re-validated with the
    // independent checker so that a propagation bug cannot leak a non-model.
    Flat canonical_leaf(DigroupTable const& table) {
      if (!validate_digroup(table).ok()) {
        throw ConstructionError("search produced a table that is not a digroup");
      }
      return flatten(canonical_form(table).table);
    }

    std::vector<CatalogEntry> to_entries(std::size_t n, std::set<Flat> const& found) {
      std::vector<CatalogEntry> out;
      for (auto const& flat : found) {
        std::vector<Element> left(flat.begin(), flat.begin() + n * n);
        std::vector<Element> right(flat.begin() + n * n, flat.end());
        out.push_back(make_catalog_entry(
            DigroupTable(n, 0, std::move(left), std::move(right))));
      }
      return out;
    }

    std::set<Flat> search_sequential(std::size_t n, std::optional<std::size_t> cap) {
      std::set<Flat> found;
      TableSearch    search(static_cast<int>(n));
      if (!search.seed()) {
        return found;
      }
      search.run([&](std::vector<std::int8_t> const& cells) {
        found.insert(canonical_leaf(table_from_cells(n, cells)));
        return !cap || found.size() < *cap;
      });
      return found;
    }

    std::set<Flat> search_parallel(std::size_t n, std::size_t workers) {
      std::vector<std::vector<Decision>> tasks;
      {
        TableSearch splitter(static_cast<int>(n));
        if (!splitter.seed()) {
          return {};
        }
        std::vector<Decision> path;
        splitter.split(3, path, tasks);
      }

      std::atomic<std::size_t> next{0};
      std::mutex               merge_mutex;
      std::set<Flat>           found;
      std::exception_ptr       failure;

      auto worker = [&]() {
        try {
          std::set<Flat> local;
          for (auto i = next++; i < tasks.size(); i = next++) {
            TableSearch search(static_cast<int>(n));
            if (!search.seed() || !search.replay(tasks[i])) {
              throw ConstructionError("replaying a search prefix failed");
            }
            search.run([&](std::vector<std::int8_t> const& cells) {
              local.insert(canonical_leaf(table_from_cells(n, cells)));
              return true;
            });
          }
          std::lock_guard lock(merge_mutex);
          found.merge(local);
        } catch (...) {
          std::lock_guard lock(merge_mutex);
          failure = std::current_exception();
        }
      };

      std::vector<std::thread> pool;
      for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back(worker);
      }
      for (auto& t : pool) {
        t.join();
      }
      if (failure) {
        std::rethrow_exception(failure);
      }
      return found;
    }

  }  // namespace

  std::vector<CatalogEntry> naive_enumerate(std::size_t n) {
    if (n < 1 || n > kMaxNaiveOrder) {
      throw OrderError("naive enumeration supports orders 1.."
                       + std::to_string(kMaxNaiveOrder) + ", got "
                       + std::to_string(n));
    }
    // Free cells: x -> y for y != 0, and x <- y for x, y != 0. The rest is
    // fixed by the unit laws.
    std::vector<std::size_t> free_cells;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) {
        free_cells.push_back(x * n + y);
      }
    }
    for (std::size_t x = 1; x < n; ++x) {
      for (std::size_t y = 1; y < n; ++y) {
        free_cells.push_back(n * n + x * n + y);
      }
    }

    std::vector<std::size_t> digits(free_cells.size(), 0);
    std::set<Flat>           found;
    while (true) {
      std::vector<Element> cells(2 * n * n, 0);
      for (std::size_t k = 0; k < free_cells.size(); ++k) {
        cells[free_cells[k]] = digits[k];
      }
      for (std::size_t x = 0; x < n; ++x) {
        cells[x * n]         = x;                // x -> 0 = x
        cells[n * n + x]     = x;                // 0 <- x = x
        cells[n * n + x * n] = cells[x];         // x <- 0 = 0 -> x
      }
      DigroupTable table(n,
                         0,
                         {cells.begin(), cells.begin() + n * n},
                         {cells.begin() + n * n, cells.end()});
      if (validate_digroup(table).ok()) {
        found.insert(flatten(canonical_form(table).table));
      }

      std::size_t k = 0;
      while (k < digits.size() && ++digits[k] == n) {
        digits[k++] = 0;
      }
      if (k == digits.size()) {
        break;
      }
    }
    return to_entries(n, found);
  }

  std::vector<CatalogEntry> enumerate_digroups(std::size_t n, SearchOptions const& opts) {
    if (opts.mode == SearchMode::kNaive) {
      auto entries = naive_enumerate(n);
      if (opts.max_solutions && entries.size() > *opts.max_solutions) {
        entries.erase(entries.begin() + static_cast<std::ptrdiff_t>(*opts.max_solutions), entries.end());
      }
      return entries;
    }
    auto const ceiling = opts.allow_large_order ? kMaxCanonicalOrder
                                                : kMaxDefaultEnumerationOrder;
    if (n < 1 || n > ceiling) {
      throw OrderError("enumeration supports orders 1.." + std::to_string(ceiling)
                       + ", got " + std::to_string(n));
    }
    if (opts.workers == 0) {
      throw std::invalid_argument("at least one worker is required");
    }
    std::set<Flat> found;
    if (opts.max_solutions || opts.workers == 1) {
      found = search_sequential(n, opts.max_solutions);
    } else {
      found = search_parallel(n, opts.workers);
    }
    return to_entries(n, found);
  }

  ClassCounts count_classes(std::vector<CatalogEntry> const& entries) {
    ClassCounts c;
    for (auto const& entry : entries) {
      ++c.total;
      ++(entry.commutative ? c.commutative : c.non_commutative);
      ++(entry.group ? c.groups : c.non_group);
    }
    return c;
  }

  ClassCounts count_by_class(std::size_t n, SearchOptions const& opts) {
    return count_classes(enumerate_digroups(n, opts));
  }

  bool ClaimReport::all_pass() const noexcept {
    return std::all_of(claims.begin(), claims.end(), [](ClaimRecord const& c) {
      return c.pass;
    });
  }

  namespace {

    template <typename Body>
    ClaimRecord timed_claim(std::string id, std::string expected, Body&& body) {
      auto const  start = std::chrono::steady_clock::now();
      ClaimRecord record{std::move(id), std::move(expected), "", false, 0.0};
      try {
        body(record);
      } catch (std::exception const& e) {
        record.pass     = false;
        record.observed = std::string("error: ") + e.what();
      }
      record.runtime_seconds = std::chrono::duration<double>(
                                   std::chrono::steady_clock::now() - start)
                                   .count();
      return record;
    }

    std::string describe(ClassCounts const& c) {
      std::ostringstream out;
      out << "total=" << c.total << " commutative=" << c.commutative
          << " groups=" << c.groups << " non_group=" << c.non_group
          << " non_commutative=" << c.non_commutative;
      return out.str();
    }

  }  // namespace

  ClaimReport verify_claims(SearchOptions const& opts) {
    SearchOptions search;
    search.workers = opts.workers;
    ClaimReport report;

    report.claims.push_back(timed_claim(
        "C1", "order 1 has exactly one class, the trivial group", [&](ClaimRecord& r) {
          auto const entries = enumerate_digroups(1, search);
          auto const counts  = count_classes(entries);
          r.observed         = describe(counts);
          r.pass             = counts.total == 1 && counts.groups == 1;
        }));

    report.claims.push_back(timed_claim(
        "C2",
        "order 2 has a non-group class isomorphic to M; order 1 has none",
        [&](ClaimRecord& r) {
          auto const m_canon = canonical_form(builtin("M")).table;
          auto const order1  = count_by_class(1, search);
          auto const entries = enumerate_digroups(2, search);
          bool       m_found = false;
          for (auto const& entry : entries) {
            m_found = m_found || (!entry.group && entry.canonical == m_canon);
          }
          auto const counts = count_classes(entries);
          r.observed = describe(counts) + " M_present=" + (m_found ? "yes" : "no")
                       + " order1_non_group=" + std::to_string(order1.non_group);
          r.pass = m_found && order1.non_group == 0;
        }));

    report.claims.push_back(timed_claim(
        "C3", "every digroup of order 3, 4 and 5 is commutative", [&](ClaimRecord& r) {
          bool               pass = true;
          std::ostringstream out;
          for (std::size_t n = 3; n <= 5; ++n) {
            auto const counts = count_by_class(n, search);
            out << (n > 3 ? "; " : "") << "n=" << n << ": " << describe(counts);
            pass = pass && counts.non_commutative == 0;
          }
          r.observed = out.str();
          r.pass     = pass;
        }));

    report.claims.push_back(timed_claim(
        "C4",
        "order 6 has exactly one non-commutative non-group class, containing N",
        [&](ClaimRecord& r) {
          auto const         n_canon = canonical_form(builtin("N")).table;
          auto const         entries = enumerate_digroups(6, search);
          std::size_t        non_group_nc = 0;
          bool               n_matches    = false;
          std::ostringstream classes;
          std::size_t        index = 0;
          for (auto const& entry : entries) {
            if (entry.commutative) {
              ++index;
              continue;
            }
            classes << " [class " << index << (entry.group ? " group" : " non-group")
                    << (entry.canonical == n_canon ? " =N" : "") << "]";
            if (!entry.group) {
              ++non_group_nc;
              n_matches = entry.canonical == n_canon;
            }
            ++index;
          }
          r.observed = describe(count_classes(entries))
                       + " non_commutative_non_group=" + std::to_string(non_group_nc)
                       + " non_commutative_classes:" + classes.str();
          r.pass = non_group_nc == 1 && n_matches;
        }));

    report.claims.push_back(timed_claim(
        "C5", "N is a digroup and β -> β = δ differs from β <- β = ε", [&](ClaimRecord& r) {
          auto const n     = builtin("N");
          Element    beta  = 2;
          auto const left  = n.left(beta, beta);
          auto const right = n.right(beta, beta);
          r.observed = "valid=" + std::string(validate_digroup(n).ok() ? "yes" : "no")
                       + " β⇀β=" + n.label(left) + " β↼β=" + n.label(right);
          r.pass = validate_digroup(n).ok() && !commutes(n, beta, beta)
                   && n.label(left) == "δ" && n.label(right) == "ε";
        }));

    return report;
  }

}  // namespace digroup
