// One PASS/FAIL line per acceptance criterion. Exit status is nonzero when
// any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "support.hpp"

namespace {

  using namespace digroup;
  using namespace digroup::testing;

  struct Outcome {
    bool        pass;
    std::string detail;
  };

  Outcome examples_validate() {
    auto const m = M(), n = N();
    bool const pass = validate_digroup(m).ok() && validate_digroup(n).ok() && is_commutative(m)
                      && !is_group(m) && !is_commutative(n) && !is_group(n)
                      && n.left(kBeta, kBeta) == kDelta && n.right(kBeta, kBeta) == kEps
                      && !commutes(n, kBeta, kBeta);
    return {pass, "M commutative non-group, N non-commutative at (β, β)"};
  }

  Outcome liu_inverse_facts() {
    bool pass = liu_inverse_map(M()).image() == std::vector<Element>{0, 0};
    for (auto const& t : {M(), N(), builtin("S3"), trivial_digroup(4)}) {
      auto const inv = liu_inverse_map(t);
      for (Element x = 0; x < t.order(); ++x) {
        auto const found = scan_liu_inverses(t, x);
        pass = pass && found.size() == 1 && found.front() == inv(x);
      }
    }
    return {pass, "M -> [0, 0]; unique on M, N, S3, trivial(4)"};
  }

  Outcome criteria_agree() {
    bool        pass    = true;
    std::size_t subsets = 0;
    for (auto const& t : {M(), N()}) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << t.order()); ++bits) {
        auto const h = SubsetMask::from_bits(t.order(), bits);
        pass         = pass && subdigroup_criteria(t, h).all_equal();
        ++subsets;
      }
    }
    return {pass && subsets == 68, std::to_string(subsets) + " subsets"};
  }

  Outcome translation_identities() {
    bool pass = true;
    for (auto const& [name, t] : named_pool()) {
      pass = pass && verify_translation_identities(t).ok();
    }
    return {pass, std::to_string(named_pool().size()) + " digroups"};
  }

  Outcome cayley_counterpart() {
    auto const pool = embedding_pool();
    bool       pass = true;
    for (auto const& [name, t] : pool) {
      try {
        auto const p = cayley_embedding(t);
        pass = pass && validate_digroup(p.table).ok() && p.eta.is_injective()
               && is_homomorphism(t, p.table, p.eta) && is_subdigroup(p.table, p.diagonal)
               && find_isomorphism(restrict_to(p.table, p.diagonal), t).has_value();
      } catch (std::exception const&) {
        pass = false;
      }
    }
    return {pass, std::to_string(pool.size()) + " digroups"};
  }

  Outcome triple_round_trip() {
    auto const pool = embedding_pool();
    bool       pass = true;
    for (auto const& [name, t] : pool) {
      try {
        auto const triple = triple_from_digroup(t);
        pass = pass && validate_triple(triple).ok()
               && validate_digroup(digroup_from_triple(triple)).ok()
               && round_trip_matches_product(t);
      } catch (std::exception const&) {
        pass = false;
      }
    }
    return {pass, std::to_string(pool.size()) + " digroups"};
  }

  Outcome small_classification() {
    auto const one = enumerate_digroups(1);
    auto const two = enumerate_digroups(2);
    bool pass = one.size() == 1 && two.size() == 2;
    if (pass) {
      bool const z2_first = find_isomorphism(two[0].canonical, builtin("Z2")).has_value();
      auto const& z2 = two[z2_first ? 0 : 1].canonical;
      auto const& m  = two[z2_first ? 1 : 0].canonical;
      pass = find_isomorphism(z2, builtin("Z2")).has_value()
             && find_isomorphism(m, M()).has_value();
    }
    for (std::size_t n = 1; n <= 3; ++n) {
      pass = pass && naive_enumerate(n) == enumerate_digroups(n);
    }
    return {pass, "n=1: " + std::to_string(one.size()) + ", n=2: " + std::to_string(two.size())
                      + ", naive agrees for n <= 3"};
  }

  Outcome commutative_below_six() {
    bool        pass = true;
    std::string detail;
    for (std::size_t n = 3; n <= 5; ++n) {
      auto const c = count_by_class(n);
      pass         = pass && c.non_commutative == 0;
      detail += "n=" + std::to_string(n) + ": " + std::to_string(c.non_commutative) + " ";
    }
    return {pass, detail + "non-commutative classes"};
  }

  Outcome unique_at_six() {
    auto const  entries = enumerate_digroups(6);
    auto const  target  = canonical_form(N()).table;
    std::size_t odd = 0, raw = 0;
    bool        is_n = false;
    for (auto const& e : entries) {
      if (!e.commutative) {
        ++raw;
        if (!e.group) {
          ++odd;
          is_n = e.canonical == target;
        }
      }
    }
    return {odd == 1 && is_n,
            std::to_string(entries.size()) + " classes, " + std::to_string(raw)
                + " non-commutative, " + std::to_string(odd) + " of them not groups"};
  }

  Outcome group_counts() {
    std::vector<std::size_t> groups;
    for (std::size_t n = 1; n <= 5; ++n) {
      groups.push_back(count_by_class(n).groups);
    }
    std::string detail;
    for (auto g : groups) detail += std::to_string(g) + " ";
    return {groups == std::vector<std::size_t>{1, 1, 1, 2, 1}, "groups per order: " + detail};
  }

  Outcome determinism() {
    bool pass = true;
    for (std::size_t n = 1; n <= 5; ++n) {
      SearchOptions four;
      four.workers = 4;
      std::string a, b, c;
      for (auto const& e : enumerate_digroups(n)) a += catalog_line(e) + "\n";
      for (auto const& e : enumerate_digroups(n)) b += catalog_line(e) + "\n";
      for (auto const& e : enumerate_digroups(n, four)) c += catalog_line(e) + "\n";
      pass = pass && a == b && a == c;
    }
    return {pass, "1 and 4 workers, n <= 5"};
  }

}  // namespace

int main() {
  struct Criterion {
    int                      id;
    char const*              name;
    double                   budget_seconds;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> const criteria = {
      {1, "builtin examples validate", 1, examples_validate},
      {2, "Liu inverse facts", 1, liu_inverse_facts},
      {3, "subdigroup criteria agree", 1, criteria_agree},
      {4, "translation identities", 5, translation_identities},
      {5, "Cayley counterpart", 60, cayley_counterpart},
      {6, "standard triple round trip", 60, triple_round_trip},
      {7, "small-order classification", 60, small_classification},
      {8, "no non-commutative digroup below order 6", 300, commutative_below_six},
      {9, "unique non-commutative non-group at order 6", 600, unique_at_six},
      {10, "group counts for orders 1..5", 60, group_counts},
      {11, "deterministic catalogs", 60, determinism},
  };

  int failures = 0;
  for (auto const& c : criteria) {
    auto const start = std::chrono::steady_clock::now();
    Outcome    outcome;
    try {
      outcome = c.run();
    } catch (std::exception const& e) {
      outcome = {false, std::string("exception: ") + e.what()};
    }
    double const seconds
        = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    bool const within = seconds <= c.budget_seconds;
    bool const pass   = outcome.pass && within;
    failures += pass ? 0 : 1;
    std::ostringstream line;
    line.setf(std::ios::fixed);
    line.precision(3);
    line << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.name << " ["
         << outcome.detail << "] " << seconds << "s (budget " << c.budget_seconds << "s"
         << (within ? "" : ", exceeded") << ")";
    std::cout << line.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
