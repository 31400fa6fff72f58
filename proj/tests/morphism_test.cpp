#include <gtest/gtest.h>

#include <random>
#include <set>

#include "support.hpp"

namespace digroup {
  namespace {

    using namespace digroup::testing;

    TEST(Homomorphism, Examples) {
      EXPECT_TRUE(is_homomorphism(N(), N(), Mapping::identity(6)));
      EXPECT_TRUE(is_homomorphism(M(), M(), Mapping(2, 2, {0, 0})));
      EXPECT_FALSE(is_homomorphism(M(), builtin("Z2"), Mapping(2, 2, {0, 1})));
      EXPECT_FALSE(is_homomorphism(M(), N(), Mapping(2, 2, {0, 1})));
    }

    TEST(Homomorphism, QuotientOfN) {
      // {e, δ, ε} and {α, β, γ} are the fibres of L<
      Mapping fibres(6, 2, {0, 1, 1, 1, 0, 0});
      EXPECT_TRUE(is_homomorphism(N(), builtin("Z2"), fibres));
      EXPECT_FALSE(is_homomorphism(N(), M(), fibres));
    }

    TEST(Isomorphism, Examples) {
      auto const swap    = Mapping(2, 2, {1, 0});
      auto const swapped = relabel(M(), swap);
      auto const found   = find_isomorphism(M(), swapped);
      ASSERT_TRUE(found);
      EXPECT_EQ(*found, swap);
      EXPECT_FALSE(find_isomorphism(M(), builtin("Z2")));
      EXPECT_EQ(find_isomorphism(N(), N()), Mapping::identity(6));
      EXPECT_FALSE(find_isomorphism(N(), builtin("S3")));
      EXPECT_FALSE(find_isomorphism(M(), N()));
    }

    TEST(Isomorphism, RandomRelabelings) {
      std::mt19937 rng(11);
      for (auto const& [name, t] : named_pool()) {
        for (int round = 0; round < 5; ++round) {
          auto const p     = random_permutation(t.order(), rng);
          auto const other = relabel(t, p);
          auto const iso   = find_isomorphism(t, other);
          ASSERT_TRUE(iso) << name;
          EXPECT_TRUE(is_homomorphism(t, other, *iso)) << name;
          EXPECT_TRUE(iso->is_bijective()) << name;
        }
      }
    }

    TEST(Relabel, Basics) {
      auto const r = relabel(N(), Mapping::identity(6));
      EXPECT_EQ(r, N());
      EXPECT_THROW(relabel(N(), Mapping(6, 6, {0, 0, 1, 2, 3, 4})), StructureError);
      auto const moved = relabel(M(), Mapping(2, 2, {1, 0}));
      EXPECT_EQ(moved.identity(), Element{1});
      EXPECT_EQ(moved.label(1), "0");
    }

    TEST(Automorphisms, Examples) {
      EXPECT_EQ(automorphisms(M()), (std::vector<Mapping>{Mapping::identity(2)}));
      EXPECT_EQ(automorphisms(builtin("Z2")), (std::vector<Mapping>{Mapping::identity(2)}));
      EXPECT_EQ(automorphisms(builtin("Z3")).size(), 2u);
      EXPECT_EQ(automorphisms(builtin("S3")).size(), 6u);
      EXPECT_EQ(automorphisms(trivial_digroup(4)).size(), 6u);
      for (auto const& a : automorphisms(N())) {
        EXPECT_TRUE(is_homomorphism(N(), N(), a));
        EXPECT_EQ(a(kE), kE);
      }
    }

    TEST(Canonical, RandomRelabelingInvariance) {
      std::mt19937 rng(23);
      for (auto const& [name, t] : named_pool()) {
        if (t.order() > kMaxCanonicalOrder) continue;
        auto const base = canonical_form(t);
        EXPECT_EQ(base.table.identity(), Element{0});
        EXPECT_FALSE(base.table.has_labels());
        EXPECT_EQ(relabel(t.without_labels(), base.certificate), base.table) << name;
        for (int round = 0; round < 10; ++round) {
          auto const p = round % 2 == 0 ? random_permutation(t.order(), rng)
                                        : random_permutation_fixing(t.order(), t.identity(), rng);
          auto const other = canonical_form(relabel(t, p));
          EXPECT_EQ(other.table, base.table) << name;
        }
      }
    }

    TEST(Canonical, SeparatesClasses) {
      std::set<std::vector<Element>> seen;
      for (auto const& [name, t] : named_pool()) {
        EXPECT_TRUE(seen.insert(flatten(canonical_form(t).table)).second) << name;
      }
      EXPECT_THROW(canonical_form(trivial_digroup(9)), OrderError);
    }

  }  // namespace
}  // namespace digroup
