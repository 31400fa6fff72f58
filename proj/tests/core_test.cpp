#include <gtest/gtest.h>

#include <random>

#include "support.hpp"

namespace digroup {
  namespace {

    using namespace digroup::testing;

    TEST(Validate, BuiltinsPass) {
      EXPECT_TRUE(validate_digroup(M()).ok());
      EXPECT_TRUE(validate_digroup(N()).ok());
      EXPECT_TRUE(validate_digroup(builtin("S3")).ok());
      for (std::size_t n = 1; n <= 6; ++n) {
        EXPECT_TRUE(validate_digroup(trivial_digroup(n)).ok()) << n;
        EXPECT_TRUE(validate_digroup(cyclic_group(n)).ok()) << n;
      }
    }

    TEST(Validate, BrokenMReportsDiassocAtAAA) {
      auto const m = M();
      auto left  = std::vector<Element>(m.left_table().begin(), m.left_table().end());
      auto right = std::vector<Element>(m.right_table().begin(), m.right_table().end());
      left[1 * 2 + 1] = 0;
      auto const report = validate_digroup(DigroupTable(2, 0, left, right));
      ASSERT_FALSE(report.ok());
      EXPECT_TRUE(report.contains(Law::kDiassocLeftLeft));
      auto const& vs = report.violations();
      auto hit = std::find_if(vs.begin(), vs.end(), [](Violation const& v) {
        return v.law == Law::kDiassocLeftLeft && v.witnesses == std::vector<std::size_t>{1, 1, 1};
      });
      ASSERT_NE(hit, vs.end());
      // a -> (a -> a) = a -> 0 = a, (a -> a) -> a = 0 -> a = 0
      EXPECT_EQ(hit->lhs, Element{1});
      EXPECT_EQ(hit->rhs, Element{0});
    }

    TEST(Validate, ReportIsSorted) {
      std::mt19937 rng(7);
      std::uniform_int_distribution<Element> cell(0, 2);
      for (int round = 0; round < 50; ++round) {
        std::vector<Element> left(9), right(9);
        for (auto& c : left) c = cell(rng);
        for (auto& c : right) c = cell(rng);
        auto const report = validate_digroup(DigroupTable(3, 0, left, right));
        auto const& vs    = report.violations();
        EXPECT_TRUE(std::is_sorted(vs.begin(), vs.end(), [](auto const& a, auto const& b) {
          return std::tie(a.law, a.witnesses) < std::tie(b.law, b.witnesses);
        }));
      }
    }

    TEST(Validate, BarUnitAndInverseLaws) {
      // x -> e fails when left row e is not the identity column
      DigroupTable swapped(2, 0, {1, 0, 1, 0}, {0, 1, 0, 1});
      auto const report = validate_digroup(swapped);
      EXPECT_TRUE(report.contains(Law::kBarUnitRight));
      EXPECT_EQ(to_string(Law::kBarUnitRight), "BARUNIT_RIGHT");
      EXPECT_EQ(to_string(Law::kDiassocLeftLeft), "DIASSOC_1");
    }

    TEST(Table, RejectsMalformedInput) {
      EXPECT_THROW(DigroupTable(0, 0, {}, {}), StructureError);
      EXPECT_THROW(DigroupTable(2, 2, {0, 0, 1, 1}, {0, 1, 0, 1}), StructureError);
      EXPECT_THROW(DigroupTable(2, 0, {0, 0, 1}, {0, 1, 0, 1}), StructureError);
      EXPECT_THROW(DigroupTable(2, 0, {0, 0, 1, 2}, {0, 1, 0, 1}), StructureError);
      EXPECT_THROW(DigroupTable(2, 0, {0, 0, 1, 1}, {0, 1, 0, 1}, {"x", "x"}), StructureError);
      EXPECT_THROW(DigroupTable(2, 0, {0, 0, 1, 1}, {0, 1, 0, 1}, {"x"}), StructureError);
    }

    TEST(Table, Labels) {
      EXPECT_EQ(N().label(kBeta), "β");
      EXPECT_EQ(trivial_digroup(3).label(2), "2");
      EXPECT_TRUE(M().same_operations(trivial_digroup(2)));
      EXPECT_EQ(M().without_labels(), trivial_digroup(2).without_labels());
    }

    TEST(LiuInverse, Examples) {
      EXPECT_EQ(liu_inverse(M(), 1), Element{0});
      EXPECT_EQ(liu_inverse(N(), kBeta), kAlpha);
      EXPECT_EQ(liu_inverse(builtin("Z2"), 1), Element{1});
      EXPECT_EQ(liu_inverse_map(M()).image(), (std::vector<Element>{0, 0}));
      EXPECT_EQ(liu_inverse_map(N())(kDelta), kE);
    }

    TEST(LiuInverse, MatchesScanAndIsUnique) {
      for (auto const& [name, t] : named_pool()) {
        auto const inv = liu_inverse_map(t);
        for (Element x = 0; x < t.order(); ++x) {
          auto const found = scan_liu_inverses(t, x);
          ASSERT_EQ(found.size(), 1u) << name << " " << x;
          EXPECT_EQ(inv(x), found.front()) << name << " " << x;
        }
      }
    }

    TEST(LiuInverse, GroupInverseForGroups) {
      auto const s3 = builtin("S3");
      auto const inv = liu_inverse_map(s3);
      for (Element x = 0; x < 6; ++x) {
        EXPECT_EQ(s3.left(x, inv(x)), s3.identity());
        EXPECT_EQ(s3.left(inv(x), x), s3.identity());
      }
      EXPECT_TRUE(inv.is_bijective());
    }

    TEST(LiuInverse, Errors) {
      EXPECT_THROW(liu_inverse(M(), 2), std::out_of_range);
      // identity 0, nothing maps back to 0 under 1 -> x
      DigroupTable no_inverse(2, 0, {0, 1, 1, 1}, {0, 1, 1, 1});
      EXPECT_THROW(liu_inverse(no_inverse, 1), std::invalid_argument);
    }

    TEST(Commutes, Examples) {
      EXPECT_FALSE(commutes(N(), kBeta, kBeta));
      EXPECT_EQ(N().left(kBeta, kBeta), kDelta);
      EXPECT_EQ(N().right(kBeta, kBeta), kEps);
      EXPECT_TRUE(commutes(M(), 0, 1));
      EXPECT_TRUE(commutes(N(), kE, kAlpha));
    }

    TEST(Properties, CommutativeAndGroup) {
      EXPECT_TRUE(is_commutative(M()));
      EXPECT_FALSE(is_commutative(N()));
      EXPECT_TRUE(is_commutative(builtin("Z2")));
      EXPECT_FALSE(is_commutative(builtin("S3")));
      EXPECT_TRUE(is_group(builtin("Z2")));
      EXPECT_TRUE(is_group(builtin("S3")));
      EXPECT_FALSE(is_group(M()));
      EXPECT_FALSE(is_group(N()));
      EXPECT_NE(N().left(kE, kBeta), N().right(kE, kBeta));
    }

    TEST(Builtin, Tables) {
      auto const m = M();
      EXPECT_EQ(m.left(1, 0), Element{1});
      EXPECT_EQ(m.left(1, 1), Element{1});
      std::vector<Element> row_beta;
      for (Element y = 0; y < 6; ++y) row_beta.push_back(N().right(kBeta, y));
      EXPECT_EQ(row_beta, (std::vector<Element>{kAlpha, kE, kEps, kDelta, kGamma, kBeta}));

      auto const t3 = builtin("trivial(3)");
      EXPECT_TRUE(validate_digroup(t3).ok());
      EXPECT_TRUE(is_commutative(t3));
      EXPECT_FALSE(is_group(t3));

      EXPECT_EQ(builtin("trivial3"), builtin("trivial(3)"));
      EXPECT_EQ(builtin("Z5"), builtin("cyclic(5)"));
      EXPECT_EQ(builtin("trivial(1)").order(), 1u);
      EXPECT_THROW(builtin("Q8"), std::invalid_argument);
      EXPECT_THROW(builtin("trivial(0)"), std::invalid_argument);
    }

    TEST(Builtin, S3IsNonAbelianGroup) {
      auto const s3 = builtin("S3");
      EXPECT_EQ(s3.order(), 6u);
      EXPECT_TRUE(s3.same_operations(s3));
      EXPECT_TRUE(std::equal(s3.left_table().begin(), s3.left_table().end(),
                             s3.right_table().begin()));
    }

    TEST(DirectProduct, Examples) {
      auto const mz2 = direct_product(M(), builtin("Z2"));
      EXPECT_EQ(mz2.order(), 4u);
      EXPECT_TRUE(validate_digroup(mz2).ok());
      auto const mm = direct_product(M(), M());
      EXPECT_TRUE(is_commutative(mm));
      EXPECT_FALSE(is_group(mm));
      EXPECT_EQ(mz2.label(1), "(0,1)");
    }

    TEST(DirectProduct, ComponentwiseProperty) {
      std::vector<DigroupTable> pool = {M(), builtin("Z2"), builtin("Z3"), trivial_digroup(3), N()};
      for (auto const& a : pool) {
        for (auto const& b : pool) {
          if (a.order() * b.order() > 18) continue;
          auto const p = direct_product(a, b);
          ASSERT_TRUE(validate_digroup(p).ok());
          EXPECT_EQ(is_commutative(p), is_commutative(a) && is_commutative(b));
          EXPECT_EQ(is_group(p), is_group(a) && is_group(b));
          auto const nb = b.order();
          for (Element x = 0; x < p.order(); ++x) {
            for (Element y = 0; y < p.order(); ++y) {
              EXPECT_EQ(p.left(x, y), a.left(x / nb, y / nb) * nb + b.left(x % nb, y % nb));
              EXPECT_EQ(p.right(x, y), a.right(x / nb, y / nb) * nb + b.right(x % nb, y % nb));
            }
          }
        }
      }
    }

  }  // namespace
}  // namespace digroup
