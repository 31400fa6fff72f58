#include <gtest/gtest.h>

#include "support.hpp"

namespace digroup {
  namespace {

    using namespace digroup::testing;

    TEST(TripleFromDigroup, Sizes) {
      auto const m = triple_from_digroup(M());
      EXPECT_EQ(m.carrier_size, 2u);
      EXPECT_EQ(m.group_part.size(), 1u);
      EXPECT_EQ(m.semi_part.size(), 2u);
      auto const n = triple_from_digroup(N());
      EXPECT_EQ(n.carrier_size, 6u);
      EXPECT_EQ(n.group_part.size(), 2u);
      EXPECT_EQ(n.semi_part.size(), 6u);
      auto const z2 = triple_from_digroup(builtin("Z2"));
      EXPECT_EQ(z2.group_part, z2.semi_part);
      EXPECT_EQ(z2.group_part.size(), 2u);
      EXPECT_TRUE(Mapping(2, 2, z2.phi).is_bijective());
    }

    TEST(ValidateTriple, ExtractedTriplesPass) {
      for (auto const& [name, t] : named_pool()) {
        auto const report = validate_triple(triple_from_digroup(t));
        EXPECT_TRUE(report.ok()) << name;
      }
    }

    TEST(ValidateTriple, GroupTriple) {
      // left regular representation of Z3 with phi the identity
      StandardTriple t;
      t.carrier_size = 3;
      t.group_part   = {Transform({0, 1, 2}), Transform({1, 2, 0}), Transform({2, 0, 1})};
      t.semi_part    = t.group_part;
      t.right_unit   = 0;
      t.left_inverse = {0, 2, 1};
      t.phi          = {0, 1, 2};
      EXPECT_TRUE(validate_triple(t).ok());
      auto const d = digroup_from_triple(t);
      EXPECT_EQ(d.order(), 9u);
      EXPECT_TRUE(is_group(d));
      EXPECT_TRUE(find_isomorphism(d, direct_product(builtin("Z3"), builtin("Z3"))));
    }

    TEST(ValidateTriple, NonUnitRightUnit) {
      auto t          = triple_from_digroup(N());
      auto const unit = t.right_unit;
      t.right_unit    = (unit + 1) % t.semi_part.size();
      auto const report = validate_triple(t);
      EXPECT_FALSE(report.ok());
      EXPECT_TRUE(report.contains(Law::kRightUnit));
    }

    TEST(ValidateTriple, BrokenPhiAndInverse) {
      auto t = triple_from_digroup(N());
      for (auto& p : t.phi) p = 0;
      EXPECT_FALSE(validate_triple(t).ok());

      auto u = triple_from_digroup(N());
      std::size_t bad = 0;
      while (compose(u.semi_part[bad], u.semi_part[1]) == u.semi_part[u.right_unit]) ++bad;
      u.left_inverse[1] = bad;
      EXPECT_TRUE(validate_triple(u).contains(Law::kLeftInverse));

      auto v = triple_from_digroup(M());
      v.group_part = {Transform({1, 0})};
      EXPECT_TRUE(validate_triple(v).contains(Law::kGroupIdentity));
    }

    TEST(ValidateTriple, MalformedThrows) {
      auto t = triple_from_digroup(N());
      t.phi.pop_back();
      EXPECT_THROW(validate_triple(t), StructureError);
      auto u = triple_from_digroup(N());
      u.semi_part.push_back(u.semi_part.front());
      u.phi.push_back(0);
      u.left_inverse.push_back(0);
      EXPECT_THROW(validate_triple(u), StructureError);
      auto v = triple_from_digroup(N());
      v.right_unit = 6;
      EXPECT_THROW(validate_triple(v), StructureError);
    }

    TEST(DigroupFromTriple, RoundTrips) {
      auto const m = digroup_from_triple(triple_from_digroup(M()));
      EXPECT_EQ(m.order(), 2u);
      EXPECT_TRUE(find_isomorphism(m, M()));

      auto const n = digroup_from_triple(triple_from_digroup(N()));
      EXPECT_EQ(n.order(), 12u);
      EXPECT_TRUE(validate_digroup(n).ok());
      bool found = false;
      for (auto const& h : all_subdigroups(n)) {
        if (h.size() == 6 && find_isomorphism(restrict_to(n, h), N())) {
          found = true;
        }
      }
      EXPECT_TRUE(found);
    }

    TEST(DigroupFromTriple, MatchesTranslationProduct) {
      for (auto const& [name, t] : named_pool()) {
        EXPECT_TRUE(round_trip_matches_product(t)) << name;
      }
    }

    TEST(DigroupFromTriple, RejectsInvalid) {
      auto t       = triple_from_digroup(N());
      t.right_unit = (t.right_unit + 1) % t.semi_part.size();
      EXPECT_THROW(digroup_from_triple(t), std::invalid_argument);
    }

  }  // namespace
}  // namespace digroup
