#include <gtest/gtest.h>

#include "instances.hpp"
#include "xham/max_hamming_p.hpp"
#include "xham/oracle.hpp"

namespace xham {
namespace {

using testing::formula_of;

constexpr Variable a = 1, b = 2, c = 3, d = 4;

TEST(AllowedSubset, Examples) {
  const auto f = formula_of(3, {{a, b, c}});
  EXPECT_TRUE(allowed_subset_check(f, VariableSet{a, b}));
  EXPECT_FALSE(allowed_subset_check(f, VariableSet{a}));
  EXPECT_TRUE(allowed_subset_check(formula_of(4, {{a, b, c}, {a, b, d}}), VariableSet{a, c, d}));
}

TEST(FlippedUnion, Examples) {
  const auto f = formula_of(3, {{a, b, c}});
  EXPECT_EQ(flipped_union(f, VariableSet{a, b}), formula_of(3, {{a, b, c}, {-a, -b, c}}));
  EXPECT_EQ(flipped_union(f, VariableSet{}), f);
  EXPECT_EQ(flipped_union(formula_of(4, {{a, b}, {c, d}}), VariableSet{c, d}),
            formula_of(4, {{a, b}, {c, d}, {-c, -d}}));
  EXPECT_THROW(flipped_union(f, VariableSet{a}), std::invalid_argument);
}

TEST(MaxHammingP, Examples) {
  EXPECT_TRUE(max_hamming_p(formula_of(1, {{a}, {-a}})).is_unsat());

  const auto f = formula_of(3, {{a, b, c}});
  const auto r = max_hamming_p(f);
  EXPECT_EQ(r.value(), 2);
  ASSERT_TRUE(r.witnesses());
  EXPECT_TRUE(verify_xmodel(f, r.witnesses()->first));
  EXPECT_TRUE(verify_xmodel(f, r.witnesses()->second));

  EXPECT_EQ(max_hamming_p(formula_of(4, {{a, b, c}, {a, b, d}})).value(), 3);
  EXPECT_EQ(max_hamming_p(Formula{}).value(), 0);
}

TEST(MaxHammingPProperty, MatchesOracleWithValidWitnesses) {
  for (int len = 2; len <= 6; ++len)
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
      const auto inst = testing::random_instance(seed, len, 10);
      const auto& f = inst.formula;
      const auto p = max_hamming_p(f);
      ASSERT_EQ(p, max_hamming_brute(f)) << serialize_formula(f);
      if (p.is_unsat()) continue;
      ASSERT_TRUE(p.witnesses());
      EXPECT_TRUE(verify_xmodel(f, p.witnesses()->first));
      EXPECT_TRUE(verify_xmodel(f, p.witnesses()->second));
      EXPECT_EQ(hamming_distance(p.witnesses()->first, p.witnesses()->second), p.value());
    }
}

TEST(MaxHammingPProperty, SolverCallsEqualAllowedSubsets) {
  for (int len = 2; len <= 5; ++len)
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
      const auto f = testing::random_instance(seed, len, 10).formula;
      const auto allowed = count_allowed_subsets_brute(f);
      PStats exhaustive;
      const auto r1 = max_hamming_p(f, &exhaustive, PSearchOrder::kAscendingExhaustive);
      EXPECT_EQ(exhaustive.solver_calls, allowed);
      EXPECT_EQ(exhaustive.subsets_tested, std::uint64_t{1} << f.variables().size());
      PStats early;
      const auto r2 = max_hamming_p(f, &early);
      EXPECT_LE(early.solver_calls, allowed);
      EXPECT_EQ(r1, r2);
    }
}

TEST(MaxHammingPProperty, PruningIsSound) {
  // A subset failing the allowed test is never the difference set of two models.
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const auto f = testing::random_instance(seed, 2 + static_cast<int>(seed % 4), 10).formula;
    const auto models = enumerate_xmodels(f);
    for (std::size_t i = 0; i < models.size(); ++i)
      for (std::size_t j = i + 1; j < models.size(); ++j) {
        VariableSet x;
        for (Variable v : f.variables())
          if (models[i].value(v) != models[j].value(v)) x.push_back(v);
        EXPECT_TRUE(allowed_subset_check(f, x));
      }
  }
}

}  // namespace
}  // namespace xham
