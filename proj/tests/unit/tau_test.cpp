#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "xham/tau.hpp"

namespace xham {
namespace {

double tau(std::string_view spec) { return tau_root(parse_branch_spec(spec)); }

TEST(Tau, Examples) {
  EXPECT_NEAR(tau("1 1"), 2.0, 1e-9);
  EXPECT_NEAR(tau("2 2"), std::sqrt(2.0), 1e-9);
  EXPECT_NEAR(tau("1 3"), 1.4656, 1e-4);
  EXPECT_NEAR(tau("7 7 3 3 3 3 3 3"), 1.8348, 1e-4);
  EXPECT_EQ(tau("3"), 1.0);
}

TEST(Tau, EmptyRejected) {
  EXPECT_THROW(tau_root(std::vector<int>{}), std::invalid_argument);
  EXPECT_THROW(tau_root(std::vector<int>{2, 0}), std::invalid_argument);
}

TEST(BranchSpec, Expansion) {
  EXPECT_EQ(parse_branch_spec("5^2 3^3").decrements, (std::vector<int>{5, 5, 3, 3, 3}));
  EXPECT_EQ(parse_branch_spec("1 3").decrements, (std::vector<int>{1, 3}));
  EXPECT_EQ(parse_branch_spec("7^2 3^6").decrements, (std::vector<int>{7, 7, 3, 3, 3, 3, 3, 3}));
}

TEST(BranchSpec, Malformed) {
  for (const char* s : {"", "0", "-2", "3^0", "3^", "^2", "3^x", "a", "3^2^2"})
    EXPECT_THROW(parse_branch_spec(s), std::invalid_argument) << s;
}

TEST(TauProperty, Residual) {
  for (const char* s : {"1 3", "2 2", "5 1 4^4", "7^2 3^6", "6 4^4 3^3", "5^2 4^6", "4 3 2^2", "6^2 5 4 3^4"})
    EXPECT_LT(std::abs(tau_polynomial(parse_branch_spec(s).decrements, tau(s))), 1e-8) << s;
}

TEST(TauProperty, BalancedBranching) { EXPECT_LT(tau("2 2"), tau("1 3")); }

TEST(TauProperty, PermutationInvariant) {
  std::mt19937 rng(3);
  std::vector<int> rs{7, 7, 3, 3, 3, 3, 3, 3, 5, 1};
  const double base = tau_root(rs);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(rs.begin(), rs.end(), rng);
    EXPECT_DOUBLE_EQ(tau_root(rs), base);
  }
}

TEST(RootPower, ClosedForms) {
  EXPECT_NEAR(root_power(2, 2), 1.4142, 1e-4);
  EXPECT_NEAR(root_power(7, 4), 1.6266, 1e-4);
  EXPECT_NEAR(root_power(11, 5), 1.6154, 1e-4);
  EXPECT_NEAR(root_power(4, 3), std::cbrt(4.0), 1e-12);
}

}  // namespace
}  // namespace xham
