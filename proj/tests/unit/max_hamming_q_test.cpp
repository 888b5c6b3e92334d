#include <gtest/gtest.h>

#include <random>
#include <set>

#include "checks.hpp"
#include "instances.hpp"
#include "xham/generalized_assignment.hpp"
#include "xham/max_hamming_q.hpp"
#include "xham/oracle.hpp"

namespace xham {
namespace {

using Status = GeneralizedAssignment::Status;
using testing::formula_of;

constexpr Variable a = 1, b = 2, c = 3, d = 4, e = 5;

GeneralizedAssignment tracked(std::int32_t n) {
  GeneralizedAssignment s(n);
  for (Variable v = 1; v <= n; ++v) s.track(v);
  return s;
}

TEST(SimplifyState, SingletonClauseCollapses) {
  const auto f = formula_of(3, {{a, b, c}});
  const auto r = simplify_state(f, GeneralizedAssignment(f));
  ASSERT_FALSE(r.unsat);
  EXPECT_TRUE(r.formula.empty());
  EXPECT_EQ(r.state[a].status, Status::kTrue);
  EXPECT_EQ(r.state[a].sat, std::optional<bool>(true));
  EXPECT_EQ(r.state[a].sing, (std::vector<Literal>{Literal(b, true), Literal(c, true)}));
  EXPECT_EQ(r.state[b].status, Status::kEliminated);
  EXPECT_EQ(r.state[c].status, Status::kEliminated);
}

TEST(SimplifyState, BinaryClauseKeepsNonSingleton) {
  const auto f = formula_of(5, {{a, b}, {b, c, d}, {c, d, e}});
  const auto r = simplify_state(f, GeneralizedAssignment(f));
  ASSERT_FALSE(r.unsat);
  EXPECT_EQ(r.formula.clauses, formula_of(5, {{b, c, d}, {c, d, e}}).clauses);
  EXPECT_EQ(r.state[a].status, Status::kEliminated);
  EXPECT_EQ(r.state[b].dual, (std::vector<GeneralizedAssignment::DualLink>{{a, true}}));
}

TEST(SimplifyState, FixpointUnchanged) {
  const auto f = formula_of(3, {{a, b, c}, {a, b, -c}});
  const auto r = simplify_state(f, GeneralizedAssignment(f));
  EXPECT_EQ(r.formula, f);
  for (Variable v : {a, b, c}) EXPECT_EQ(r.state[v].status, Status::kUnassigned);
}

TEST(Fix, Examples) {
  auto s = tracked(3);
  EXPECT_EQ(fix_count(s, a), 1);

  s.link_dual(a, b, true);
  EXPECT_EQ(fix_count(s, a), 2);

  auto g = tracked(3);
  g.fold_singleton(Literal(a, true), Literal(b, true));
  g.fold_singleton(Literal(a, true), Literal(c, true));
  EXPECT_EQ(fix_count(g, a), 1);
}

TEST(Di, Examples) {
  auto s = tracked(2);
  s.assign(a, true);
  EXPECT_EQ(di_count(s, a), 0);

  auto g = tracked(2);
  g.fold_singleton(Literal(a, true), Literal(b, true));
  g.assign(a, true);
  EXPECT_EQ(di_count(g, a), fix_count(g, a));
  EXPECT_EQ(di_count(g, a), 1);

  auto n = tracked(2);
  n.assign(a, false);
  n.link_dual(a, b, true);
  EXPECT_EQ(di_count(n, a), 0);
}

TEST(GenH, Examples) {
  const auto f = formula_of(3, {{a, b, c}});
  const auto r = simplify_state(f, GeneralizedAssignment(f));
  EXPECT_EQ(gen_h(r.state), 2);

  auto fixed = tracked(2);
  fixed.assign(a, true);
  fixed.assign(b, false);
  EXPECT_EQ(gen_h(fixed), 0);

  auto free = tracked(2);
  free.link_dual(b, a, true);
  EXPECT_EQ(gen_h(free), 2);
}

TEST(GenH, GroupMemberWithTree) {
  // The member carrying a subtree can take the satisfactor role in one model
  // only; the group then contributes both its flip and the subtree.
  const auto f = formula_of(4, {{d, a}, {a, b, c}});
  EXPECT_EQ(max_hamming_q(f).value(), 3);
  EXPECT_EQ(max_hamming_brute(f).value(), 3);
}

TEST(GenH, MatchesExpansionOnRandomForests) {
  std::mt19937_64 rng(5);
  for (int iter = 0; iter < 400; ++iter) {
    const int n = 3 + static_cast<int>(rng() % 8);
    auto s = tracked(n);
    // Each variable either stays a root or hangs below a higher one, so a
    // variable may collect children before it is eliminated itself.
    for (Variable v = 1; v < n; ++v) {
      if (rng() % 3 == 0) continue;
      const auto p = static_cast<Variable>(v + 1 + static_cast<int>(rng() % static_cast<unsigned>(n - v)));
      if (rng() % 2 == 0)
        s.fold_singleton(Literal(p, rng() % 2 == 0), Literal(v, rng() % 2 == 0));
      else
        s.link_dual(p, v, rng() % 2 == 0);
    }
    for (Variable r : s.roots())
      if (rng() % 2 == 0) s.assign(r, rng() % 2 == 0);
    ASSERT_TRUE(s.well_formed()) << s.well_formedness_error();
    EXPECT_EQ(gen_h(s), testing::max_pairwise_distance(expand_state(s)));
  }
}

TEST(MaxHammingQ, Examples) {
  EXPECT_TRUE(max_hamming_q(formula_of(1, {{a}, {-a}})).is_unsat());
  EXPECT_EQ(max_hamming_q(formula_of(4, {{a, b}, {c, d}})).value(), 4);
  EXPECT_EQ(max_hamming_q(formula_of(4, {{a, b, c}, {a, b, d}})).value(), 3);
  EXPECT_EQ(max_hamming_q(Formula{}).value(), 0);
  EXPECT_EQ(max_hamming_q(formula_of(3, {{a, b, c}})).value(), 2);
}

TEST(MaxHammingQ, EliminatedPartnerCountedOnce) {
  // Adding one for every dual branch on top of the eliminated partner over-counts here.
  const auto f = formula_of(7, {{-4, -7, -5}, {-4, 1, 6}, {1, 2, -5}, {-2, 7, -3}});
  EXPECT_EQ(max_hamming_brute(f).value(), 4);
  EXPECT_EQ(max_hamming_q(f).value(), 4);
}

TEST(MaxHammingQ, CounterInvariant) {
  NodeCounter counter;
  max_hamming_q(random_formula(12, 5, 4, 3), &counter);
  EXPECT_GE(counter.nodes, 1u);
  EXPECT_LE(counter.leaves, counter.nodes);
}

TEST(MaxHammingQProperty, MatchesOracle) {
  for (int len = 2; len <= 6; ++len)
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
      const auto f = testing::random_instance(seed + 10'000, len).formula;
      ASSERT_EQ(max_hamming_q(f), max_hamming_brute(f)) << serialize_formula(f);
    }
}

TEST(MaxHammingQProperty, MatchesOracleOnSparseMixed) {
  for (std::uint64_t seed = 0; seed < 5000; ++seed) {
    const auto f = testing::sparse_mixed(seed);
    ASSERT_EQ(max_hamming_q(f), max_hamming_brute(f)) << serialize_formula(f);
  }
}

TEST(MaxHammingQProperty, LeavesExpandToModels) {
  for (int len = 2; len <= 5; ++len)
    for (std::uint64_t seed = 0; seed < 150; ++seed) {
      const auto f = seed % 2 ? testing::random_instance(seed, len, 10).formula : testing::sparse_mixed(seed * 7 + len);
      bool split = false;
      std::set<Assignment> covered;
      QTrace trace;
      trace.on_split = [&](std::size_t) { split = true; };
      trace.on_leaf = [&](const GeneralizedAssignment& s, std::span<const Variable> roots) {
        ASSERT_TRUE(s.well_formed()) << s.well_formedness_error();
        const auto xs = expand_state(s, roots);
        EXPECT_EQ(gen_h(s, roots), testing::max_pairwise_distance(xs)) << serialize_formula(f);
        covered.insert(xs.begin(), xs.end());
      };
      max_hamming_q(f, nullptr, trace);
      if (split) continue;
      const auto models = enumerate_xmodels(f);
      EXPECT_EQ(covered, std::set<Assignment>(models.begin(), models.end())) << serialize_formula(f);
    }
}

TEST(MaxHammingQProperty, ComponentAdditivity) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 100; ++seed) {
    const auto f1 = testing::random_instance(seed, 2 + static_cast<int>(seed % 4), 7).formula;
    const auto f2 = testing::random_instance(seed + 777, 2 + static_cast<int>((seed / 4) % 4), 7).formula;
    const auto q1 = max_hamming_q(f1), q2 = max_hamming_q(f2);
    if (q1.is_unsat() || q2.is_unsat()) continue;
    ++checked;
    EXPECT_EQ(max_hamming_q(testing::disjoint_union(f1, f2)).value(), q1.value() + q2.value());
  }
}

TEST(MaxHammingQProperty, Symmetry) {
  std::mt19937_64 rng(11);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto f = testing::random_instance(seed, 2 + static_cast<int>(seed % 5)).formula;
    std::vector<Variable> perm(static_cast<std::size_t>(f.num_vars) + 1);
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin() + 1, perm.end(), rng);
    std::vector<bool> flip(perm.size());
    for (std::size_t i = 1; i < flip.size(); ++i) flip[i] = rng() % 2 == 0;
    EXPECT_EQ(max_hamming_q(testing::permute(f, perm, flip)), max_hamming_q(f));
  }
}

}  // namespace
}  // namespace xham
