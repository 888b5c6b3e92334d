#include "xham/generalized_assignment.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <stdexcept>

namespace xham {

using Status = GeneralizedAssignment::Status;

GeneralizedAssignment::GeneralizedAssignment(const Formula& f)
    : GeneralizedAssignment(f.num_vars) {
  for (Variable v : f.variables()) track(v);
}

GeneralizedAssignment::GeneralizedAssignment(std::int32_t num_vars)
    : nodes_(static_cast<std::size_t>(num_vars) + 1) {}

bool GeneralizedAssignment::is_assigned(Variable v) const {
  auto st = (*this)[v].status;
  return st == Status::kTrue || st == Status::kFalse;
}

bool GeneralizedAssignment::value(Variable v) const {
  if (!is_assigned(v)) throw std::logic_error("variable " + std::to_string(v) + " has no value");
  return (*this)[v].status == Status::kTrue;
}

void GeneralizedAssignment::assign(Variable v, bool value) {
  auto& n = (*this)[v];
  if (n.status == Status::kEliminated)
    throw std::logic_error("assign: variable " + std::to_string(v) + " is eliminated");
  n.status = value ? Status::kTrue : Status::kFalse;
}

void GeneralizedAssignment::fold_singleton(Literal rep_lit, Literal member_lit) {
  auto& rep = (*this)[rep_lit.var()];
  auto& member = (*this)[member_lit.var()];
  if (!rep.sat) rep.sat = rep_lit.positive();
  rep.sing.push_back(member_lit);
  rep.sing.insert(rep.sing.end(), member.sing.begin(), member.sing.end());
  member.sing.clear();
  member.sat.reset();
  member.status = Status::kEliminated;
}

void GeneralizedAssignment::link_dual(Variable parent, Variable child, bool negated) {
  (*this)[parent].dual.push_back({child, negated});
  (*this)[child].status = Status::kEliminated;
}

std::vector<Variable> GeneralizedAssignment::roots() const {
  std::vector<Variable> out;
  for (Variable v = 1; v <= num_vars(); ++v)
    if ((*this)[v].tracked && (*this)[v].status != Status::kEliminated) out.push_back(v);
  return out;
}

std::string GeneralizedAssignment::well_formedness_error() const {
  const auto size = nodes_.size();
  std::vector<int> parents(size, 0);
  for (Variable v = 1; v <= num_vars(); ++v) {
    const auto& n = (*this)[v];
    if (!n.sing.empty() && !n.sat)
      return "representative " + std::to_string(v) + " has no sat marker";
    for (Literal m : n.sing) {
      ++parents[static_cast<std::size_t>(m.var())];
      if (!(*this)[m.var()].sing.empty())
        return "group member " + std::to_string(m.var()) + " has its own group";
    }
    for (const auto& d : n.dual) ++parents[static_cast<std::size_t>(d.var)];
  }
  for (Variable v = 1; v <= num_vars(); ++v) {
    const auto p = parents[static_cast<std::size_t>(v)];
    const bool eliminated = (*this)[v].status == Status::kEliminated;
    if (eliminated && p != 1)
      return "eliminated variable " + std::to_string(v) + " is in " + std::to_string(p) +
             " link sets";
    if (!eliminated && p != 0)
      return "live variable " + std::to_string(v) + " appears in a link set";
  }

  // Every eliminated variable must hang below some root.
  std::vector<bool> seen(size, false);
  std::vector<Variable> stack;
  for (Variable v = 1; v <= num_vars(); ++v)
    if ((*this)[v].status != Status::kEliminated) stack.push_back(v);
  while (!stack.empty()) {
    Variable v = stack.back();
    stack.pop_back();
    seen[static_cast<std::size_t>(v)] = true;
    for (Literal m : (*this)[v].sing) stack.push_back(m.var());
    for (const auto& d : (*this)[v].dual) stack.push_back(d.var);
  }
  for (Variable v = 1; v <= num_vars(); ++v)
    if (!seen[static_cast<std::size_t>(v)]) return "link cycle through " + std::to_string(v);
  return {};
}

namespace {

int fix_impl(const GeneralizedAssignment& s, Variable x, bool sing_consumed, bool dual_consumed) {
  const auto& n = s[x];
  if (!sing_consumed && !n.sing.empty()) {
    int best = fix_impl(s, x, true, dual_consumed);
    for (Literal m : n.sing) best = std::max(best, fix_impl(s, m.var(), false, false));
    return best;
  }
  if (!dual_consumed && !n.dual.empty()) {
    int total = fix_impl(s, x, true, true);
    for (const auto& d : n.dual) total += fix_impl(s, d.var, false, false);
    return total;
  }
  return 1;
}

}  // namespace

int fix_count(const GeneralizedAssignment& s, Variable x) { return fix_impl(s, x, false, false); }

int di_count(const GeneralizedAssignment& s, Variable x) { return di_count(s, x, s.value(x)); }

int di_count(const GeneralizedAssignment& s, Variable x, bool value) {
  const auto& n = s[x];
  bool real = value;
  if (!n.sing.empty()) {
    const Literal rep_lit(x, *n.sat);
    if (rep_lit.holds(value)) return fix_count(s, x);
    real = !rep_lit.positive();  // every group literal is false
  }
  int k = 0;
  for (const auto& d : n.dual) k += di_count(s, d.var, real != d.negated);
  for (Literal m : n.sing) k += di_count(s, m.var(), !m.positive());
  return k;
}

namespace {

// Pairwise-distance DP over the link forest. best(v, xa, xb) is the largest
// number of differing variables below and including v over pairs of
// represented assignments where v's formula-level value is xa in the first
// and xb in the second.
//
// A per-root accounting that picks the two differing satisfactors only among
// sing(a1) never lets the representative itself differ, and undercounts.
// Counterexample {(x∨a),(a∨b∨c)}: after folding b,c into a and substituting
// x:=ā the true maximum is 3. That accounting yields 2, or
// 4 if di_count also charges fix_count(a) for the representative.
class PairDp {
 public:
  explicit PairDp(const GeneralizedAssignment& s)
      : s_(s), memo_(static_cast<std::size_t>(s.num_vars()) + 1, {-1, -1, -1, -1}) {}

  int root(Variable v) {
    if (s_.is_assigned(v)) {
      const bool x = s_.value(v);
      return best(v, x, x);
    }
    int m = 0;
    for (int xa = 0; xa < 2; ++xa)
      for (int xb = 0; xb < 2; ++xb) m = std::max(m, best(v, xa != 0, xb != 0));
    return m;
  }

 private:
  int best(Variable v, bool xa, bool xb) {
    auto& slot = memo_[static_cast<std::size_t>(v)][(xa ? 2 : 0) + (xb ? 1 : 0)];
    if (slot < 0) slot = compute(v, xa, xb);
    return slot;
  }

  int children(Variable v, bool real_a, bool real_b) {
    int total = 0;
    for (const auto& d : s_[v].dual) total += best(d.var, real_a != d.negated, real_b != d.negated);
    return total;
  }

  // Member literal m is true (ta) / (tb) in the two assignments.
  int member_cost(Literal m, bool ta, bool tb) {
    const bool va = ta == m.positive();
    const bool vb = tb == m.positive();
    return (va != vb ? 1 : 0) + children(m.var(), va, vb);
  }

  int compute(Variable v, bool xa, bool xb) {
    const auto& n = s_[v];
    if (n.sing.empty()) return (xa != xb ? 1 : 0) + children(v, xa, xb);

    const Literal rep_lit(v, n.sat.value());
    std::vector<Literal> group{rep_lit};
    group.insert(group.end(), n.sing.begin(), n.sing.end());
    const bool sa = rep_lit.holds(xa), sb = rep_lit.holds(xb);

    int base = 0;
    std::vector<int> gain_diff, gain_same;  // relative to "member false in both"
    for (Literal m : group) {
      const int f = member_cost(m, false, false);
      base += f;
      gain_diff.push_back(member_cost(m, true, false) - f);
      gain_same.push_back(member_cost(m, true, true) - f);
    }
    if (!sa && !sb) return base;
    if (sa != sb) return base + *std::max_element(gain_diff.begin(), gain_diff.end());

    // Both assignments pick a satisfactor: the same member, or two distinct ones.
    int extra = *std::max_element(gain_same.begin(), gain_same.end());
    for (std::size_t i = 0; i < group.size(); ++i)
      for (std::size_t j = i + 1; j < group.size(); ++j) extra = std::max(extra, gain_diff[i] + gain_diff[j]);
    return base + extra;
  }

  const GeneralizedAssignment& s_;
  std::vector<std::array<int, 4>> memo_;
};

}  // namespace

int gen_h(const GeneralizedAssignment& s) {
  const auto roots = s.roots();
  return gen_h(s, roots);
}

int gen_h(const GeneralizedAssignment& s, std::span<const Variable> roots) {
  assert(s.well_formed());
  PairDp dp(s);
  int k = 0;
  for (Variable r : roots)
    if (s[r].status != Status::kEliminated) k += dp.root(r);
  return k;
}

}  // namespace xham
