#include "xham/max_hamming_q.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

#include "xham/propagation.hpp"

namespace xham {

namespace {

struct Branch {
  Formula formula;
  GeneralizedAssignment state;
};

// Copies forced values into s. Returns a branch holding {()} on conflict.
Branch apply(PropagationResult r, GeneralizedAssignment s) {
  if (r.unsat) return {Formula::unsat(r.formula.num_vars), std::move(s)};
  for (Variable v : r.forced.assigned_variables())
    if (s[v].status != GeneralizedAssignment::Status::kEliminated) s.assign(v, r.forced.value(v));
  return {std::move(r.formula), std::move(s)};
}

// Imposes drop ≡ ¬keep, removing drop's variable into dual(keep).
Branch dual_branch(const Formula& f, GeneralizedAssignment s, Literal keep, Literal drop) {
  if (s.is_representative(keep.var())) std::swap(keep, drop);
  assert(!s.is_representative(keep.var()));
  s.link_dual(keep.var(), drop.var(), keep.positive() == drop.positive());
  return apply(substitute_dual(f, drop, keep), std::move(s));
}

Branch literal_branch(const Formula& f, GeneralizedAssignment s, Literal l, bool truth) {
  return apply(assign_literal(f, l, truth), std::move(s));
}

// Non-singleton of `lits` with the lowest variable index, if any.
std::optional<Literal> pick_non_singleton(const Formula& f, std::span<const Literal> lits) {
  const auto deg = f.degrees();
  std::optional<Literal> best;
  for (Literal l : lits)
    if (deg[static_cast<std::size_t>(l.var())] > 1 && (!best || l.var() < best->var())) best = l;
  return best;
}

class QSearch {
 public:
  QSearch(NodeCounter& counter, const QTrace& trace) : counter_(counter), trace_(trace) {}

  HammingResult run(Formula f, GeneralizedAssignment s, const std::vector<Variable>& roots) {
    ++counter_.nodes;
    auto simp = simplify_state(std::move(f), std::move(s));
    if (simp.unsat) return HammingResult::unsat();
    auto& formula = simp.formula;
    auto& state = simp.state;

    if (formula.empty()) {
      ++counter_.leaves;
      assert(state.well_formed());
      if (trace_.on_leaf) trace_.on_leaf(state, roots);
      return HammingResult::distance(gen_h(state, roots));
    }

    auto comps = connected_components(formula);
    if (comps.size() > 1) {
      if (trace_.on_split) trace_.on_split(comps.size());
      // Roots already off the formula are counted once here; each component
      // accounts for the trees hanging below its own variables.
      std::vector<bool> live(static_cast<std::size_t>(formula.num_vars) + 1, false);
      for (Variable v : formula.variables()) live[static_cast<std::size_t>(v)] = true;
      std::vector<Variable> resolved;
      for (Variable r : roots)
        if (state[r].status != GeneralizedAssignment::Status::kEliminated && !live[static_cast<std::size_t>(r)])
          resolved.push_back(r);
      auto total = HammingResult::distance(gen_h(state, resolved));
      for (auto& comp : comps) {
        const auto comp_roots = comp.variables();
        total = total + run(std::move(comp), state, comp_roots);
        if (total.is_unsat()) break;
      }
      return total;
    }

    return branch(formula, state, roots);
  }

 private:
  HammingResult branch(const Formula& f, const GeneralizedAssignment& s, const std::vector<Variable>& roots) {
    const auto w_it = std::max_element(f.clauses.begin(), f.clauses.end(),
                                       [](const Clause& a, const Clause& b) { return a.size() < b.size(); });
    const Clause w = *w_it;
    // Folding leaves at most one singleton per clause and binary clauses are
    // gone, so a longest clause has length >= 3 and a non-singleton.
    const auto a1 = pick_non_singleton(f, w);
    if (!a1) throw std::logic_error("max_hamming_q: longest clause has no non-singleton");

    auto run_branch = [&](Branch b) { return run(std::move(b.formula), std::move(b.state), roots); };

    const auto ans_true = run_branch(literal_branch(f, s, *a1, true));
    const auto ans_false =
        w.size() == 4 ? length_four_false(f, s, w, *a1, roots) : run_branch(literal_branch(f, s, *a1, false));
    if (ans_true.is_unsat() || ans_false.is_unsat()) return max_bot(ans_true, ans_false);

    // Model pairs that disagree on a1 disagree on exactly one more literal ai
    // of w, so both satisfy a1 ≡ ¬ai. The eliminated variable stays in the
    // link forest and is counted there, so no +1 is added.
    auto best = max_bot(ans_true, ans_false);
    for (Literal ai : w)
      if (ai != *a1) best = max_bot(best, run_branch(dual_branch(f, s, *a1, ai)));
    return best;
  }

  // The a1=false branch for |w| = 4: branch again on a second literal of the
  // remaining three-literal clause instead of recursing on F(a1/false) directly.
  HammingResult length_four_false(const Formula& f, const GeneralizedAssignment& s, const Clause& w,
                                  Literal a1, const std::vector<Variable>& roots) {
    auto b = literal_branch(f, s, a1, false);
    auto run_branch = [&](Branch br) { return run(std::move(br.formula), std::move(br.state), roots); };

    Clause rest;
    for (Literal l : w)
      if (l != a1) rest.push_back(l);
    const bool intact = !b.formula.is_unsat_marker() &&
                        std::none_of(rest.begin(), rest.end(), [&](Literal l) {
                          return b.state.is_assigned(l.var());
                        }) &&
                        std::none_of(rest.begin(), rest.end(), [&](Literal l) {
                          return b.state[l.var()].status == GeneralizedAssignment::Status::kEliminated;
                        });
    // Propagation touched the clause; fall back to the general branch.
    if (!intact) return run_branch(std::move(b));

    const Literal a2 = pick_non_singleton(b.formula, rest).value_or(rest.front());
    const auto ans1 = run_branch(literal_branch(b.formula, b.state, a2, true));
    const auto ans2 = run_branch(literal_branch(b.formula, b.state, a2, false));
    if (ans1.is_unsat() || ans2.is_unsat()) return max_bot(ans1, ans2);

    auto best = max_bot(ans1, ans2);
    for (Literal ai : rest)
      if (ai != a2) best = max_bot(best, run_branch(dual_branch(b.formula, b.state, a2, ai)));
    return best;
  }

  NodeCounter& counter_;
  const QTrace& trace_;
};

}  // namespace

SimplifiedState simplify_state(Formula f, GeneralizedAssignment s) {
  auto b = apply(normalize(f), std::move(s));
  if (b.formula.is_unsat_marker()) return {std::move(b.formula), std::move(b.state), true};

  while (true) {
    // Fold every extra singleton of a clause into the first one.
    const auto deg = b.formula.degrees();
    bool folded = false;
    for (auto& c : b.formula.clauses) {
      std::optional<Literal> rep;
      Clause kept;
      for (Literal l : c) {
        if (deg[static_cast<std::size_t>(l.var())] != 1) {
          kept.push_back(l);
        } else if (!rep) {
          rep = l;
          kept.push_back(l);
        } else {
          b.state.fold_singleton(*rep, l);
          folded = true;
        }
      }
      c = std::move(kept);
    }
    if (folded) {
      b = apply(normalize(b.formula), std::move(b.state));
      if (b.formula.is_unsat_marker()) return {std::move(b.formula), std::move(b.state), true};
      continue;
    }

    const auto bin = std::find_if(b.formula.clauses.begin(), b.formula.clauses.end(),
                                  [](const Clause& c) { return c.size() == 2; });
    if (bin == b.formula.clauses.end()) break;
    Literal drop = (*bin)[0], keep = (*bin)[1];
    if (deg[static_cast<std::size_t>(keep.var())] == 1) std::swap(drop, keep);
    assert(deg[static_cast<std::size_t>(keep.var())] > 1);
    b = dual_branch(b.formula, std::move(b.state), keep, drop);
    if (b.formula.is_unsat_marker()) return {std::move(b.formula), std::move(b.state), true};
  }
  return {std::move(b.formula), std::move(b.state), false};
}

HammingResult max_hamming_q(const Formula& f, NodeCounter* counter, const QTrace& trace) {
  NodeCounter local;
  QSearch search(counter ? *counter : local, trace);
  return search.run(f, GeneralizedAssignment(f), f.variables());
}

}  // namespace xham
