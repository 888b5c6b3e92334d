#include "xham/propagation.hpp"

#include <algorithm>

namespace xham {

namespace {

// Forces literal l to `truth`; false on conflict with an existing value.
bool force(Assignment& values, Literal l, bool truth) {
  const bool want = truth == l.positive();
  if (auto cur = values.get(l.var())) return *cur == want;
  values.set(l.var(), want);
  return true;
}

bool force_all_false(Assignment& values, const Clause& lits) {
  return std::all_of(lits.begin(), lits.end(), [&](Literal l) { return force(values, l, false); });
}

enum class Step { kKeep, kRemove, kRevisit, kConflict };

Step simplify_clause(Clause& c, Assignment& values) {
  // R1 / R2: split into true count and unassigned remainder.
  int trues = 0;
  Clause rest;
  rest.reserve(c.size());
  for (Literal l : c) {
    if (auto t = values.eval(l)) {
      if (*t) ++trues;
    } else {
      rest.push_back(l);
    }
  }
  if (trues == 0 && rest.empty()) return Step::kConflict;  // R3
  if (trues >= 2) return Step::kConflict;
  if (trues == 1) return force_all_false(values, rest) ? Step::kRemove : Step::kConflict;
  c = std::move(rest);

  // R5: the first complementary pair contributes exactly one true literal.
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto j = std::find(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end(), ~c[i]);
    if (j == c.end()) continue;
    Clause others;
    for (std::size_t k = 0; k < c.size(); ++k)
      if (k != i && c.begin() + static_cast<std::ptrdiff_t>(k) != j) others.push_back(c[k]);
    return force_all_false(values, others) ? Step::kRemove : Step::kConflict;
  }

  // R6
  for (std::size_t i = 0; i < c.size(); ++i)
    if (std::find(c.begin() + static_cast<std::ptrdiff_t>(i) + 1, c.end(), c[i]) != c.end())
      return force(values, c[i], false) ? Step::kRevisit : Step::kConflict;

  // R4
  if (c.size() == 1) return force(values, c[0], true) ? Step::kRemove : Step::kConflict;
  return Step::kKeep;
}

PropagationResult finish(const Formula& input, std::vector<Clause> clauses, Assignment values,
                         bool ok, std::vector<std::pair<Literal, Literal>> equivalences) {
  PropagationResult r;
  r.equivalences = std::move(equivalences);
  if (!ok) {
    r.unsat = true;
    r.formula = Formula::unsat(input.num_vars);
    r.forced = std::move(values);
    return r;
  }
  r.formula.num_vars = input.num_vars;
  r.formula.clauses = std::move(clauses);
  r.forced = std::move(values);

  std::vector<bool> remaining(static_cast<std::size_t>(input.num_vars) + 1, false);
  for (Variable v : r.formula.variables()) remaining[static_cast<std::size_t>(v)] = true;
  std::vector<bool> linked(remaining.size(), false);
  for (auto& [a, b] : r.equivalences) linked[static_cast<std::size_t>(a.var())] = true;
  for (Variable v : input.variables())
    if (!remaining[static_cast<std::size_t>(v)] && !r.forced.assigned(v) &&
        !linked[static_cast<std::size_t>(v)])
      r.free.push_back(v);
  return r;
}

}  // namespace

bool propagate(std::vector<Clause>& clauses, Assignment& values) {
  bool changed = true;
  while (changed) {
    changed = false;
    std::size_t i = 0;
    while (i < clauses.size()) {
      const auto before = clauses[i].size();
      switch (simplify_clause(clauses[i], values)) {
        case Step::kConflict:
          return false;
        case Step::kRemove:
          clauses.erase(clauses.begin() + static_cast<std::ptrdiff_t>(i));
          changed = true;
          break;
        case Step::kRevisit:
          changed = true;
          break;
        case Step::kKeep:
          if (clauses[i].size() != before) changed = true;
          ++i;
          break;
      }
    }
  }
  return true;
}

PropagationResult normalize(const Formula& f) {
  auto clauses = f.clauses;
  Assignment values(f.num_vars);
  const bool ok = propagate(clauses, values);
  return finish(f, std::move(clauses), std::move(values), ok, {});
}

PropagationResult assign(const Formula& f, Variable v, bool value) {
  if (v < 1 || v > f.num_vars) throw std::invalid_argument("assign: variable out of range");
  auto clauses = f.clauses;
  Assignment values(f.num_vars);
  values.set(v, value);
  const bool ok = propagate(clauses, values);
  return finish(f, std::move(clauses), std::move(values), ok, {});
}

PropagationResult assign_literal(const Formula& f, Literal l, bool truth) {
  return assign(f, l.var(), truth == l.positive());
}

PropagationResult substitute_dual(const Formula& f, Literal a, Literal b) {
  if (a.var() == b.var())
    throw std::invalid_argument("substitute_dual: literals share variable " +
                                std::to_string(a.var()));
  auto clauses = f.clauses;
  for (auto& c : clauses)
    for (auto& l : c) {
      if (l == a)
        l = ~b;
      else if (l == ~a)
        l = b;
    }
  Assignment values(f.num_vars);
  const bool ok = propagate(clauses, values);
  return finish(f, std::move(clauses), std::move(values), ok, {{a, ~b}});
}

}  // namespace xham
