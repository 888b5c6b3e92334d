#include "xham/solver.hpp"

#include <algorithm>

#include "xham/propagation.hpp"

namespace xham {

namespace {

bool search(std::vector<Clause>& clauses, Assignment& values, SolverStats* stats) {
  if (stats) ++stats->nodes;
  if (!propagate(clauses, values)) return false;
  if (clauses.empty()) return true;

  const auto longest = std::max_element(clauses.begin(), clauses.end(),
                                        [](const Clause& a, const Clause& b) { return a.size() < b.size(); });
  const Clause branch = *longest;
  for (Literal l : branch) {
    auto sub_clauses = clauses;
    auto sub_values = values;
    sub_values.set(l.var(), l.positive());
    if (search(sub_clauses, sub_values, stats)) {
      values = std::move(sub_values);
      return true;
    }
  }
  return false;
}

}  // namespace

std::optional<Assignment> find_xmodel(const Formula& f, SolverStats* stats) {
  auto clauses = f.clauses;
  Assignment values(f.num_vars);
  if (!search(clauses, values, stats)) return std::nullopt;

  Assignment model(f.num_vars);
  for (Variable v : f.variables()) model.set(v, values.get(v).value_or(true));
  return model;
}

}  // namespace xham
