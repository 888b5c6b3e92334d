#pragma once

#include <utility>
#include <vector>

#include "xham/formula.hpp"

namespace xham {

/// Outcome of a substitution followed by exactly-one propagation.
///
/// The x-models of the input are exactly the assignments that
///  - agree with `forced`,
///  - satisfy every pair in `equivalences` (first literal ≡ second literal), and
///  - restrict to an x-model of `formula`.
/// Variables in `free` vanished from the formula unconstrained and may take
/// either value.
struct PropagationResult {
  Formula formula;
  Assignment forced;
  std::vector<std::pair<Literal, Literal>> equivalences;
  std::vector<Variable> free;
  bool unsat = false;
};

/// Runs the simplification rules to a fixpoint, in this order per clause:
///  R3  an empty clause is unsatisfiable
///  R1  a true literal removes the clause and forces the rest false
///      (two true literals: unsatisfiable)
///  R2  false literals are deleted
///  R5  a clause holding both a and ā removes the clause and forces the rest false
///  R6  a literal occurring twice is forced false
///  R4  a unit clause forces its literal true
PropagationResult normalize(const Formula& f);

/// F(v/value) with propagation.
PropagationResult assign(const Formula& f, Variable v, bool value);

/// F(l/truth): assigns var(l) so that l evaluates to `truth`, then propagates.
PropagationResult assign_literal(const Formula& f, Literal l, bool truth);

/// F(a/b̄): every a becomes b̄ and every ā becomes b, then propagates.
/// Records (a, b̄) in `equivalences`. Throws std::invalid_argument if a and b
/// share a variable.
PropagationResult substitute_dual(const Formula& f, Literal a, Literal b);

/// Core fixpoint loop shared with the solvers. Applies the rules above to
/// `clauses` in place, extending `values`. Returns false on conflict.
bool propagate(std::vector<Clause>& clauses, Assignment& values);

}  // namespace xham
