#pragma once

#include <cstdint>
#include <functional>
#include <span>

#include "xham/formula.hpp"
#include "xham/generalized_assignment.hpp"
#include "xham/hamming_result.hpp"

namespace xham {

struct NodeCounter {
  std::uint64_t nodes = 0;   // recursive calls
  std::uint64_t leaves = 0;  // empty-formula leaves evaluated by gen_h
};

struct SimplifiedState {
  Formula formula;
  GeneralizedAssignment state;
  bool unsat = false;
};

/// Propagates, then folds extra singletons of a clause into one group and
/// substitutes away binary clauses, until neither applies. The kept side of a
/// binary clause is a non-singleton.
SimplifiedState simplify_state(Formula f, GeneralizedAssignment s);

/// Optional hooks into the recursion, for tests and tracing.
struct QTrace {
  /// Called at each empty-formula leaf with the roots whose trees it accounts for.
  std::function<void(const GeneralizedAssignment&, std::span<const Variable>)> on_leaf;
  /// Called when a formula splits into this many components.
  std::function<void(std::size_t)> on_split;
};

/// Exact maximum Hamming distance over x-models of F by branching on the
/// singleton/dual structure. Distance only, no witnesses.
HammingResult max_hamming_q(const Formula& f, NodeCounter* counter = nullptr,
                            const QTrace& trace = {});

}  // namespace xham
