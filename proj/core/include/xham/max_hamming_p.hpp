#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "xham/formula.hpp"
#include "xham/hamming_result.hpp"

namespace xham {

/// A subset of Var(F), ascending.
using VariableSet = std::vector<Variable>;

/// True iff every clause holds 0 or 2 literals over variables of x.
bool allowed_subset_check(const Formula& f, std::span<const Variable> x);

/// F ∪ C′: C′ copies each clause that touches x, with the literals over x
/// flipped. Throws std::invalid_argument unless x is allowed.
Formula flipped_union(const Formula& f, std::span<const Variable> x);

struct PStats {
  std::uint64_t subsets_tested = 0;
  std::uint64_t solver_calls = 0;  // one per allowed subset examined
};

enum class PSearchOrder {
  kDescendingEarlyExit,  // sizes |Var(F)|..0, stop at the first success
  kAscendingExhaustive,  // sizes 0..|Var(F)|, every subset, keep the last success
};

/// Maximum Hamming distance via subset enumeration and one XSAT call per
/// allowed subset. Witnesses are a model M of F ∪ C′ and M with x flipped.
HammingResult max_hamming_p(const Formula& f, PStats* stats = nullptr,
                            PSearchOrder order = PSearchOrder::kDescendingEarlyExit);

}  // namespace xham
