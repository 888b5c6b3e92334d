#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "xham/formula.hpp"
#include "xham/generalized_assignment.hpp"
#include "xham/hamming_result.hpp"

namespace xham {

/// Thrown when an exhaustive routine is asked to exceed its variable cap.
class OracleCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kDefaultEnumerationCap = 24;
inline constexpr int kDefaultSubsetCap = 20;

/// Every x-model of F over Var(F), in lexicographic order (lowest variable most
/// significant, false before true).
std::vector<Assignment> enumerate_xmodels(const Formula& f, int cap = kDefaultEnumerationCap);

/// Maximum pairwise Hamming distance by comparing all model pairs. The witness
/// pair is the lexicographically first maximizing pair.
HammingResult max_hamming_brute(const Formula& f, int cap = kDefaultEnumerationCap);

/// Zero-or-two test: every clause holds 0 or 2 literals over the variables
/// on which m1 and m2 differ.
bool check_zero_two(const Formula& f, const Assignment& m1, const Assignment& m2);

/// Number of subsets S of Var(F), ∅ included, such that every clause holds
/// 0 or 2 literals over S.
std::uint64_t count_allowed_subsets_brute(const Formula& f, int cap = kDefaultSubsetCap);

/// Concrete assignments represented by the trees of `roots` (all roots by
/// default), over the tracked variables in those trees. Throws
/// std::invalid_argument on an ill-formed forest.
std::vector<Assignment> expand_state(const GeneralizedAssignment& s);
std::vector<Assignment> expand_state(const GeneralizedAssignment& s, std::span<const Variable> roots);

}  // namespace xham
