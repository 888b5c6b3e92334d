#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace xham {

/// Branch decrements r_1..r_k of a recurrence T(n) <= sum T(n - r_i).
struct BranchVector {
  std::vector<int> decrements;
};

/// Largest real root of 1 - sum x^(-r_i), by bisection on (1, k+1] to an
/// absolute width below 1e-12. A single branch has root 1. Throws
/// std::invalid_argument on an empty vector or a decrement below 1.
double tau_root(std::span<const int> decrements);
inline double tau_root(const BranchVector& rs) { return tau_root(rs.decrements); }

/// 1 - sum x^(-r_i).
double tau_polynomial(std::span<const int> decrements, double x);

/// Parses whitespace-separated tokens `r` or `r^k`: "5^2 3^3" -> (5,5,3,3,3).
/// Throws std::invalid_argument on zero/negative values or malformed tokens.
BranchVector parse_branch_spec(std::string_view text);

/// N^(1/l), the per-variable base of counts like (C(l,2)+1)^(n/l).
double root_power(double n, int l);

}  // namespace xham
