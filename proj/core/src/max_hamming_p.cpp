#include "xham/max_hamming_p.hpp"

#include <numeric>
#include <optional>
#include <stdexcept>

#include "xham/solver.hpp"

namespace xham {

namespace {

std::vector<bool> membership(const Formula& f, std::span<const Variable> x) {
  std::vector<bool> in(static_cast<std::size_t>(f.num_vars) + 1, false);
  for (Variable v : x) in.at(static_cast<std::size_t>(v)) = true;
  return in;
}

bool allowed(const Formula& f, const std::vector<bool>& in) {
  for (const auto& c : f.clauses) {
    int k = 0;
    for (Literal l : c) k += in[static_cast<std::size_t>(l.var())] ? 1 : 0;
    if (k != 0 && k != 2) return false;
  }
  return true;
}

Formula flipped_union_unchecked(const Formula& f, const std::vector<bool>& in) {
  Formula out = f;
  for (const auto& c : f.clauses) {
    bool touched = false;
    Clause flipped = c;
    for (auto& l : flipped)
      if (in[static_cast<std::size_t>(l.var())]) {
        l = ~l;
        touched = true;
      }
    if (touched) out.clauses.push_back(std::move(flipped));
  }
  return out;
}

// Visits every k-subset of `pool` in lexicographic order until `visit` returns true.
template <typename Visit>
bool for_each_combination(const std::vector<Variable>& pool, std::size_t k, Visit&& visit) {
  const auto n = pool.size();
  if (k > n) return false;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  VariableSet subset(k);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) subset[i] = pool[idx[i]];
    if (visit(subset)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

bool allowed_subset_check(const Formula& f, std::span<const Variable> x) {
  return allowed(f, membership(f, x));
}

Formula flipped_union(const Formula& f, std::span<const Variable> x) {
  const auto in = membership(f, x);
  if (!allowed(f, in)) throw std::invalid_argument("flipped_union: subset is not allowed");
  return flipped_union_unchecked(f, in);
}

HammingResult max_hamming_p(const Formula& f, PStats* stats, PSearchOrder order) {
  PStats local;
  PStats& st = stats ? *stats : local;
  const auto vars = f.variables();

  HammingResult ans = HammingResult::unsat();
  auto try_subset = [&](const VariableSet& x) {
    ++st.subsets_tested;
    const auto in = membership(f, x);
    if (!allowed(f, in)) return false;
    ++st.solver_calls;
    auto model = find_xmodel(flipped_union_unchecked(f, in));
    if (!model) return false;
    Assignment other = *model;
    for (Variable v : x) other.set(v, !other.value(v));
    ans = HammingResult::distance(static_cast<int>(x.size()),
                                  HammingResult::Witnesses{std::move(*model), std::move(other)});
    return true;
  };

  if (order == PSearchOrder::kDescendingEarlyExit) {
    for (std::size_t k = vars.size() + 1; k-- > 0;)
      if (for_each_combination(vars, k, try_subset)) return ans;
    return ans;
  }
  for (std::size_t k = 0; k <= vars.size(); ++k)
    for_each_combination(vars, k, [&](const VariableSet& x) {
      try_subset(x);
      return false;
    });
  return ans;
}

}  // namespace xham
