#include "xham/oracle.hpp"

#include <string>
#include <utility>

namespace xham {

namespace {

// Clauses re-indexed onto positions in Var(F) for the bit-mask loops.
struct Indexed {
  std::vector<Variable> vars;
  std::vector<std::vector<std::pair<int, bool>>> clauses;  // (position, positive)
};

Indexed index_formula(const Formula& f) {
  Indexed ix;
  ix.vars = f.variables();
  std::vector<int> pos(static_cast<std::size_t>(f.num_vars) + 1, -1);
  for (std::size_t i = 0; i < ix.vars.size(); ++i) pos[static_cast<std::size_t>(ix.vars[i])] = static_cast<int>(i);
  for (const auto& c : f.clauses) {
    auto& out = ix.clauses.emplace_back();
    for (Literal l : c) out.emplace_back(pos[static_cast<std::size_t>(l.var())], l.positive());
  }
  return ix;
}

void check_cap(std::size_t k, int cap, const char* what) {
  if (k > static_cast<std::size_t>(cap))
    throw OracleCapExceeded(std::string(what) + ": " + std::to_string(k) +
                            " variables exceeds cap " + std::to_string(cap));
}

}  // namespace

std::vector<Assignment> enumerate_xmodels(const Formula& f, int cap) {
  const auto ix = index_formula(f);
  const auto k = ix.vars.size();
  check_cap(k, cap, "enumerate_xmodels");

  std::vector<Assignment> models;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    // Position 0 is the most significant bit, so counting up is lexicographic.
    auto bit = [&](int p) { return ((mask >> (k - 1 - static_cast<std::size_t>(p))) & 1U) != 0; };
    bool ok = true;
    for (const auto& c : ix.clauses) {
      int t = 0;
      for (auto [p, positive] : c) t += bit(p) == positive ? 1 : 0;
      if (t != 1) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Assignment a(f.num_vars);
    for (std::size_t i = 0; i < k; ++i) a.set(ix.vars[i], bit(static_cast<int>(i)));
    models.push_back(std::move(a));
  }
  return models;
}

HammingResult max_hamming_brute(const Formula& f, int cap) {
  const auto models = enumerate_xmodels(f, cap);
  if (models.empty()) return HammingResult::unsat();
  std::size_t bi = 0, bj = 0;
  int best = 0;
  for (std::size_t i = 0; i < models.size(); ++i)
    for (std::size_t j = i + 1; j < models.size(); ++j) {
      const int d = hamming_distance(models[i], models[j]);
      if (d > best) {
        best = d;
        bi = i;
        bj = j;
      }
    }
  return HammingResult::distance(best, HammingResult::Witnesses{models[bi], models[bj]});
}

bool check_zero_two(const Formula& f, const Assignment& m1, const Assignment& m2) {
  for (const auto& c : f.clauses) {
    int in_x = 0;
    for (Literal l : c) {
      const auto a = m1.get(l.var()), b = m2.get(l.var());
      if (!a || !b) throw std::invalid_argument("check_zero_two: assignments must be total over Var(F)");
      if (*a != *b) ++in_x;
    }
    if (in_x != 0 && in_x != 2) return false;
  }
  return true;
}

std::uint64_t count_allowed_subsets_brute(const Formula& f, int cap) {
  const auto ix = index_formula(f);
  const auto k = ix.vars.size();
  check_cap(k, cap, "count_allowed_subsets_brute");
  std::uint64_t count = 0;
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool ok = true;
    for (const auto& c : ix.clauses) {
      int in_s = 0;
      for (auto [p, positive] : c) in_s += ((mask >> p) & 1U) != 0 ? 1 : 0;
      if (in_s != 0 && in_s != 2) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

namespace {

using Partial = std::vector<std::pair<Variable, bool>>;

std::vector<Partial> product(const std::vector<Partial>& a, const std::vector<Partial>& b) {
  std::vector<Partial> out;
  out.reserve(a.size() * b.size());
  for (const auto& x : a)
    for (const auto& y : b) {
      Partial z = x;
      z.insert(z.end(), y.begin(), y.end());
      out.push_back(std::move(z));
    }
  return out;
}

class Expander {
 public:
  explicit Expander(const GeneralizedAssignment& s) : s_(s) {}

  // x is v's formula-level value.
  std::vector<Partial> node(Variable v, bool x) const {
    const auto& n = s_[v];
    if (n.sing.empty()) return with_children(v, x);

    const Literal rep_lit(v, n.sat.value());
    std::vector<Literal> group{rep_lit};
    group.insert(group.end(), n.sing.begin(), n.sing.end());
    if (!rep_lit.holds(x)) return members(group, group.size());

    std::vector<Partial> out;
    for (std::size_t chosen = 0; chosen < group.size(); ++chosen) {
      auto part = members(group, chosen);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }

 private:
  std::vector<Partial> with_children(Variable v, bool real) const {
    std::vector<Partial> acc{{{v, real}}};
    for (const auto& d : s_[v].dual) acc = product(acc, node(d.var, real != d.negated));
    return acc;
  }

  // Member `chosen` is the true literal; all others false. chosen == size: none.
  std::vector<Partial> members(const std::vector<Literal>& group, std::size_t chosen) const {
    std::vector<Partial> acc{{}};
    for (std::size_t i = 0; i < group.size(); ++i) {
      const bool truth = i == chosen;
      acc = product(acc, with_children(group[i].var(), truth == group[i].positive()));
    }
    return acc;
  }

  const GeneralizedAssignment& s_;
};

}  // namespace

std::vector<Assignment> expand_state(const GeneralizedAssignment& s) {
  const auto roots = s.roots();
  return expand_state(s, roots);
}

std::vector<Assignment> expand_state(const GeneralizedAssignment& s, std::span<const Variable> roots) {
  if (auto err = s.well_formedness_error(); !err.empty())
    throw std::invalid_argument("expand_state: " + err);
  Expander ex(s);
  std::vector<Partial> acc{{}};
  for (Variable r : roots) {
    if (s[r].status == GeneralizedAssignment::Status::kEliminated) continue;
    std::vector<Partial> options;
    if (s.is_assigned(r)) {
      options = ex.node(r, s.value(r));
    } else {
      options = ex.node(r, false);
      auto t = ex.node(r, true);
      options.insert(options.end(), t.begin(), t.end());
    }
    acc = product(acc, options);
  }
  std::vector<Assignment> out;
  out.reserve(acc.size());
  for (const auto& p : acc) {
    Assignment a(s.num_vars());
    for (auto [v, b] : p)
      if (s[v].tracked) a.set(v, b);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace xham
