#pragma once

#include <cstdint>
#include <cstdlib>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace xham {

/// Variables are dense indices 1..n. Index 0 is never a variable.
using Variable = std::int32_t;

/// A signed variable reference, stored DIMACS-style (k or -k).
class Literal {
 public:
  constexpr Literal() = default;
  constexpr Literal(Variable var, bool positive) : code_(positive ? var : -var) {}

  static constexpr Literal from_dimacs(std::int32_t code) {
    Literal l;
    l.code_ = code;
    return l;
  }

  constexpr Variable var() const { return code_ < 0 ? -code_ : code_; }
  constexpr bool positive() const { return code_ > 0; }
  constexpr std::int32_t dimacs() const { return code_; }
  constexpr Literal operator~() const { return from_dimacs(-code_); }

  /// Truth of this literal when its variable takes `value`.
  constexpr bool holds(bool value) const { return value == positive(); }

  friend constexpr bool operator==(Literal, Literal) = default;
  friend constexpr auto operator<=>(Literal, Literal) = default;

 private:
  std::int32_t code_ = 0;
};

using Clause = std::vector<Literal>;

/// A multiset of clauses over variables 1..num_vars.
struct Formula {
  std::int32_t num_vars = 0;
  std::vector<Clause> clauses;

  /// The unsatisfiable formula {()}.
  static Formula unsat(std::int32_t num_vars);

  bool is_unsat_marker() const { return clauses.size() == 1 && clauses.front().empty(); }
  bool empty() const { return clauses.empty(); }

  /// Var(F): the variables occurring in some clause, ascending.
  std::vector<Variable> variables() const;

  /// Number of clauses containing v (a clause mentioning v twice counts once).
  std::vector<int> degrees() const;

  friend bool operator==(const Formula&, const Formula&) = default;
};

/// Partial or total map from variables to truth values. Index 0 is unused.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::int32_t num_vars) : values_(static_cast<std::size_t>(num_vars) + 1) {}

  std::int32_t num_vars() const { return static_cast<std::int32_t>(values_.size()) - 1; }

  std::optional<bool> get(Variable v) const { return values_.at(static_cast<std::size_t>(v)); }
  bool value(Variable v) const { return values_.at(static_cast<std::size_t>(v)).value(); }
  bool assigned(Variable v) const { return values_.at(static_cast<std::size_t>(v)).has_value(); }
  void set(Variable v, bool b) { values_.at(static_cast<std::size_t>(v)) = b; }
  void clear(Variable v) { values_.at(static_cast<std::size_t>(v)).reset(); }

  /// Truth of l, if its variable is assigned.
  std::optional<bool> eval(Literal l) const {
    auto v = get(l.var());
    if (!v) return std::nullopt;
    return l.holds(*v);
  }

  /// Variables with a value, ascending.
  std::vector<Variable> assigned_variables() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend auto operator<=>(const Assignment&, const Assignment&) = default;

 private:
  std::vector<std::optional<bool>> values_;
};

/// Number of variables assigned in both a and b that disagree.
int hamming_distance(const Assignment& a, const Assignment& b);

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

/// Reads `p xsat <n> <m>` instances. Throws ParseError with the offending line.
Formula parse_formula(std::istream& in);
Formula parse_formula(std::string_view text);

/// Writes the instance format. If num_vars is 0 it is recomputed from the
/// largest variable index.
std::string serialize_formula(const Formula& f);

/// Splits F into the connected components of its formula graph. Components are
/// ordered by their first clause in F; clause order within a component is kept.
std::vector<Formula> connected_components(const Formula& f);

/// True iff every clause has exactly one true literal. Throws
/// std::invalid_argument if some variable of Var(F) is unassigned.
bool verify_xmodel(const Formula& f, const Assignment& a);

/// m clauses of `len` distinct variables drawn uniformly from 1..n, each
/// literal negated with probability 1/2. Deterministic in `seed`.
Formula random_formula(int n, int m, int len, std::uint64_t seed);

}  // namespace xham
