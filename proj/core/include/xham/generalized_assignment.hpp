#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "xham/formula.hpp"

namespace xham {

/// Partial assignment plus the link forest recording variables removed by
/// singleton folding and binary-clause substitution. One of these summarizes a
/// family of concrete x-models at a leaf of the branching search.
///
/// Semantics, per variable v:
///  - A group representative r (non-empty `sing`) stands in the formula for
///    the whole group {r} ∪ sing(r). Its literal there is Literal(r, *sat).
///    Its status value is the value of that stand-in. The group literal is
///    true when exactly one member literal is true, and false when all are
///    false.
///  - Members of `sing` are stored as the literal they had in the shared
///    clause. Groups are flat: a member never has its own `sing`.
///  - A dual child c of v satisfies x(c) = real(v) XOR negated. Here x(c) is
///    c's stand-in value if c is a representative, else its value.
///  - Roots are tracked variables that are not eliminated. An unassigned root
///    vanished from the formula unconstrained and may take either value.
class GeneralizedAssignment {
 public:
  enum class Status : std::uint8_t { kUnassigned, kTrue, kFalse, kEliminated };

  struct DualLink {
    Variable var;
    bool negated;
    friend bool operator==(const DualLink&, const DualLink&) = default;
  };

  struct Node {
    Status status = Status::kUnassigned;
    bool tracked = false;
    std::vector<Literal> sing;
    std::vector<DualLink> dual;
    std::optional<bool> sat;
  };

  GeneralizedAssignment() = default;
  /// Fresh state for F: Var(F) tracked and unassigned, all sets empty.
  explicit GeneralizedAssignment(const Formula& f);
  /// Fresh state with nothing tracked yet.
  explicit GeneralizedAssignment(std::int32_t num_vars);

  std::int32_t num_vars() const { return static_cast<std::int32_t>(nodes_.size()) - 1; }
  Node& operator[](Variable v) { return nodes_.at(static_cast<std::size_t>(v)); }
  const Node& operator[](Variable v) const { return nodes_.at(static_cast<std::size_t>(v)); }

  void track(Variable v) { (*this)[v].tracked = true; }
  bool is_representative(Variable v) const { return !(*this)[v].sing.empty(); }
  bool is_assigned(Variable v) const;
  bool value(Variable v) const;  // throws std::logic_error unless assigned
  void assign(Variable v, bool value);

  /// Removes `member` (with literal `member_lit` in the clause shared with
  /// `rep_lit`) into rep's group, absorbing the member's own group.
  void fold_singleton(Literal rep_lit, Literal member_lit);

  /// Records that `child` was substituted away with x(child) = real(parent) XOR negated.
  void link_dual(Variable parent, Variable child, bool negated);

  /// Tracked, non-eliminated variables, ascending.
  std::vector<Variable> roots() const;

  /// Empty if the forest is well formed, else a description of the first
  /// violation: an eliminated variable in zero or several link sets, a live
  /// variable inside a set, a nested group, a representative without a sat
  /// marker, or an unreachable (cyclic) link.
  std::string well_formedness_error() const;
  bool well_formed() const { return well_formedness_error().empty(); }

 private:
  std::vector<Node> nodes_;
};

/// Maximum number of variables linked under x that can differ between a model
/// where x's group is the satisfactor and one where it is not.
/// Groups take the max over members; dual sets sum.
int fix_count(const GeneralizedAssignment& s, Variable x);

/// Differences available under x while x's role is fixed.
/// The first overload reads x's value from s; the second supplies x's value.
int di_count(const GeneralizedAssignment& s, Variable x);
int di_count(const GeneralizedAssignment& s, Variable x, bool value);

/// Exact maximum pairwise Hamming distance over all assignments represented by
/// the trees rooted at `roots` (all roots by default).
int gen_h(const GeneralizedAssignment& s);
int gen_h(const GeneralizedAssignment& s, std::span<const Variable> roots);

}  // namespace xham
