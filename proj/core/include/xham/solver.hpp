#pragma once

#include <cstdint>
#include <optional>

#include "xham/formula.hpp"

namespace xham {

struct SolverStats {
  std::uint64_t nodes = 0;
};

/// Finds an x-model of F, total over Var(F), or nullopt if none exists.
///
/// Branches on which literal of the first longest clause is the satisfactor.
/// Variables left unconstrained by propagation are set true. The result is a
/// deterministic function of F.
std::optional<Assignment> find_xmodel(const Formula& f, SolverStats* stats = nullptr);

}  // namespace xham
