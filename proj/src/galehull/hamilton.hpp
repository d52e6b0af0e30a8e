#pragma once

#include <optional>
#include <vector>

#include "galehull/polytope.hpp"

namespace galehull {

constexpr int kMaxHamiltonVertices = 30;

// Exhaustive backtracking for a Hamiltonian cycle of the 1-skeleton, starting
// at vertex 0. Returns the cycle as a vertex sequence (closing edge implied).
std::optional<std::vector<int>> hamiltonian_cycle(const PlanarPolytope& p);

}  // namespace galehull
