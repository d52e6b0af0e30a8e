#pragma once

#include <optional>
#include <vector>

#include "galehull/gale.hpp"
#include "galehull/polytope.hpp"

namespace galehull {

// Combinatorial equivalence of two hulls from the invariants of P alone:
// same number of faces, same type, same m2. The Gale-multiplicity criterion
// used in the proof is not evaluated separately; classify() already pins the
// diagram to the per-type shape, so the multiplicities are functions of
// (type, m) and this triple comparison decides them.
bool equivalent(const TypeReport& a, const FVector& pa, const TypeReport& b, const FVector& pb);

struct OracleEquivalence {
  bool equivalent = false;
  std::optional<std::vector<int>> bijection;  // hull vertex of a -> hull vertex of b
};

// Ground truth: lattice isomorphism of the two oracle lattices.
OracleEquivalence equivalent_oracle(const IncidenceSystem& a, const IncidenceSystem& b);

}  // namespace galehull
