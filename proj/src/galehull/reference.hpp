#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galehull/face_lattice.hpp"

namespace galehull {

// A combinatorially constructed lattice with a role label per vertex
// ("cyclic-odd", "apex", "w", ...).
struct ReferenceLattice {
  FaceLattice lattice;
  std::vector<std::string> roles;
  std::string name;
};

// C(v, d) by Gale's evenness condition on vertices 0..v-1 (positions 1..v).
ReferenceLattice cyclic_polytope(int v, int d);

// True iff the d-subset `facet` of {0..v-1} satisfies the evenness condition.
bool gale_evenness(VertexSet facet, int v);

// The d-simplex on d + 1 vertices.
ReferenceLattice simplex(int d);

// apex_count-fold pyramid; apexes are appended after the base vertices.
ReferenceLattice pyramid(const ReferenceLattice& base, int apex_count);

// conv(Q, w) for a point w in aff(Q) that lies strictly beyond exactly the
// listed facets of Q and strictly beneath the others; w gets the next index.
ReferenceLattice beyond_extension(const ReferenceLattice& base, std::span<const VertexSet> visible_facets);

// T^n_k: n + 2 vertices, class A = {0..k}, class B = {k+1..n+1}; proper faces
// are the J containing neither class.
ReferenceLattice tkn_model(int n, int k);

// 3m vertices in three classes of m; proper faces miss a vertex of each class.
ReferenceLattice type4_model(int m);

// Vertex bijection a -> b mapping the face set of `a` onto that of `b`.
std::optional<std::vector<int>> lattice_isomorphic(const FaceLattice& a, const FaceLattice& b);

}  // namespace galehull
