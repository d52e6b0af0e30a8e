#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "galehull/face_lattice.hpp"
#include "galehull/polytope.hpp"
#include "galehull/rational.hpp"

namespace galehull {

// Largest n + 2 accepted by the subset enumeration.
constexpr int kMaxHullVertices = 24;

// One 0/1 incidence vector per face of P (face input order); these are the
// vertices of the hull.
struct IncidenceSystem {
  std::vector<RationalPoint> vectors;
  FaceColoring coloring;
  int n = 0;

  int hull_vertex_count() const { return static_cast<int>(vectors.size()); }
  // Hull vertices whose face sits in the given sorted slot.
  VertexSet slot_set(int slot) const;
};

IncidenceSystem incidence_system(const PlanarPolytope& p, const FaceColoring& c);

// Affine dimension of the incidence vectors; throws TheoremViolation unless it
// is n - 1 for equal class sizes and n otherwise.
int hull_dimension(const IncidenceSystem& s);

struct GalePoint {
  int face = 0;
  int color = 0;
  RationalPoint value;      // row of the null-space basis matrix
  RationalPoint direction;  // primitive integer direction of `value`
};

struct GaleDiagram {
  int ambient_dim = 0;  // n + 2 - d - 1
  std::vector<GalePoint> points;
  // Null-space basis of the homogenized matrix; points[j].value[i] = basis[i][j].
  std::vector<RationalPoint> basis;

  std::vector<RationalPoint> values() const;
};

// Canonical Gale transform of the incidence vectors.
GaleDiagram gale_transform(const IncidenceSystem& s);

enum class HullType { I, II, III, IV };
std::string to_string(HullType t);

struct PredictedClass {
  int slot = 0;           // sorted slot 0, 1, 2
  std::string position;   // "+1", "-1", "0" (1-dim) or "ray" (type IV)
  int multiplicity = 0;
};

struct TypeReport {
  HullType type = HullType::I;
  std::array<int, 3> m{};  // sorted class sizes
  int n = 0;
  int dim = 0;
  std::optional<Rational> k;  // type I only: (m3 - m1) / (m2 - m1)
  std::vector<PredictedClass> predicted;
  std::string structure;
};

HullType type_from_sizes(const std::array<int, 3>& m);

// Classifies by the size pattern and checks the computed diagram against the
// predicted shape; throws DiagramMismatch on any disagreement.
TypeReport classify(const IncidenceSystem& s, const GaleDiagram& g);

// True iff 0 is a convex combination of `points` with all weights strictly
// positive. Throws DimensionMismatch for mixed dimensions.
bool relint_contains_zero(std::span<const RationalPoint> points);

// Closed-form face test for a vertex subset J (J != all vertices) given the
// slot membership of the hull vertices.
bool closed_form_is_face(HullType type, const std::array<VertexSet, 3>& slots, VertexSet j);

// All faces via the coface criterion, cross-checked against the closed form
// (CriterionMismatch). Dimensions from the incidence vectors.
FaceLattice enumerate_faces(const IncidenceSystem& s, const GaleDiagram& g, const TypeReport& t);

// Simpliciality of the lattice. Types I and IV must be simplicial, II and III
// must not be; a disagreement throws TheoremViolation.
bool simpliciality_check(const FaceLattice& l, const TypeReport& t);

}  // namespace galehull
