#pragma once

#include <span>
#include <string>
#include <vector>

#include "galehull/face_lattice.hpp"
#include "galehull/gale.hpp"
#include "galehull/linalg.hpp"

namespace galehull {

constexpr int kMaxOraclePoints = 26;

struct OracleFacet {
  VertexSet points = 0;          // input points on the supporting hyperplane
  linalg::Hyperplane hyperplane; // in the projected coordinates, oriented so
                                 // the rest of the set satisfies normal.x < offset
};

// Facets of conv(points) by exhaustive d-subset hyperplane spanning, after an
// injective coordinate projection onto the affine hull.
struct OracleHull {
  int dim = 0;
  std::vector<std::size_t> coordinates;  // kept coordinate indices
  std::vector<RationalPoint> projected;
  std::vector<OracleFacet> facets;
};

OracleHull oracle_hull(std::span<const RationalPoint> points);

// Face lattice of conv(points) indexed by input position.
FaceLattice oracle_lattice(std::span<const RationalPoint> points);

// Facets of conv(others) whose hyperplane strictly separates `point` from it.
std::vector<VertexSet> beyond_facet_sets(const RationalPoint& point, std::span<const RationalPoint> others);
int beyond_facets(const RationalPoint& point, std::span<const RationalPoint> others);

struct PyramidCheck {
  std::vector<int> apex_vertices;  // hull vertices in the apex slot
  bool apex_gale_points_zero = false;
  bool apex_signature = false;     // each apex misses exactly one facet
  std::string detail;
  bool ok() const { return apex_gale_points_zero && apex_signature; }
};

// Types II and III only (BadParameters otherwise); throws StructureMismatch
// when either check fails.
PyramidCheck verify_pyramid_structure(const IncidenceSystem& s, const TypeReport& t);

}  // namespace galehull
