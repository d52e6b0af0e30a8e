#include "galehull/oracle.hpp"

#include <algorithm>
#include <set>

#include "galehull/error.hpp"

namespace galehull {

namespace {

constexpr const char* kModule = "hull-oracle";

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, kModule, message); }

RationalPoint project(const RationalPoint& p, const std::vector<std::size_t>& coordinates) {
  RationalPoint out;
  out.reserve(coordinates.size());
  for (auto c : coordinates) out.push_back(p[c]);
  return out;
}

// Pivot columns of the difference matrix: projecting onto them is injective
// on the affine hull.
std::vector<std::size_t> hull_coordinates(std::span<const RationalPoint> points) {
  const std::size_t dim = points.front().size();
  linalg::RationalMatrix diff(points.size() - 1, dim);
  for (std::size_t i = 1; i < points.size(); ++i)
    for (std::size_t c = 0; c < dim; ++c) diff(i - 1, c) = points[i][c] - points[0][c];
  return linalg::reduced_row_echelon(diff).pivots;
}

// Calls visit(mask) for every size-k subset of {0..n-1}, in increasing order.
template <class Visit>
void for_each_subset(int n, int k, Visit&& visit) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  for (;;) {
    VertexSet mask = 0;
    for (int i : idx) mask |= VertexSet{1} << i;
    visit(mask);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

}  // namespace

OracleHull oracle_hull(std::span<const RationalPoint> points) {
  if (points.size() > static_cast<std::size_t>(kMaxOraclePoints))
    fail(ErrorCode::TooManyPoints, std::to_string(points.size()) + " points exceeds the oracle limit of " +
                                       std::to_string(kMaxOraclePoints));
  if (points.empty()) fail(ErrorCode::DegenerateInput, "no points");
  for (const auto& p : points)
    if (p.size() != points.front().size()) fail(ErrorCode::DegenerateInput, "points of mixed dimension");
  OracleHull hull;
  hull.dim = linalg::affine_dimension(points);
  if (hull.dim == 0) fail(ErrorCode::DegenerateInput, "all points coincide");
  hull.coordinates = hull_coordinates(points);
  for (const auto& p : points) hull.projected.push_back(project(p, hull.coordinates));

  const int count = static_cast<int>(points.size());
  std::set<std::pair<RationalPoint, Rational>> seen;
  std::vector<RationalPoint> subset;
  for_each_subset(count, hull.dim, [&](VertexSet mask) {
    subset.clear();
    for (int v : members(mask)) subset.push_back(hull.projected[static_cast<std::size_t>(v)]);
    auto plane = linalg::spanning_hyperplane(subset, hull.dim);
    if (!plane || !seen.emplace(plane->normal, plane->offset).second) return;
    VertexSet on = 0;
    int above = 0;
    int below = 0;
    for (int v = 0; v < count; ++v) {
      const int side = (linalg::dot(plane->normal, hull.projected[static_cast<std::size_t>(v)]) - plane->offset).sign();
      if (side == 0)
        on |= VertexSet{1} << v;
      else if (side > 0)
        ++above;
      else
        ++below;
    }
    if (above != 0 && below != 0) return;
    if (above > 0) {
      for (auto& x : plane->normal) x = -x;
      plane->offset = -plane->offset;
    }
    hull.facets.push_back({on, std::move(*plane)});
  });
  std::sort(hull.facets.begin(), hull.facets.end(),
            [](const OracleFacet& a, const OracleFacet& b) { return a.points < b.points; });
  return hull;
}

FaceLattice oracle_lattice(std::span<const RationalPoint> points) {
  const OracleHull hull = oracle_hull(points);
  std::vector<VertexSet> facets;
  for (const auto& f : hull.facets) facets.push_back(f.points);
  return lattice_from_facets(static_cast<int>(points.size()), facets, [&](VertexSet s) {
    std::vector<RationalPoint> pts;
    for (int v : members(s)) pts.push_back(hull.projected[static_cast<std::size_t>(v)]);
    return linalg::affine_dimension(pts);
  });
}

std::vector<VertexSet> beyond_facet_sets(const RationalPoint& point, std::span<const RationalPoint> others) {
  const OracleHull hull = oracle_hull(others);
  std::vector<RationalPoint> all(others.begin(), others.end());
  all.push_back(point);
  if (linalg::affine_dimension(all) != hull.dim)
    fail(ErrorCode::PointOutsideAffineHull, "point does not lie in the affine hull of the others");
  // The hyperplanes are oriented with the hull on the negative side; the
  // centroid witnesses the strict inside.
  RationalPoint centroid(static_cast<std::size_t>(hull.dim), Rational(0));
  for (const auto& q : hull.projected)
    for (std::size_t c = 0; c < centroid.size(); ++c) centroid[c] += q[c];
  for (auto& x : centroid) x /= Rational(static_cast<long>(hull.projected.size()));
  const RationalPoint p = project(point, hull.coordinates);
  std::vector<VertexSet> out;
  for (const auto& f : hull.facets) {
    if ((linalg::dot(f.hyperplane.normal, centroid) - f.hyperplane.offset).sign() >= 0)
      fail(ErrorCode::DegenerateInput, "centroid is not strictly inside facet " + format_set(f.points));
    if ((linalg::dot(f.hyperplane.normal, p) - f.hyperplane.offset).sign() > 0) out.push_back(f.points);
  }
  return out;
}

int beyond_facets(const RationalPoint& point, std::span<const RationalPoint> others) {
  return static_cast<int>(beyond_facet_sets(point, others).size());
}

PyramidCheck verify_pyramid_structure(const IncidenceSystem& s, const TypeReport& t) {
  if (t.type != HullType::II && t.type != HullType::III)
    throw Error(ErrorCode::BadParameters, kModule, "pyramid structure applies to types II and III only");
  const int apex_slot = t.type == HullType::II ? 0 : 2;
  PyramidCheck check;
  check.apex_vertices = members(s.slot_set(apex_slot));

  const GaleDiagram g = gale_transform(s);
  check.apex_gale_points_zero = true;
  for (const auto& p : g.points) {
    const bool zero = std::all_of(p.value.begin(), p.value.end(), [](const Rational& x) { return x.is_zero(); });
    const bool apex = std::find(check.apex_vertices.begin(), check.apex_vertices.end(), p.face) != check.apex_vertices.end();
    if (zero != apex) check.apex_gale_points_zero = false;
  }

  const FaceLattice lattice = oracle_lattice(s.vectors);
  const auto facets = lattice.facets();
  check.apex_signature = true;
  for (int v : check.apex_vertices) {
    const auto missing = std::count_if(facets.begin(), facets.end(),
                                       [v](VertexSet f) { return !(f & (VertexSet{1} << v)); });
    if (missing != 1) {
      check.apex_signature = false;
      check.detail += "apex " + std::to_string(v) + " misses " + std::to_string(missing) + " facets; ";
    }
  }
  if (!check.apex_gale_points_zero) check.detail += "zero Gale points differ from the apex class; ";
  if (!check.ok()) fail(ErrorCode::StructureMismatch, "pyramid structure: " + check.detail);
  return check;
}

}  // namespace galehull
