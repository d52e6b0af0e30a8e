#include "galehull/analysis.hpp"

#include <algorithm>

#include "galehull/error.hpp"
#include "galehull/oracle.hpp"

namespace galehull {

HullAnalysis analyze_hull(const PlanarPolytope& p, const FaceColoring& c) {
  if (p.face_count() > kMaxHullVertices)
    throw Error(ErrorCode::TooLarge, "gale-analysis",
                std::to_string(p.face_count()) + " faces exceeds the analysis limit of " +
                    std::to_string(kMaxHullVertices));
  HullAnalysis h;
  h.system = incidence_system(p, c);
  const int d = hull_dimension(h.system);
  h.gale = gale_transform(h.system);
  if (h.gale.ambient_dim != h.system.hull_vertex_count() - d - 1)
    throw Error(ErrorCode::TheoremViolation, "gale-analysis", "Gale transform has the wrong ambient dimension");
  h.type = classify(h.system, h.gale);
  h.lattice = enumerate_faces(h.system, h.gale, h.type);
  h.fvector = fvector(h.lattice);
  h.simplicial = simpliciality_check(h.lattice, h.type);
  h.neighborly = neighborliness(h.lattice);
  return h;
}

Analysis analyze(const PlanarPolytope& p) {
  Analysis a{p, three_color(p), {}};
  for (const auto& c : a.coloring.essential) a.hulls.push_back(analyze_hull(p, c));
  return a;
}

ReferenceLattice predicted_reference(const TypeReport& t) {
  const auto [m1, m2, m3] = t.m;
  switch (t.type) {
    case HullType::I: return tkn_model(t.n, m2 - 1);
    case HullType::II: return pyramid(cyclic_polytope(2 * m2, 2 * m2 - 2), m1);
    case HullType::III: return pyramid(cyclic_polytope(2 * m2, 2 * m2 - 2), m3);
    case HullType::IV: return type4_model(m2);
  }
  return {};
}

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

namespace {

std::vector<RationalPoint> without(const std::vector<RationalPoint>& pts, int skip) {
  std::vector<RationalPoint> out;
  for (std::size_t i = 0; i < pts.size(); ++i)
    if (static_cast<int>(i) != skip) out.push_back(pts[i]);
  return out;
}

void add_type_one_checks(const HullAnalysis& h, VerifyReport& r) {
  const auto& t = h.type;
  const int expected = t.m[1] - 1;
  Check beyond{"beyondFacets", true, ""};
  for (int v0 : members(h.system.slot_set(1))) {
    const int count = beyond_facets(h.system.vectors[static_cast<std::size_t>(v0)], without(h.system.vectors, v0));
    beyond.detail += "v" + std::to_string(v0) + ":" + std::to_string(count) + " ";
    if (count != expected) beyond.pass = false;
  }
  beyond.detail += "(expected " + std::to_string(expected) + ")";
  r.checks.push_back(beyond);
  // classify() already rejects a diagram that is not proportional to (1-k, k, -1).
  r.checks.push_back({"galeRatio", t.k.has_value(), "k = " + (t.k ? t.k->to_string() : std::string("none"))});

  const ReferenceLattice simplex_base = simplex(t.n);
  std::vector<VertexSet> visible;
  for (int v = 0; v < t.m[1] - 1; ++v) visible.push_back(full_set(t.n + 1) & ~(VertexSet{1} << v));
  const auto built = beyond_extension(simplex_base, visible);
  r.checks.push_back({"modelConstruction", lattice_isomorphic(built.lattice, predicted_reference(t).lattice).has_value(),
                      "conv(v, simplex) with v beyond " + std::to_string(visible.size()) + " facets vs " +
                          predicted_reference(t).name});
}

void add_type_four_checks(const HullAnalysis& h, VerifyReport& r) {
  const int m = h.type.m[1];
  const int w = members(h.system.slot_set(0)).front();
  const auto rest = without(h.system.vectors, w);
  const OracleHull q = oracle_hull(rest);
  std::vector<VertexSet> non_simplex;
  for (const auto& f : q.facets)
    if (cardinality(f.points) > q.dim) non_simplex.push_back(f.points);
  auto visible = beyond_facet_sets(h.system.vectors[static_cast<std::size_t>(w)], rest);
  std::sort(visible.begin(), visible.end());
  std::sort(non_simplex.begin(), non_simplex.end());
  r.checks.push_back({"beyondNonSimplexFacets",
                      visible == non_simplex && static_cast<int>(visible.size()) == m - 1,
                      "w = face " + std::to_string(w) + " beyond " + std::to_string(visible.size()) + " of " +
                          std::to_string(q.facets.size()) + " facets of Q; Q has " +
                          std::to_string(non_simplex.size()) + " non-simplex facets"});

  const auto qref = pyramid(cyclic_polytope(2 * m, 2 * m - 2), m - 1);
  std::vector<VertexSet> qref_non_simplex;
  for (VertexSet f : qref.lattice.facets())
    if (cardinality(f) > qref.lattice.dim()) qref_non_simplex.push_back(f);
  const auto built = beyond_extension(qref, qref_non_simplex);
  r.checks.push_back({"modelConstruction",
                      static_cast<int>(qref_non_simplex.size()) == m - 1 &&
                          lattice_isomorphic(built.lattice, type4_model(m).lattice).has_value(),
                      "conv(w, " + qref.name + ") with w beyond its " + std::to_string(qref_non_simplex.size()) +
                          " non-simplex facets vs type4_model(" + std::to_string(m) + ")"});
}

}  // namespace

VerifyReport verify(const HullAnalysis& h) {
  VerifyReport r;
  const FaceLattice oracle = oracle_lattice(h.system.vectors);

  std::set_difference(h.lattice.faces().begin(), h.lattice.faces().end(), oracle.faces().begin(),
                      oracle.faces().end(), std::back_inserter(r.only_in_criterion));
  std::set_difference(oracle.faces().begin(), oracle.faces().end(), h.lattice.faces().begin(),
                      h.lattice.faces().end(), std::back_inserter(r.only_in_oracle));
  r.checks.push_back({"faceSetsEqual", r.only_in_criterion.empty() && r.only_in_oracle.empty(),
                      std::to_string(h.lattice.size()) + " criterion faces, " + std::to_string(oracle.size()) +
                          " oracle faces"});

  const bool oracle_simplicial = is_simplicial(oracle);
  r.checks.push_back({"simpliciality", oracle_simplicial == h.simplicial,
                      std::string("oracle ") + (oracle_simplicial ? "simplicial" : "not simplicial")});

  const auto& t = h.type;
  if (t.type == HullType::II || t.type == HullType::III) {
    try {
      const auto p = verify_pyramid_structure(h.system, t);
      r.checks.push_back({"pyramidStructure", true,
                          std::to_string(p.apex_vertices.size()) + " apexes with zero Gale points"});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::StructureMismatch) throw;
      r.checks.push_back({"pyramidStructure", false, e.what()});
    }
  }
  if (t.type == HullType::IV) {
    const int k = neighborliness(oracle);
    r.checks.push_back({"neighborliness", k == t.m[1] - 1 && k == h.neighborly,
                        "oracle " + std::to_string(k) + ", criterion " + std::to_string(h.neighborly) +
                            ", expected " + std::to_string(t.m[1] - 1)});
  }

  const ReferenceLattice ref = predicted_reference(t);
  r.reference = ref.name;
  const auto iso = lattice_isomorphic(h.lattice, ref.lattice);
  const auto iso_oracle = lattice_isomorphic(oracle, ref.lattice);
  r.checks.push_back({"referenceIsomorphism", iso.has_value() && iso_oracle.has_value(),
                      "criterion and oracle lattices vs " + ref.name});

  if (t.type == HullType::I) add_type_one_checks(h, r);
  if (t.type == HullType::IV) add_type_four_checks(h, r);
  return r;
}

CompareResult compare(const Analysis& a, const Analysis& b, bool use_oracle) {
  CompareResult r;
  r.by_theorem = equivalent(a.primary().type, a.polytope.fvector(), b.primary().type, b.polytope.fvector());
  if (use_oracle) r.by_oracle = equivalent_oracle(a.primary().system, b.primary().system);
  return r;
}

}  // namespace galehull
