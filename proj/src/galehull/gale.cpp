#include "galehull/gale.hpp"

#include <algorithm>
#include <thread>

#include "galehull/error.hpp"
#include "galehull/linalg.hpp"

namespace galehull {

namespace {

constexpr const char* kModule = "gale-analysis";

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, kModule, message); }

std::string sizes_string(const std::array<int, 3>& m) {
  return "(" + std::to_string(m[0]) + "," + std::to_string(m[1]) + "," + std::to_string(m[2]) + ")";
}

}  // namespace

VertexSet IncidenceSystem::slot_set(int slot) const {
  VertexSet s = 0;
  for (int f : coloring.faces_in_slot(slot)) s |= VertexSet{1} << f;
  return s;
}

IncidenceSystem incidence_system(const PlanarPolytope& p, const FaceColoring& c) {
  IncidenceSystem s;
  s.n = p.n();
  s.coloring = c;
  s.vectors.assign(p.faces().size(), RationalPoint(static_cast<std::size_t>(p.vertex_count()), Rational(0)));
  for (std::size_t f = 0; f < p.faces().size(); ++f)
    for (int v : p.faces()[f]) s.vectors[f][static_cast<std::size_t>(v)] = 1;
  return s;
}

int hull_dimension(const IncidenceSystem& s) {
  const int d = linalg::affine_dimension(s.vectors);
  const auto& m = s.coloring.class_sizes;
  const int expected = (m[0] == m[1] && m[1] == m[2]) ? s.n - 1 : s.n;
  if (d != expected)
    fail(ErrorCode::TheoremViolation, "hull dimension " + std::to_string(d) + " but class sizes " + sizes_string(m) +
                                          " with n=" + std::to_string(s.n) + " require " + std::to_string(expected));
  return d;
}

std::vector<RationalPoint> GaleDiagram::values() const {
  std::vector<RationalPoint> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back(p.value);
  return out;
}

GaleDiagram gale_transform(const IncidenceSystem& s) {
  const std::size_t count = s.vectors.size();
  const std::size_t len = count ? s.vectors.front().size() : 0;
  linalg::RationalMatrix homogenized(len + 1, count);
  for (std::size_t j = 0; j < count; ++j) {
    homogenized(0, j) = 1;
    for (std::size_t v = 0; v < len; ++v) homogenized(v + 1, j) = s.vectors[j][v];
  }
  GaleDiagram g;
  g.basis = linalg::null_space_basis(homogenized);
  g.ambient_dim = static_cast<int>(g.basis.size());
  for (std::size_t j = 0; j < count; ++j) {
    GalePoint p;
    p.face = static_cast<int>(j);
    p.color = s.coloring.color[j];
    p.value.reserve(g.basis.size());
    for (const auto& b : g.basis) p.value.push_back(b[j]);
    p.direction = linalg::primitive_direction(p.value);
    g.points.push_back(std::move(p));
  }
  return g;
}

std::string to_string(HullType t) {
  switch (t) {
    case HullType::I: return "I";
    case HullType::II: return "II";
    case HullType::III: return "III";
    case HullType::IV: return "IV";
  }
  return "?";
}

HullType type_from_sizes(const std::array<int, 3>& m) {
  if (m[0] < m[1] && m[1] < m[2]) return HullType::I;
  if (m[0] < m[1]) return HullType::II;
  if (m[1] < m[2]) return HullType::III;
  return HullType::IV;
}

namespace {

std::string cyclic_name(int m2) {
  return "C(" + std::to_string(2 * m2) + "," + std::to_string(2 * m2 - 2) + ")";
}

// The single Gale value shared by all points of a slot (1-dim diagrams).
Rational slot_value(const GaleDiagram& g, const FaceColoring& c, int slot) {
  std::optional<Rational> value;
  for (const auto& p : g.points) {
    if (c.slot_of_color(p.color) != slot) continue;
    if (value && *value != p.value[0])
      fail(ErrorCode::DiagramMismatch, "color class in slot " + std::to_string(slot + 1) +
                                           " does not map to a single Gale value");
    value = p.value[0];
  }
  if (!value) fail(ErrorCode::DiagramMismatch, "empty color class");
  return *value;
}

void check_one_dimensional(const TypeReport& t, const GaleDiagram& g, const FaceColoring& c) {
  if (g.ambient_dim != 1)
    fail(ErrorCode::DiagramMismatch, "type " + to_string(t.type) + " expects a diagram in R^1, got R^" +
                                         std::to_string(g.ambient_dim));
  const std::array<Rational, 3> v = {slot_value(g, c, 0), slot_value(g, c, 1), slot_value(g, c, 2)};
  const auto opposite = [](const Rational& a, const Rational& b) { return a.sign() * b.sign() == -1; };
  switch (t.type) {
    case HullType::I: {
      if (!opposite(v[1], v[0]) || !opposite(v[1], v[2]))
        fail(ErrorCode::DiagramMismatch, "type I: slot 2 must sit opposite slots 1 and 3");
      // Scale so slot 3 sits at -1; slot 1 must land at 1-k and slot 2 at k.
      const Rational scale = -v[2];
      if (v[0] / scale != Rational(1) - *t.k || v[1] / scale != *t.k)
        fail(ErrorCode::DiagramMismatch, "type I: Gale values " + v[0].to_string() + ", " + v[1].to_string() + ", " +
                                             v[2].to_string() + " are not proportional to (1-k, k, -1) with k=" +
                                             t.k->to_string());
      break;
    }
    case HullType::II:
      if (!v[0].is_zero() || !opposite(v[1], v[2]))
        fail(ErrorCode::DiagramMismatch, "type II: expected slot 1 at 0 and slots 2, 3 at opposite signs");
      break;
    case HullType::III:
      if (!v[2].is_zero() || !opposite(v[0], v[1]))
        fail(ErrorCode::DiagramMismatch, "type III: expected slot 3 at 0 and slots 1, 2 at opposite signs");
      break;
    case HullType::IV:
      break;
  }
}

void check_type_four(const GaleDiagram& g, const FaceColoring& c) {
  if (g.ambient_dim != 2)
    fail(ErrorCode::DiagramMismatch, "type IV expects a diagram in R^2, got R^" + std::to_string(g.ambient_dim));
  std::array<std::optional<RationalPoint>, 3> rays;
  std::array<int, 3> multiplicity{};
  for (const auto& p : g.points) {
    const auto slot = static_cast<std::size_t>(c.slot_of_color(p.color));
    if (std::all_of(p.direction.begin(), p.direction.end(), [](const Rational& x) { return x.is_zero(); }))
      fail(ErrorCode::DiagramMismatch, "type IV: zero Gale point at face " + std::to_string(p.face));
    if (rays[slot] && *rays[slot] != p.direction)
      fail(ErrorCode::DiagramMismatch, "type IV: a color class spans more than one ray");
    rays[slot] = p.direction;
    ++multiplicity[slot];
  }
  if (*rays[0] == *rays[1] || *rays[1] == *rays[2] || *rays[0] == *rays[2])
    fail(ErrorCode::DiagramMismatch, "type IV: rays of distinct classes coincide");
  if (multiplicity[0] != multiplicity[1] || multiplicity[1] != multiplicity[2])
    fail(ErrorCode::DiagramMismatch, "type IV: ray multiplicities differ");
  const std::vector<RationalPoint> three = {*rays[0], *rays[1], *rays[2]};
  if (!relint_contains_zero(three))
    fail(ErrorCode::DiagramMismatch, "type IV: zero is not in the relative interior of the three rays");
}

}  // namespace

TypeReport classify(const IncidenceSystem& s, const GaleDiagram& g) {
  TypeReport t;
  t.m = s.coloring.class_sizes;
  t.n = s.n;
  t.type = type_from_sizes(t.m);
  t.dim = s.hull_vertex_count() - 1 - g.ambient_dim;
  if (t.m[0] < 2) fail(ErrorCode::TheoremViolation, "smallest color class has fewer than 2 faces");
  const auto [m1, m2, m3] = t.m;
  const std::string n = std::to_string(t.n);
  switch (t.type) {
    case HullType::I:
      t.k = Rational(m3 - m1, m2 - m1);
      t.predicted = {{1, "+1", m2}, {0, "-1", m1}, {2, "-1", m3}};
      t.structure = "T^" + n + "_" + std::to_string(m2 - 1);
      break;
    case HullType::II:
      t.predicted = {{0, "0", m1}, {1, "+1", m2}, {2, "-1", m3}};
      t.structure = std::to_string(m1) + "-fold " + n + "-pyramid over " + cyclic_name(m2);
      break;
    case HullType::III:
      t.predicted = {{2, "0", m3}, {1, "+1", m2}, {0, "-1", m1}};
      t.structure = std::to_string(m3) + "-fold " + n + "-pyramid over " + cyclic_name(m2);
      break;
    case HullType::IV:
      t.predicted = {{0, "ray", m1}, {1, "ray", m2}, {2, "ray", m3}};
      t.structure = "conv(w, " + std::to_string(m2 - 1) + "-fold " + std::to_string(t.n - 1) + "-pyramid over " +
                    cyclic_name(m2) + ")";
      break;
  }
  if (t.type == HullType::IV)
    check_type_four(g, s.coloring);
  else
    check_one_dimensional(t, g, s.coloring);
  return t;
}

bool relint_contains_zero(std::span<const RationalPoint> points) {
  if (points.empty()) return false;
  const std::size_t dim = points.front().size();
  for (const auto& p : points)
    if (p.size() != dim) fail(ErrorCode::DimensionMismatch, "relint_contains_zero: points of mixed dimension");
  if (dim == 0) return true;
  if (dim == 1) {
    bool pos = false;
    bool neg = false;
    for (const auto& p : points) {
      pos = pos || p[0].sign() > 0;
      neg = neg || p[0].sign() < 0;
    }
    return (pos && neg) || (!pos && !neg);
  }
  // Variables: mu_i >= 0 (weight = mu_i + t), then t+ and t-.
  //   sum_i mu_i p_i + t * sum_i p_i = 0
  //   sum_i mu_i + count * t       = 1
  // maximize t; zero is in the relative interior iff the optimum is positive.
  const std::size_t count = points.size();
  linalg::RationalMatrix a(dim + 1, count + 2);
  RationalPoint b(dim + 1, Rational(0));
  for (std::size_t c = 0; c < dim; ++c) {
    Rational total;
    for (std::size_t i = 0; i < count; ++i) {
      a(c, i) = points[i][c];
      total += points[i][c];
    }
    a(c, count) = total;
    a(c, count + 1) = -total;
  }
  for (std::size_t i = 0; i < count; ++i) a(dim, i) = 1;
  a(dim, count) = static_cast<long>(count);
  a(dim, count + 1) = -static_cast<long>(count);
  b[dim] = 1;
  RationalPoint objective(count + 2, Rational(0));
  objective[count] = 1;
  objective[count + 1] = -1;
  const auto result = linalg::maximize(a, b, objective);
  return result.status == linalg::LpStatus::Optimal && result.value.sign() > 0;
}

bool closed_form_is_face(HullType type, const std::array<VertexSet, 3>& slots, VertexSet j) {
  const auto inside = [j](VertexSet s) { return contains(j, s); };
  switch (type) {
    case HullType::I: return !inside(slots[1]) && !inside(slots[0] | slots[2]);
    case HullType::II: return (!inside(slots[1]) && !inside(slots[2])) || inside(slots[1] | slots[2]);
    case HullType::III: return (!inside(slots[0]) && !inside(slots[1])) || inside(slots[0] | slots[1]);
    case HullType::IV: return !inside(slots[0]) && !inside(slots[1]) && !inside(slots[2]);
  }
  return false;
}

FaceLattice enumerate_faces(const IncidenceSystem& s, const GaleDiagram& g, const TypeReport& t) {
  const int count = s.hull_vertex_count();
  if (count > kMaxHullVertices)
    throw Error(ErrorCode::TooLarge, kModule,
                "hull has " + std::to_string(count) + " vertices; subset enumeration is capped at " +
                    std::to_string(kMaxHullVertices));

  // Relint membership depends only on which distinct Gale points occur.
  std::vector<RationalPoint> distinct;
  std::vector<int> distinct_of(static_cast<std::size_t>(count));
  for (int j = 0; j < count; ++j) {
    const auto& v = g.points[static_cast<std::size_t>(j)].value;
    auto it = std::find(distinct.begin(), distinct.end(), v);
    if (it == distinct.end()) it = distinct.insert(distinct.end(), v);
    distinct_of[static_cast<std::size_t>(j)] = static_cast<int>(it - distinct.begin());
  }
  auto relint_of = [&](std::size_t mask) {
    std::vector<RationalPoint> pts;
    for (std::size_t i = 0; i < distinct.size(); ++i)
      if (mask & (std::size_t{1} << i)) pts.push_back(distinct[i]);
    return relint_contains_zero(pts);
  };
  constexpr std::size_t kTabulateLimit = 16;
  std::vector<char> relint_of_distinct;
  if (distinct.size() <= kTabulateLimit) {
    relint_of_distinct.assign(std::size_t{1} << distinct.size(), 0);
    for (std::size_t mask = 1; mask < relint_of_distinct.size(); ++mask)
      relint_of_distinct[mask] = relint_of(mask) ? 1 : 0;
  }

  const std::array<VertexSet, 3> slots = {s.slot_set(0), s.slot_set(1), s.slot_set(2)};
  const VertexSet full = full_set(count);
  const std::uint64_t total = std::uint64_t{1} << count;

  const unsigned workers = std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
  std::vector<std::vector<Face>> found(workers);
  std::vector<std::vector<VertexSet>> mismatches(workers);
  auto scan = [&](unsigned w) {
    for (std::uint64_t j = w; j < total - 1; j += workers) {
      const auto face = static_cast<VertexSet>(j);
      const VertexSet co = full & ~face;
      std::size_t dmask = 0;
      for (int v : members(co)) dmask |= std::size_t{1} << distinct_of[static_cast<std::size_t>(v)];
      const bool by_gale = relint_of_distinct.empty() ? relint_of(dmask) : relint_of_distinct[dmask] != 0;
      if (by_gale != closed_form_is_face(t.type, slots, face)) {
        if (mismatches[w].size() < 8) mismatches[w].push_back(face);
        continue;
      }
      if (!by_gale) continue;
      std::vector<RationalPoint> pts;
      for (int v : members(face)) pts.push_back(s.vectors[static_cast<std::size_t>(v)]);
      found[w].push_back({face, linalg::affine_dimension(pts)});
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(scan, w);
  scan(0);
  for (auto& th : pool) th.join();

  std::vector<VertexSet> bad;
  for (const auto& m : mismatches) bad.insert(bad.end(), m.begin(), m.end());
  if (!bad.empty()) {
    std::sort(bad.begin(), bad.end());
    std::string list;
    for (VertexSet b : bad) list += " " + format_set(b);
    fail(ErrorCode::CriterionMismatch, "coface criterion and closed form disagree on:" + list);
  }

  std::vector<Face> faces;
  for (auto& f : found) faces.insert(faces.end(), f.begin(), f.end());
  faces.push_back({full, t.dim});
  return FaceLattice(count, std::move(faces));
}

bool simpliciality_check(const FaceLattice& l, const TypeReport& t) {
  const bool simplicial = is_simplicial(l);
  const bool expected = t.type == HullType::I || t.type == HullType::IV;
  if (simplicial != expected)
    fail(ErrorCode::TheoremViolation, "type " + to_string(t.type) + " hull is " +
                                          (simplicial ? "" : "not ") + "simplicial");
  return simplicial;
}

}  // namespace galehull
