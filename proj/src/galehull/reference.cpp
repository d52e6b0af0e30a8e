#include "galehull/reference.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <utility>

#include "galehull/error.hpp"

namespace galehull {

namespace {

constexpr const char* kModule = "reference-polytopes";

[[noreturn]] void fail(const std::string& message) { throw Error(ErrorCode::BadParameters, kModule, message); }

// Proper faces selected by a predicate on vertex subsets; simplicial grading.
FaceLattice simplicial_from_predicate(int vertex_count, int dim, const std::function<bool(VertexSet)>& is_face) {
  std::vector<Face> faces;
  const VertexSet full = full_set(vertex_count);
  for (std::uint64_t j = 0; j < full; ++j) {
    const auto s = static_cast<VertexSet>(j);
    if (is_face(s)) faces.push_back({s, cardinality(s) - 1});
  }
  faces.push_back({full, dim});
  return FaceLattice(vertex_count, std::move(faces));
}

}  // namespace

bool gale_evenness(VertexSet facet, int v) {
  // For i < j both outside the facet, count facet members strictly between.
  for (int i = 0; i < v; ++i) {
    if (facet & (VertexSet{1} << i)) continue;
    int between = 0;
    for (int j = i + 1; j < v; ++j) {
      if (facet & (VertexSet{1} << j)) {
        ++between;
        continue;
      }
      if (between % 2 != 0) return false;
    }
  }
  return true;
}

ReferenceLattice cyclic_polytope(int v, int d) {
  if (!(v > d && d >= 2) || v > kMaxLatticeVertices)
    fail("cyclic polytope C(" + std::to_string(v) + "," + std::to_string(d) + ") needs v > d >= 2");
  std::vector<VertexSet> facets;
  const VertexSet full = full_set(v);
  for (std::uint64_t j = 1; j < full; ++j) {
    const auto s = static_cast<VertexSet>(j);
    if (cardinality(s) == d && gale_evenness(s, v)) facets.push_back(s);
  }
  ReferenceLattice r;
  r.lattice = lattice_from_facets(v, facets, [&](VertexSet s) { return s == full ? d : cardinality(s) - 1; });
  for (int i = 0; i < v; ++i) r.roles.push_back(i % 2 == 0 ? "cyclic-odd" : "cyclic-even");
  r.name = "C(" + std::to_string(v) + "," + std::to_string(d) + ")";
  return r;
}

ReferenceLattice simplex(int d) {
  if (d < 0 || d + 1 > kMaxLatticeVertices) fail("simplex dimension out of range");
  ReferenceLattice r;
  r.lattice = simplicial_from_predicate(d + 1, d, [](VertexSet) { return true; });
  r.roles.assign(static_cast<std::size_t>(d) + 1, "simplex");
  r.name = "simplex(" + std::to_string(d) + ")";
  return r;
}

ReferenceLattice pyramid(const ReferenceLattice& base, int apex_count) {
  const int b = base.lattice.vertex_count();
  if (apex_count < 0 || b + apex_count > kMaxLatticeVertices) fail("pyramid apex count out of range");
  std::vector<Face> faces;
  faces.reserve(base.lattice.size() << apex_count);
  for (const auto& g : base.lattice.faces()) {
    for (std::uint32_t a = 0; a < (1u << apex_count); ++a)
      faces.push_back({g.vertices | (a << b), g.dim + std::popcount(a)});
  }
  ReferenceLattice r;
  r.lattice = FaceLattice(b + apex_count, std::move(faces));
  r.roles = base.roles;
  r.roles.resize(static_cast<std::size_t>(b + apex_count), "apex");
  r.name = apex_count == 0 ? base.name : "pyramid(" + base.name + "," + std::to_string(apex_count) + ")";
  return r;
}

ReferenceLattice beyond_extension(const ReferenceLattice& base, std::span<const VertexSet> visible_facets) {
  const FaceLattice& q = base.lattice;
  const int w = q.vertex_count();
  if (w + 1 > kMaxLatticeVertices) fail("beyond_extension: too many vertices");
  const auto facets = q.facets();
  const auto visible = [&](VertexSet f) {
    return std::find(visible_facets.begin(), visible_facets.end(), f) != visible_facets.end();
  };
  for (VertexSet v : visible_facets)
    if (std::find(facets.begin(), facets.end(), v) == facets.end())
      fail("beyond_extension: " + format_set(v) + " is not a facet");
  const VertexSet wbit = VertexSet{1} << w;
  std::vector<Face> faces;
  for (const auto& g : q.faces()) {
    if (g.dim == q.dim()) continue;
    bool under_visible = false;
    bool under_hidden = false;
    for (VertexSet f : facets) {
      if (!contains(f, g.vertices)) continue;
      (visible(f) ? under_visible : under_hidden) = true;
    }
    if (under_hidden) faces.push_back(g);
    if (g.vertices == 0 || (under_visible && under_hidden)) faces.push_back({g.vertices | wbit, g.dim + 1});
  }
  faces.push_back({full_set(w + 1), q.dim()});
  ReferenceLattice r;
  r.lattice = FaceLattice(w + 1, std::move(faces));
  r.roles = base.roles;
  r.roles.push_back("w");
  r.name = "beyond(" + base.name + "," + std::to_string(visible_facets.size()) + ")";
  return r;
}

ReferenceLattice tkn_model(int n, int k) {
  if (k < 1 || k > n / 2 || n + 2 > kMaxLatticeVertices)
    fail("T^n_k needs 1 <= k <= n/2, got n=" + std::to_string(n) + " k=" + std::to_string(k));
  const VertexSet a = full_set(k + 1);
  const VertexSet b = full_set(n + 2) & ~a;
  ReferenceLattice r;
  r.lattice = simplicial_from_predicate(n + 2, n, [&](VertexSet j) { return !contains(j, a) && !contains(j, b); });
  for (int i = 0; i < n + 2; ++i) r.roles.push_back(i <= k ? "class-A" : "class-B");
  r.name = "T^" + std::to_string(n) + "_" + std::to_string(k);
  return r;
}

ReferenceLattice type4_model(int m) {
  if (m < 2 || 3 * m > kMaxLatticeVertices) fail("type4_model needs 2 <= m <= 10, got " + std::to_string(m));
  const std::array<VertexSet, 3> classes = {full_set(m), full_set(m) << m, full_set(m) << (2 * m)};
  ReferenceLattice r;
  r.lattice = simplicial_from_predicate(3 * m, 3 * m - 3, [&](VertexSet j) {
    return std::none_of(classes.begin(), classes.end(), [j](VertexSet c) { return contains(j, c); });
  });
  for (int i = 0; i < 3 * m; ++i) r.roles.push_back("class-" + std::to_string(i / m + 1));
  r.name = "type4_model(" + std::to_string(m) + ")";
  return r;
}

namespace {

class IsomorphismSearch {
 public:
  IsomorphismSearch(const FaceLattice& a, const FaceLattice& b)
      : a_(a), b_(b), fa_(a.facets()), fb_(b.facets()), n_(a.vertex_count()) {}

  std::optional<std::vector<int>> run() {
    if (a_.vertex_count() != b_.vertex_count() || a_.dim() != b_.dim() || a_.size() != b_.size()) return std::nullopt;
    if (fvector(a_) != fvector(b_) || fa_.size() != fb_.size()) return std::nullopt;
    sig_a_ = signatures(fa_);
    sig_b_ = signatures(fb_);
    auto sa = sig_a_;
    auto sb = sig_b_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;

    order_.resize(static_cast<std::size_t>(n_));
    std::iota(order_.begin(), order_.end(), 0);
    // Rarest signatures first.
    std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
      return std::count(sig_a_.begin(), sig_a_.end(), sig_a_[static_cast<std::size_t>(x)]) <
             std::count(sig_a_.begin(), sig_a_.end(), sig_a_[static_cast<std::size_t>(y)]);
    });
    map_.assign(static_cast<std::size_t>(n_), -1);
    if (!extend(0, 0, 0)) return std::nullopt;
    return map_;
  }

 private:
  using Signature = std::vector<int>;

  std::vector<Signature> signatures(const std::vector<VertexSet>& facets) const {
    std::vector<Signature> out(static_cast<std::size_t>(n_));
    for (VertexSet f : facets)
      for (int v : members(f)) out[static_cast<std::size_t>(v)].push_back(cardinality(f));
    for (auto& s : out) std::sort(s.begin(), s.end());
    return out;
  }

  bool consistent(VertexSet assigned_a, VertexSet assigned_b) const {
    std::vector<std::pair<int, VertexSet>> ka;
    std::vector<std::pair<int, VertexSet>> kb;
    ka.reserve(fa_.size());
    kb.reserve(fb_.size());
    for (VertexSet f : fa_) {
      VertexSet img = 0;
      for (int v : members(f & assigned_a)) img |= VertexSet{1} << map_[static_cast<std::size_t>(v)];
      ka.emplace_back(cardinality(f), img);
    }
    for (VertexSet g : fb_) kb.emplace_back(cardinality(g), g & assigned_b);
    std::sort(ka.begin(), ka.end());
    std::sort(kb.begin(), kb.end());
    return ka == kb;
  }

  bool extend(std::size_t depth, VertexSet assigned_a, VertexSet assigned_b) {
    if (depth == order_.size()) return a_.relabeled(map_) == b_;
    const int v = order_[depth];
    for (int w = 0; w < n_; ++w) {
      if (assigned_b & (VertexSet{1} << w)) continue;
      if (sig_a_[static_cast<std::size_t>(v)] != sig_b_[static_cast<std::size_t>(w)]) continue;
      map_[static_cast<std::size_t>(v)] = w;
      const VertexSet na = assigned_a | (VertexSet{1} << v);
      const VertexSet nb = assigned_b | (VertexSet{1} << w);
      if (consistent(na, nb) && extend(depth + 1, na, nb)) return true;
      map_[static_cast<std::size_t>(v)] = -1;
    }
    return false;
  }

  const FaceLattice& a_;
  const FaceLattice& b_;
  std::vector<VertexSet> fa_;
  std::vector<VertexSet> fb_;
  int n_;
  std::vector<Signature> sig_a_;
  std::vector<Signature> sig_b_;
  std::vector<int> order_;
  std::vector<int> map_;
};

}  // namespace

std::optional<std::vector<int>> lattice_isomorphic(const FaceLattice& a, const FaceLattice& b) {
  return IsomorphismSearch(a, b).run();
}

}  // namespace galehull
