#include "galehull/face_lattice.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_set>

namespace galehull {

std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  while (s) {
    out.push_back(std::countr_zero(s));
    s &= s - 1;
  }
  return out;
}

VertexSet make_set(std::span<const int> vertices) {
  VertexSet s = 0;
  for (int v : vertices) s |= VertexSet{1} << v;
  return s;
}

FaceLattice::FaceLattice(int vertex_count, std::vector<Face> faces)
    : vertex_count_(vertex_count), faces_(std::move(faces)) {
  if (vertex_count < 0 || vertex_count > kMaxLatticeVertices)
    throw std::invalid_argument("FaceLattice: vertex count out of range");
  std::sort(faces_.begin(), faces_.end());
  faces_.erase(std::unique(faces_.begin(), faces_.end()), faces_.end());
  index_.reserve(faces_.size());
  for (const auto& f : faces_) {
    dim_ = std::max(dim_, f.dim);
    if (!index_.emplace(f.vertices, f.dim).second)
      throw std::invalid_argument("FaceLattice: vertex set " + format_set(f.vertices) + " listed with two dimensions");
  }
}

std::optional<int> FaceLattice::dim_of(VertexSet s) const {
  const auto it = index_.find(s);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::vector<VertexSet> FaceLattice::faces_of_dim(int d) const {
  std::vector<VertexSet> out;
  for (const auto& f : faces_)
    if (f.dim == d) out.push_back(f.vertices);
  return out;
}

FaceLattice FaceLattice::relabeled(std::span<const int> new_label) const {
  std::vector<Face> out;
  out.reserve(faces_.size());
  for (const auto& f : faces_) {
    VertexSet s = 0;
    for (int v : members(f.vertices)) s |= VertexSet{1} << new_label[static_cast<std::size_t>(v)];
    out.push_back({s, f.dim});
  }
  return FaceLattice(vertex_count_, std::move(out));
}

FaceLattice lattice_from_facets(int vertex_count, std::span<const VertexSet> facets,
                                const std::function<int(VertexSet)>& dimension) {
  std::unordered_set<VertexSet> seen(facets.begin(), facets.end());
  std::vector<VertexSet> frontier(seen.begin(), seen.end());
  while (!frontier.empty()) {
    std::vector<VertexSet> next;
    for (VertexSet f : frontier)
      for (VertexSet g : facets)
        if (seen.insert(f & g).second) next.push_back(f & g);
    frontier = std::move(next);
  }
  seen.insert(0);
  seen.insert(full_set(vertex_count));
  std::vector<Face> faces;
  faces.reserve(seen.size());
  for (VertexSet s : seen) faces.push_back({s, s == 0 ? -1 : dimension(s)});
  return FaceLattice(vertex_count, std::move(faces));
}

std::vector<int> fvector(const FaceLattice& l) {
  std::vector<int> out(static_cast<std::size_t>(std::max(l.dim(), 0)), 0);
  for (const auto& f : l.faces())
    if (f.dim >= 0 && f.dim < l.dim()) ++out[static_cast<std::size_t>(f.dim)];
  return out;
}

bool is_simplicial(const FaceLattice& l) {
  return std::all_of(l.faces().begin(), l.faces().end(), [&](const Face& f) {
    return f.dim == l.dim() || cardinality(f.vertices) == f.dim + 1;
  });
}

int neighborliness(const FaceLattice& l) {
  const int v = l.vertex_count();
  std::vector<long long> proper_by_size(static_cast<std::size_t>(v) + 1, 0);
  for (const auto& f : l.faces())
    if (f.dim < l.dim()) ++proper_by_size[static_cast<std::size_t>(cardinality(f.vertices))];
  long long binom = 1;  // C(v, k)
  int k = 0;
  for (int j = 1; j <= v; ++j) {
    binom = binom * (v - j + 1) / j;
    if (proper_by_size[static_cast<std::size_t>(j)] != binom) break;
    k = j;
  }
  return k;
}

std::string format_set(VertexSet s) {
  std::string out = "{";
  bool first = true;
  for (int v : members(s)) {
    if (!first) out += ",";
    out += std::to_string(v);
    first = false;
  }
  return out + "}";
}

}  // namespace galehull
