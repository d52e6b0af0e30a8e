#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace galehull {

// Subset of at most 32 polytope vertices.
using VertexSet = std::uint32_t;

constexpr int kMaxLatticeVertices = 32;

inline int cardinality(VertexSet s) { return std::popcount(s); }
inline VertexSet full_set(int vertex_count) {
  return vertex_count >= 32 ? ~VertexSet{0} : (VertexSet{1} << vertex_count) - 1;
}
inline bool contains(VertexSet outer, VertexSet inner) { return (outer & inner) == inner; }
std::vector<int> members(VertexSet s);
VertexSet make_set(std::span<const int> vertices);

struct Face {
  VertexSet vertices = 0;
  int dim = -1;
  friend auto operator<=>(const Face& a, const Face& b) {
    if (auto c = a.dim <=> b.dim; c != 0) return c;
    return a.vertices <=> b.vertices;
  }
  friend bool operator==(const Face&, const Face&) = default;
};

// Complete face lattice of a polytope on vertices 0..vertex_count-1,
// including the empty face (dim -1) and the polytope itself. Faces are kept
// sorted by (dim, vertex mask).
class FaceLattice {
 public:
  FaceLattice() = default;
  FaceLattice(int vertex_count, std::vector<Face> faces);

  int vertex_count() const { return vertex_count_; }
  int dim() const { return dim_; }
  const std::vector<Face>& faces() const { return faces_; }
  std::size_t size() const { return faces_.size(); }

  bool has_face(VertexSet s) const { return dim_of(s).has_value(); }
  std::optional<int> dim_of(VertexSet s) const;

  std::vector<VertexSet> faces_of_dim(int d) const;
  std::vector<VertexSet> facets() const { return faces_of_dim(dim_ - 1); }

  FaceLattice relabeled(std::span<const int> new_label) const;

  friend bool operator==(const FaceLattice& a, const FaceLattice& b) {
    return a.vertex_count_ == b.vertex_count_ && a.faces_ == b.faces_;
  }

 private:
  int vertex_count_ = 0;
  int dim_ = -1;
  std::vector<Face> faces_;
  std::unordered_map<VertexSet, int> index_;
};

// All intersections of the given facets, plus the empty face and the full
// vertex set, graded by `dimension`.
FaceLattice lattice_from_facets(int vertex_count, std::span<const VertexSet> facets,
                                const std::function<int(VertexSet)>& dimension);

// Face counts for dimensions 0..d-1.
std::vector<int> fvector(const FaceLattice& l);

// Every proper face J satisfies |J| = dim(J) + 1.
bool is_simplicial(const FaceLattice& l);

// Largest k such that every j-subset of vertices, j <= k, is a proper face.
int neighborliness(const FaceLattice& l);

std::string format_set(VertexSet s);

}  // namespace galehull
