#pragma once

#include <array>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

namespace galehull {

using FaceCycle = std::vector<int>;

struct FVector {
  int vertices = 0;
  int edges = 0;
  int faces = 0;
  friend bool operator==(const FVector&, const FVector&) = default;
};

// A combinatorial simple 3-polytope given by its face cycles. Instances can
// only be obtained through validate(), so every object satisfies:
// vertex ids are 0..2n-1, each vertex lies on exactly three faces, each edge
// on exactly two, the 1-skeleton is connected and V - E + F = 2.
//
// 3-connectivity is not checked.
class PlanarPolytope {
 public:
  static PlanarPolytope validate(std::vector<FaceCycle> raw);

  const std::vector<FaceCycle>& faces() const { return faces_; }
  int vertex_count() const { return vertex_count_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int face_count() const { return static_cast<int>(faces_.size()); }
  int n() const { return vertex_count_ / 2; }
  FVector fvector() const { return {vertex_count(), edge_count(), face_count()}; }

  // Sorted (u < v) pairs.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  // The three faces through each vertex, ascending.
  const std::vector<std::array<int, 3>>& vertex_faces() const { return vertex_faces_; }
  // Faces sharing an edge with each face, ascending.
  const std::vector<std::vector<int>>& dual_adjacency() const { return dual_adjacency_; }
  // Neighbours of each vertex in the 1-skeleton, ascending.
  const std::vector<std::vector<int>>& vertex_adjacency() const { return vertex_adjacency_; }

 private:
  PlanarPolytope() = default;

  std::vector<FaceCycle> faces_;
  int vertex_count_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::array<int, 3>> vertex_faces_;
  std::vector<std::vector<int>> dual_adjacency_;
  std::vector<std::vector<int>> vertex_adjacency_;
};

// Color labels are 1, 2, 3. Slots 0, 1, 2 are the classes sorted by size
// (ties broken by label), so class_sizes[0] <= class_sizes[1] <= class_sizes[2]
// and class_map[slot] is the label occupying that slot.
struct FaceColoring {
  std::vector<int> color;
  std::array<int, 3> class_sizes{};
  std::array<int, 3> class_map{};

  static FaceColoring from_colors(std::vector<int> colors);

  int slot_of_color(int label) const;
  int slot_of_face(int face) const { return slot_of_color(color[static_cast<std::size_t>(face)]); }
  std::vector<int> faces_in_slot(int slot) const;
};

struct ColoringResult {
  // Every proper coloring up to color permutation, in the canonical form where
  // labels first appear in increasing order along the face list. The first
  // entry is the lexicographically smallest proper coloring.
  std::vector<FaceColoring> essential;

  const FaceColoring& first() const { return essential.front(); }
  int essential_count() const { return static_cast<int>(essential.size()); }
};

ColoringResult three_color(const PlanarPolytope& p);

PlanarPolytope prism(int k);
PlanarPolytope truncated_octahedron();

// name is one of "prism", "cube", "truncated-octahedron".
PlanarPolytope catalog(std::string_view name, std::optional<int> parameter = std::nullopt);
// "prism:6", "cube", ...
PlanarPolytope catalog_spec(std::string_view spec);
std::vector<std::string_view> catalog_names();

}  // namespace galehull
