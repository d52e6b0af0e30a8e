#include "galehull/polytope.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <set>
#include <string>

#include "galehull/error.hpp"

namespace galehull {

namespace {

constexpr const char* kModule = "combinatorial-polytope";

[[noreturn]] void fail(ErrorCode code, const std::string& message) { throw Error(code, kModule, message); }

std::pair<int, int> edge_key(int a, int b) { return a < b ? std::pair{a, b} : std::pair{b, a}; }

}  // namespace

PlanarPolytope PlanarPolytope::validate(std::vector<FaceCycle> raw) {
  if (raw.empty()) fail(ErrorCode::DegenerateFace, "polytope has no faces");

  int max_id = -1;
  for (std::size_t f = 0; f < raw.size(); ++f) {
    const auto& face = raw[f];
    if (face.size() < 3)
      fail(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " has fewer than 3 vertices");
    std::set<int> seen;
    for (int v : face) {
      if (v < 0) fail(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " has a negative vertex id");
      if (!seen.insert(v).second)
        fail(ErrorCode::DegenerateFace, "face " + std::to_string(f) + " repeats vertex " + std::to_string(v));
      max_id = std::max(max_id, v);
    }
  }

  std::map<std::pair<int, int>, std::vector<int>> edge_faces;
  for (std::size_t f = 0; f < raw.size(); ++f) {
    const auto& face = raw[f];
    for (std::size_t i = 0; i < face.size(); ++i)
      edge_faces[edge_key(face[i], face[(i + 1) % face.size()])].push_back(static_cast<int>(f));
  }
  for (const auto& [e, fs] : edge_faces) {
    if (fs.size() != 2 || fs[0] == fs[1])
      fail(ErrorCode::BadEdge, "edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                                   "} lies on " + std::to_string(fs.size()) + " face(s), expected 2");
  }

  const int vertex_count = max_id + 1;
  std::vector<std::vector<int>> incident(static_cast<std::size_t>(vertex_count));
  for (std::size_t f = 0; f < raw.size(); ++f)
    for (int v : raw[f]) incident[static_cast<std::size_t>(v)].push_back(static_cast<int>(f));
  std::vector<std::vector<int>> adjacency(static_cast<std::size_t>(vertex_count));
  for (const auto& [e, fs] : edge_faces) {
    adjacency[static_cast<std::size_t>(e.first)].push_back(e.second);
    adjacency[static_cast<std::size_t>(e.second)].push_back(e.first);
  }
  for (int v = 0; v < vertex_count; ++v) {
    const auto& inc = incident[static_cast<std::size_t>(v)];
    const auto& adj = adjacency[static_cast<std::size_t>(v)];
    if (inc.size() != 3 || adj.size() != 3)
      fail(ErrorCode::NotCubic, "vertex " + std::to_string(v) + " lies on " + std::to_string(inc.size()) +
                                    " face(s) and has degree " + std::to_string(adj.size()) + ", expected 3");
  }

  std::vector<bool> reached(static_cast<std::size_t>(vertex_count), false);
  std::vector<int> stack{0};
  reached[0] = true;
  int reached_count = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adjacency[static_cast<std::size_t>(v)]) {
      if (reached[static_cast<std::size_t>(w)]) continue;
      reached[static_cast<std::size_t>(w)] = true;
      ++reached_count;
      stack.push_back(w);
    }
  }
  if (reached_count != vertex_count)
    fail(ErrorCode::Disconnected, "1-skeleton has unreachable vertices (" + std::to_string(reached_count) + " of " +
                                      std::to_string(vertex_count) + " reached from vertex 0)");

  const int edges = static_cast<int>(edge_faces.size());
  const int faces = static_cast<int>(raw.size());
  if (vertex_count - edges + faces != 2)
    fail(ErrorCode::EulerViolation, "V - E + F = " + std::to_string(vertex_count - edges + faces) + ", expected 2");

  PlanarPolytope p;
  p.faces_ = std::move(raw);
  p.vertex_count_ = vertex_count;
  p.edges_.reserve(edge_faces.size());
  p.dual_adjacency_.resize(p.faces_.size());
  for (const auto& [e, fs] : edge_faces) {
    p.edges_.push_back(e);
    p.dual_adjacency_[static_cast<std::size_t>(fs[0])].push_back(fs[1]);
    p.dual_adjacency_[static_cast<std::size_t>(fs[1])].push_back(fs[0]);
  }
  for (auto& adj : p.dual_adjacency_) {
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
  }
  p.vertex_faces_.resize(static_cast<std::size_t>(vertex_count));
  for (int v = 0; v < vertex_count; ++v) {
    const auto& inc = incident[static_cast<std::size_t>(v)];
    p.vertex_faces_[static_cast<std::size_t>(v)] = {inc[0], inc[1], inc[2]};
  }
  for (auto& adj : adjacency) std::sort(adj.begin(), adj.end());
  p.vertex_adjacency_ = std::move(adjacency);
  return p;
}

FaceColoring FaceColoring::from_colors(std::vector<int> colors) {
  FaceColoring c;
  std::array<int, 3> counts{};
  for (int label : colors) ++counts[static_cast<std::size_t>(label - 1)];
  c.class_map = {1, 2, 3};
  std::stable_sort(c.class_map.begin(), c.class_map.end(),
                   [&](int a, int b) { return counts[static_cast<std::size_t>(a - 1)] < counts[static_cast<std::size_t>(b - 1)]; });
  for (std::size_t s = 0; s < 3; ++s) c.class_sizes[s] = counts[static_cast<std::size_t>(c.class_map[s] - 1)];
  c.color = std::move(colors);
  return c;
}

int FaceColoring::slot_of_color(int label) const {
  for (int s = 0; s < 3; ++s)
    if (class_map[static_cast<std::size_t>(s)] == label) return s;
  return -1;
}

std::vector<int> FaceColoring::faces_in_slot(int slot) const {
  std::vector<int> out;
  const int label = class_map[static_cast<std::size_t>(slot)];
  for (std::size_t f = 0; f < color.size(); ++f)
    if (color[f] == label) out.push_back(static_cast<int>(f));
  return out;
}

namespace {

// Backtracking over faces in input order with forward checking. A face may
// only open a new label (max used so far + 1), which enumerates each
// partition exactly once.
class ColoringSearch {
 public:
  explicit ColoringSearch(const PlanarPolytope& p) : adj_(p.dual_adjacency()), color_(adj_.size(), 0) {}

  std::vector<std::vector<int>> run() {
    std::vector<unsigned> domains(adj_.size(), 0b111u);
    search(0, 0, domains);
    return std::move(solutions_);
  }

 private:
  bool assign(std::size_t face, int label, std::vector<unsigned>& domains) {
    std::vector<std::size_t> queue{face};
    domains[face] = 1u << (label - 1);
    while (!queue.empty()) {
      const std::size_t f = queue.back();
      queue.pop_back();
      const unsigned bit = domains[f];
      for (int g : adj_[f]) {
        auto& d = domains[static_cast<std::size_t>(g)];
        if (!(d & bit)) continue;
        d &= ~bit;
        if (d == 0) return false;
        if ((d & (d - 1)) == 0) queue.push_back(static_cast<std::size_t>(g));
      }
    }
    return true;
  }

  void search(std::size_t face, int max_used, const std::vector<unsigned>& domains) {
    if (face == adj_.size()) {
      solutions_.push_back(color_);
      return;
    }
    const int limit = std::min(3, max_used + 1);
    for (int label = 1; label <= limit; ++label) {
      if (!(domains[face] & (1u << (label - 1)))) continue;
      std::vector<unsigned> next = domains;
      if (!assign(face, label, next)) continue;
      color_[face] = label;
      search(face + 1, std::max(max_used, label), next);
    }
    color_[face] = 0;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<int> color_;
  std::vector<std::vector<int>> solutions_;
};

}  // namespace

ColoringResult three_color(const PlanarPolytope& p) {
  auto solutions = ColoringSearch(p).run();
  if (solutions.empty()) fail(ErrorCode::NotThreeColorable, "faces admit no proper 3-coloring");
  ColoringResult result;
  for (auto& s : solutions) result.essential.push_back(FaceColoring::from_colors(std::move(s)));
  return result;
}

PlanarPolytope prism(int k) {
  if (k < 3) fail(ErrorCode::BadParameters, "prism needs a k-gon with k >= 3, got " + std::to_string(k));
  if (k % 2 != 0)
    fail(ErrorCode::OddPrism, "prism over a " + std::to_string(k) + "-gon is not 3-face-colorable");
  std::vector<FaceCycle> faces;
  FaceCycle top;
  FaceCycle bottom;
  for (int i = 0; i < k; ++i) top.push_back(i);
  bottom.push_back(k);
  for (int i = k - 1; i >= 1; --i) bottom.push_back(k + i);
  faces.push_back(top);
  faces.push_back(bottom);
  for (int i = 0; i < k; ++i) {
    const int j = (i + 1) % k;
    faces.push_back({i, k + i, k + j, j});
  }
  return PlanarPolytope::validate(std::move(faces));
}

PlanarPolytope truncated_octahedron() {
  // Vertices are the permutations of (0, +-1, +-2) in lexicographic order;
  // six square faces followed by eight hexagons.
  return PlanarPolytope::validate({
      {20, 21, 23, 22},
      {0, 2, 3, 1},
      {7, 15, 19, 14},
      {4, 8, 16, 9},
      {6, 11, 18, 13},
      {5, 12, 17, 10},
      {13, 18, 22, 23, 19, 15},
      {12, 14, 19, 23, 21, 17},
      {9, 16, 20, 22, 18, 11},
      {8, 10, 17, 21, 20, 16},
      {2, 6, 13, 15, 7, 3},
      {1, 3, 7, 14, 12, 5},
      {0, 4, 9, 11, 6, 2},
      {0, 1, 5, 10, 8, 4},
  });
}

PlanarPolytope catalog(std::string_view name, std::optional<int> parameter) {
  if (name == "prism") {
    if (!parameter) fail(ErrorCode::BadParameters, "prism requires a parameter, e.g. prism:6");
    return prism(*parameter);
  }
  if (parameter) fail(ErrorCode::BadParameters, std::string(name) + " takes no parameter");
  if (name == "cube") return prism(4);
  if (name == "truncated-octahedron") return truncated_octahedron();
  fail(ErrorCode::UnknownName, "unknown catalog entry '" + std::string(name) + "'");
}

PlanarPolytope catalog_spec(std::string_view spec) {
  const auto colon = spec.find(':');
  if (colon == std::string_view::npos) return catalog(spec);
  const auto value = spec.substr(colon + 1);
  int parameter = 0;
  const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parameter);
  if (ec != std::errc{} || ptr != value.data() + value.size())
    fail(ErrorCode::BadParameters, "catalog parameter '" + std::string(value) + "' is not an integer");
  return catalog(spec.substr(0, colon), parameter);
}

std::vector<std::string_view> catalog_names() { return {"prism", "cube", "truncated-octahedron"}; }

}  // namespace galehull
