#include "galehull/hamilton.hpp"

#include <algorithm>
#include <string>

#include "galehull/error.hpp"

namespace galehull {

namespace {

class CycleSearch {
 public:
  explicit CycleSearch(const std::vector<std::vector<int>>& adj)
      : adj_(adj), visited_(adj.size(), false) {}

  std::optional<std::vector<int>> run() {
    path_.push_back(0);
    visited_[0] = true;
    if (extend()) return path_;
    return std::nullopt;
  }

 private:
  bool closes(int v) const {
    const auto& a = adj_[static_cast<std::size_t>(v)];
    return std::find(a.begin(), a.end(), 0) != a.end();
  }

  // Every unvisited vertex still needs two usable neighbours: unvisited ones,
  // the path head, or the start vertex.
  bool feasible() const {
    const int head = path_.back();
    for (std::size_t v = 0; v < adj_.size(); ++v) {
      if (visited_[v]) continue;
      int usable = 0;
      for (int w : adj_[v])
        if (!visited_[static_cast<std::size_t>(w)] || w == head || w == 0) ++usable;
      if (usable < 2) return false;
    }
    return true;
  }

  bool extend() {
    if (path_.size() == adj_.size()) return closes(path_.back());
    for (int w : adj_[static_cast<std::size_t>(path_.back())]) {
      if (visited_[static_cast<std::size_t>(w)]) continue;
      visited_[static_cast<std::size_t>(w)] = true;
      path_.push_back(w);
      if (feasible() && extend()) return true;
      path_.pop_back();
      visited_[static_cast<std::size_t>(w)] = false;
    }
    return false;
  }

  const std::vector<std::vector<int>>& adj_;
  std::vector<bool> visited_;
  std::vector<int> path_;
};

}  // namespace

std::optional<std::vector<int>> hamiltonian_cycle(const PlanarPolytope& p) {
  if (p.vertex_count() > kMaxHamiltonVertices)
    throw Error(ErrorCode::TooLarge, "cli",
                std::to_string(p.vertex_count()) + " vertices exceeds the Hamiltonicity limit of " +
                    std::to_string(kMaxHamiltonVertices));
  return CycleSearch(p.vertex_adjacency()).run();
}

}  // namespace galehull
