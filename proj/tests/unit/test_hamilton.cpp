#include "doctest.h"

#include <set>

#include "galehull/error.hpp"
#include "galehull/hamilton.hpp"
#include "support.hpp"

using namespace galehull;

namespace {

bool is_cycle(const PlanarPolytope& p, const std::vector<int>& c) {
  if (static_cast<int>(c.size()) != p.vertex_count()) return false;
  if (std::set<int>(c.begin(), c.end()).size() != c.size()) return false;
  std::set<std::pair<int, int>> edges;
  for (auto [u, v] : p.edges()) edges.insert({std::min(u, v), std::max(u, v)});
  for (std::size_t i = 0; i < c.size(); ++i) {
    int u = c[i], v = c[(i + 1) % c.size()];
    if (!edges.count({std::min(u, v), std::max(u, v)})) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cycles on the catalog") {
  for (auto p : {prism(4), prism(6), prism(8), truncated_octahedron(), testing::load("type1_m345.json")}) {
    auto c = hamiltonian_cycle(p);
    REQUIRE(c);
    CHECK(is_cycle(p, *c));
    CHECK(c->front() == 0);
  }
}

TEST_CASE("search is deterministic") { CHECK(hamiltonian_cycle(truncated_octahedron()) == hamiltonian_cycle(truncated_octahedron())); }

TEST_CASE("size limit") {
  try {
    hamiltonian_cycle(prism(16));
    FAIL("expected TooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::TooLarge);
  }
  CHECK(hamiltonian_cycle(prism(14)));
}
