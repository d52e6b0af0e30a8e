#pragma once

#include <algorithm>
#include <fstream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "galehull/face_lattice.hpp"
#include "galehull/polytope.hpp"
#include "galehull/rational.hpp"
#include "galehull/report.hpp"

#ifndef GALEHULL_TEST_DATA
#error "GALEHULL_TEST_DATA must point at tests/data"
#endif

namespace galehull::testing {

inline std::string data_path(const std::string& name) { return std::string(GALEHULL_TEST_DATA) + "/" + name; }

inline PlanarPolytope load(const std::string& name) {
  std::ifstream in(data_path(name));
  std::stringstream ss;
  ss << in.rdbuf();
  return report::parse_polytope(ss.str());
}

inline RationalPoint ints(std::initializer_list<long> xs) { return RationalPoint(xs.begin(), xs.end()); }

// Face lists with faces shuffled, each cycle rotated, and vertex ids permuted.
inline std::vector<FaceCycle> relabel(const std::vector<FaceCycle>& faces, int vertex_count, unsigned seed) {
  std::mt19937 rng(seed);
  std::vector<int> perm(static_cast<std::size_t>(vertex_count));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<FaceCycle> out;
  for (const auto& f : faces) {
    FaceCycle g;
    for (int v : f) g.push_back(perm[static_cast<std::size_t>(v)]);
    std::rotate(g.begin(), g.begin() + static_cast<long>(rng() % g.size()), g.end());
    out.push_back(std::move(g));
  }
  std::shuffle(out.begin(), out.end(), rng);
  return out;
}

// Face lattice as a canonical sorted list, for equality tests independent of storage.
inline std::vector<Face> canonical(const FaceLattice& l) {
  std::vector<Face> f = l.faces();
  std::sort(f.begin(), f.end());
  return f;
}

inline long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace galehull::testing
