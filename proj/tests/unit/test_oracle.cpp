#include "doctest.h"

#include <random>

#include "galehull/error.hpp"
#include "galehull/gale.hpp"
#include "galehull/linalg.hpp"
#include "galehull/oracle.hpp"
#include "galehull/reference.hpp"
#include "support.hpp"

using namespace galehull;
using galehull::testing::ints;

namespace {

std::vector<RationalPoint> octahedron() {
  std::vector<RationalPoint> pts;
  for (int i = 0; i < 3; ++i)
    for (long s : {1L, -1L}) {
      RationalPoint p(3, Rational(0));
      p[static_cast<std::size_t>(i)] = Rational(s);
      pts.push_back(p);
    }
  return pts;
}

IncidenceSystem system_of(const PlanarPolytope& p) { return incidence_system(p, three_color(p).first()); }

ErrorCode code_of(auto fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::ParseError;
}

// x -> A x + b with A invertible, entries small rationals.
std::vector<RationalPoint> random_affine_image(std::mt19937& rng, const std::vector<RationalPoint>& pts) {
  const std::size_t d = pts[0].size();
  std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
  linalg::RationalMatrix a(d, d);
  do {
    for (std::size_t r = 0; r < d; ++r)
      for (std::size_t c = 0; c < d; ++c) a(r, c) = Rational(num(rng), den(rng));
  } while (linalg::rank(a) < static_cast<int>(d));
  RationalPoint b;
  for (std::size_t i = 0; i < d; ++i) b.emplace_back(num(rng), den(rng));
  std::vector<RationalPoint> out;
  for (const auto& p : pts) {
    auto q = a * p;
    for (std::size_t i = 0; i < d; ++i) q[i] += b[i];
    out.push_back(q);
  }
  return out;
}

}  // namespace

TEST_CASE("octahedron") {
  auto l = oracle_lattice(octahedron());
  CHECK(fvector(l) == std::vector{6, 12, 8});
  CHECK(is_simplicial(l));
}

TEST_CASE("cube incidence vectors give the octahedron") {
  auto s = system_of(prism(4));
  auto l = oracle_lattice(s.vectors);
  CHECK(l.dim() == 3);
  CHECK(fvector(l) == std::vector{6, 12, 8});
  CHECK(lattice_isomorphic(l, oracle_lattice(octahedron())));
}

TEST_CASE("interior centroid is not a vertex") {
  std::vector<RationalPoint> pts{ints({0, 0}), ints({3, 0}), ints({0, 3}), ints({1, 1})};
  auto l = oracle_lattice(pts);
  CHECK(fvector(l) == std::vector{3, 3});
  CHECK_FALSE(l.has_face(1u << 3));
  CHECK(l.dim_of(full_set(4)) == 2);
}

TEST_CASE("facet hyperplanes are tight on their points and strict elsewhere") {
  for (auto p : {prism(4), prism(6), testing::load("type1_m345.json")}) {
    auto s = system_of(p);
    auto hull = oracle_hull(s.vectors);
    CHECK(hull.dim == hull_dimension(s));
    for (const auto& f : hull.facets)
      for (std::size_t i = 0; i < hull.projected.size(); ++i) {
        const auto v = linalg::dot(f.hyperplane.normal, hull.projected[i]);
        if (contains(f.points, 1u << i))
          CHECK(v == f.hyperplane.offset);
        else
          CHECK(v < f.hyperplane.offset);
      }
  }
}

TEST_CASE("oracle is invariant under permutation and affine maps") {
  std::mt19937 rng(41);
  std::vector<std::vector<RationalPoint>> inputs{octahedron(), system_of(prism(4)).vectors};
  {
    std::vector<RationalPoint> pyr{ints({0, 0, 0}), ints({2, 0, 0}), ints({2, 2, 0}), ints({0, 2, 0}), ints({1, 1, 3})};
    inputs.push_back(pyr);
  }
  for (const auto& pts : inputs) {
    auto base = oracle_lattice(pts);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<int> perm(pts.size());
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<RationalPoint> permuted(pts.size());
      for (std::size_t i = 0; i < pts.size(); ++i) permuted[static_cast<std::size_t>(perm[i])] = pts[i];
      CHECK(oracle_lattice(permuted) == base.relabeled(perm));
      CHECK(oracle_lattice(random_affine_image(rng, pts)) == base);
    }
  }
}

TEST_CASE("oracle input errors") {
  CHECK(code_of([] { oracle_lattice(std::vector<RationalPoint>{}); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] { oracle_lattice(std::vector<RationalPoint>{ints({1, 2}), ints({1, 2})}); }) == ErrorCode::DegenerateInput);
  CHECK(code_of([] {
          std::vector<RationalPoint> many;
          for (long i = 0; i < 27; ++i) many.push_back(ints({i, i * i}));
          oracle_lattice(many);
        }) == ErrorCode::TooManyPoints);
}

TEST_CASE("beyond facets") {
  std::vector<RationalPoint> tri{ints({0, 0}), ints({3, 0}), ints({0, 3})};
  CHECK(beyond_facets(ints({1, 1}), tri) == 0);
  CHECK(beyond_facets(ints({3, 3}), tri) == 1);
  CHECK(beyond_facets(ints({-1, -1}), tri) == 2);

  std::vector<RationalPoint> square{ints({0, 0, 0}), ints({2, 0, 0}), ints({2, 2, 0}), ints({0, 2, 0})};
  CHECK(code_of([&] { beyond_facets(ints({1, 1, 1}), square); }) == ErrorCode::PointOutsideAffineHull);
}

TEST_CASE("type I fixture: each middle-class vertex is beyond m2 - 1 facets of the rest") {
  auto s = system_of(testing::load("type1_m345.json"));
  const int m2 = s.coloring.class_sizes[1];
  for (int v : members(s.slot_set(1))) {
    std::vector<RationalPoint> rest;
    for (int i = 0; i < s.hull_vertex_count(); ++i)
      if (i != v) rest.push_back(s.vectors[static_cast<std::size_t>(i)]);
    CHECK(beyond_facets(s.vectors[static_cast<std::size_t>(v)], rest) == m2 - 1);
  }
}

TEST_CASE("pyramid structure") {
  auto check = [](const PlanarPolytope& p, int apexes) {
    auto s = system_of(p);
    auto t = classify(s, gale_transform(s));
    auto r = verify_pyramid_structure(s, t);
    CHECK(r.ok());
    CHECK(r.apex_vertices.size() == static_cast<std::size_t>(apexes));
  };
  check(prism(6), 2);
  check(truncated_octahedron(), 6);

  auto s = system_of(prism(4));
  auto t = classify(s, gale_transform(s));
  CHECK(code_of([&] { verify_pyramid_structure(s, t); }) == ErrorCode::BadParameters);
}
