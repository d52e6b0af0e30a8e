#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "galehull/error.hpp"
#include "galehull/gale.hpp"
#include "galehull/linalg.hpp"
#include "galehull/oracle.hpp"
#include "support.hpp"

using namespace galehull;
using galehull::testing::ints;

namespace {

struct Setup {
  PlanarPolytope p;
  IncidenceSystem s;
  GaleDiagram g;
  TypeReport t;
};

Setup setup(PlanarPolytope p) {
  auto c = three_color(p).first();
  auto s = incidence_system(p, c);
  auto g = gale_transform(s);
  auto t = classify(s, g);
  return {std::move(p), std::move(s), std::move(g), std::move(t)};
}

bool all_zero(const RationalPoint& v) {
  return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x.is_zero(); });
}

std::array<VertexSet, 3> slots(const IncidenceSystem& s) { return {s.slot_set(0), s.slot_set(1), s.slot_set(2)}; }

}  // namespace

TEST_CASE("incidence vectors of the cube") {
  auto x = setup(prism(4));
  CHECK(x.s.vectors[0] == ints({1, 1, 1, 1, 0, 0, 0, 0}));
  // faces 0 and 1 share a color
  RationalPoint sum(8, Rational(0));
  for (int f : {0, 1})
    for (std::size_t i = 0; i < 8; ++i) sum[i] += x.s.vectors[static_cast<std::size_t>(f)][i];
  CHECK(sum == RationalPoint(8, Rational(1)));
}

TEST_CASE("incidence invariants on the catalog") {
  for (auto p : {prism(4), prism(6), prism(8), truncated_octahedron(), testing::load("type1_m345.json")}) {
    auto c = three_color(p).first();
    auto s = incidence_system(p, c);
    const auto cols = static_cast<std::size_t>(p.vertex_count());
    CHECK(s.vectors.size() == static_cast<std::size_t>(p.n() + 2));
    for (int slot = 0; slot < 3; ++slot) {
      RationalPoint sum(cols, Rational(0));
      for (int f : c.faces_in_slot(slot))
        for (std::size_t i = 0; i < cols; ++i) sum[i] += s.vectors[static_cast<std::size_t>(f)][i];
      CHECK(sum == RationalPoint(cols, Rational(1)));
    }
    for (std::size_t i = 0; i < cols; ++i) {
      int colsum = 0;
      for (const auto& v : s.vectors) colsum += v[i] == Rational(1) ? 1 : 0;
      CHECK(colsum == 3);
    }
    CHECK(linalg::rank(linalg::RationalMatrix::from_rows(s.vectors)) == p.n());
  }
}

TEST_CASE("hull dimension follows the class pattern") {
  CHECK(hull_dimension(setup(prism(4)).s) == 3);
  CHECK(hull_dimension(setup(prism(6)).s) == 6);
  CHECK(hull_dimension(setup(prism(8)).s) == 8);
  CHECK(hull_dimension(setup(truncated_octahedron()).s) == 12);
  CHECK(hull_dimension(setup(testing::load("type1_m345.json")).s) == 10);
}

TEST_CASE("type from sizes") {
  CHECK(type_from_sizes({3, 4, 5}) == HullType::I);
  CHECK(type_from_sizes({2, 3, 3}) == HullType::II);
  CHECK(type_from_sizes({4, 4, 6}) == HullType::III);
  CHECK(type_from_sizes({2, 2, 2}) == HullType::IV);
}

TEST_CASE("Gale transform null space property") {
  for (auto p : {prism(4), prism(6), truncated_octahedron()}) {
    auto x = setup(p);
    // homogenized matrix: row of ones over the transposed incidence matrix
    const std::size_t cols = x.s.vectors.size();
    const std::size_t rows = x.s.vectors[0].size() + 1;
    linalg::RationalMatrix m(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      m(0, c) = Rational(1);
      for (std::size_t r = 1; r < rows; ++r) m(r, c) = x.s.vectors[c][r - 1];
    }
    for (const auto& b : x.g.basis) CHECK(all_zero(m * b));
    CHECK(x.g.points.size() == cols);
    CHECK(x.g.ambient_dim == static_cast<int>(cols) - hull_dimension(x.s) - 1);
  }
}

TEST_CASE("cube diagram: three rays of multiplicity two") {
  auto x = setup(prism(4));
  CHECK(x.g.ambient_dim == 2);
  std::map<RationalPoint, std::set<int>> rays;
  for (const auto& gp : x.g.points) rays[gp.direction].insert(gp.color);
  CHECK(rays.size() == 3);
  std::map<RationalPoint, int> mult;
  for (const auto& gp : x.g.points) ++mult[gp.direction];
  for (const auto& [dir, colors] : rays) {
    CHECK(colors.size() == 1);
    CHECK(mult[dir] == 2);
  }
  CHECK(relint_contains_zero(x.g.values()));
  CHECK(x.t.type == HullType::IV);
  CHECK(x.t.structure == "conv(w, 1-fold 3-pyramid over C(4,2))");
}

TEST_CASE("hexagonal prism diagram: 0 twice, +1 and -1 three times each") {
  auto x = setup(prism(6));
  CHECK(x.g.ambient_dim == 1);
  std::map<int, std::multiset<Rational>> by_slot;
  for (const auto& gp : x.g.points) by_slot[x.s.coloring.slot_of_color(gp.color)].insert(gp.direction[0]);
  CHECK(by_slot[0] == std::multiset<Rational>{0, 0});
  const Rational s = *by_slot[1].begin();
  CHECK((s == Rational(1) || s == Rational(-1)));
  CHECK(by_slot[1] == std::multiset<Rational>{s, s, s});
  CHECK(by_slot[2] == std::multiset<Rational>{-s, -s, -s});
  CHECK(x.t.type == HullType::II);
  CHECK(x.t.structure == "2-fold 6-pyramid over C(6,4)");
  CHECK_FALSE(x.t.k);
}

TEST_CASE("truncated octahedron classification") {
  auto x = setup(truncated_octahedron());
  CHECK(x.t.type == HullType::III);
  CHECK(x.t.m == std::array{4, 4, 6});
  CHECK(x.t.structure == "6-fold 12-pyramid over C(8,6)");
  int zeros = 0;
  for (const auto& gp : x.g.points) zeros += all_zero(gp.value);
  CHECK(zeros == 6);
}

TEST_CASE("type I fixture: values in ratio (1-k) : k : -1") {
  auto x = setup(testing::load("type1_m345.json"));
  CHECK(x.t.type == HullType::I);
  CHECK(x.t.m == std::array{3, 4, 5});
  REQUIRE(x.t.k);
  CHECK(*x.t.k == Rational(2));
  CHECK(x.t.dim == 10);
  std::array<std::set<Rational>, 3> values;
  for (const auto& gp : x.g.points) values[static_cast<std::size_t>(x.s.coloring.slot_of_color(gp.color))].insert(gp.value[0]);
  for (const auto& v : values) REQUIRE(v.size() == 1);
  const Rational a = *values[0].begin(), b = *values[1].begin(), c = *values[2].begin();
  // scale so the third class sits at -1
  CHECK(a / -c == Rational(1) - *x.t.k);
  CHECK(b / -c == *x.t.k);
  // affine dependence: the weighted values sum to zero
  CHECK(Rational(3) * a + Rational(4) * b + Rational(5) * c == Rational(0));
}

TEST_CASE("relint membership") {
  using P = std::vector<RationalPoint>;
  CHECK(relint_contains_zero(P{ints({1}), ints({-1})}));
  CHECK_FALSE(relint_contains_zero(P{ints({1}), ints({0})}));
  CHECK(relint_contains_zero(P{ints({0}), ints({0})}));
  CHECK_FALSE(relint_contains_zero(P{}));
  CHECK(relint_contains_zero(P{ints({1, 1}), ints({-1, 0}), ints({0, -1})}));
  // zero on an edge of the triangle: in the hull but not the interior
  CHECK_FALSE(relint_contains_zero(P{ints({1, 0}), ints({-1, 0}), ints({0, 1})}));
  // a segment through zero in the plane: relint is the open segment
  CHECK(relint_contains_zero(P{ints({2, 1}), ints({-2, -1})}));
  CHECK_FALSE(relint_contains_zero(P{ints({2, 1}), ints({1, 1})}));
  CHECK_THROWS_AS(relint_contains_zero(P{ints({1}), ints({1, 0})}), Error);
}

TEST_CASE("cube face queries by the coface criterion") {
  auto x = setup(prism(4));
  auto lattice = enumerate_faces(x.s, x.g, x.t);
  // faces 0 (top), 2 and 3 (adjacent sides) are pairwise non-opposite
  VertexSet corner = (1u << 0) | (1u << 2) | (1u << 3);
  CHECK(lattice.dim_of(corner) == 2);
  // top and bottom are opposite
  CHECK_FALSE(lattice.has_face((1u << 0) | (1u << 1)));
  CHECK(fvector(lattice) == std::vector{6, 12, 8});
}

TEST_CASE("closed form criteria are symmetric under swapping tied classes") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<VertexSet> pick(0, (1u << 14) - 1);
  for (auto p : {prism(4), prism(6), truncated_octahedron()}) {
    auto x = setup(p);
    auto sl = slots(x.s);
    const auto& m = x.t.m;
    std::array<VertexSet, 3> swapped = sl;
    if (m[1] == m[2]) std::swap(swapped[1], swapped[2]);
    if (m[0] == m[1]) std::swap(swapped[0], swapped[1]);
    const VertexSet full = full_set(x.s.hull_vertex_count());
    for (int i = 0; i < 2000; ++i) {
      VertexSet j = pick(rng) & full;
      CHECK(closed_form_is_face(x.t.type, sl, j) == closed_form_is_face(x.t.type, swapped, j));
    }
  }
}

TEST_CASE("criterion lattice equals oracle lattice") {
  for (auto p : {prism(4), prism(6), testing::load("type1_m345.json")}) {
    auto x = setup(p);
    auto ours = enumerate_faces(x.s, x.g, x.t);
    auto oracle = oracle_lattice(x.s.vectors);
    CHECK(testing::canonical(ours) == testing::canonical(oracle));
    CHECK(simpliciality_check(ours, x.t) == (x.t.type == HullType::I || x.t.type == HullType::IV));
  }
}

TEST_CASE("type II lattice: faces over the equal classes are base plus a proper apex subset") {
  auto x = setup(prism(6));
  auto l = enumerate_faces(x.s, x.g, x.t);
  const VertexSet base = x.s.slot_set(1) | x.s.slot_set(2);
  const VertexSet apex = x.s.slot_set(0);
  std::set<VertexSet> found, expected;
  for (const auto& f : l.faces())
    if (contains(f.vertices, base) && f.vertices != full_set(l.vertex_count())) found.insert(f.vertices);
  for (VertexSet a = apex;; a = (a - 1) & apex) {
    if (a != apex) expected.insert(base | a);
    if (a == 0) break;
  }
  CHECK(found == expected);
}

TEST_CASE("simpliciality and neighborliness per type") {
  for (auto p : {prism(4), prism(6), prism(8)}) {
    auto x = setup(p);
    auto l = enumerate_faces(x.s, x.g, x.t);
    const bool simplicial = x.t.type == HullType::I || x.t.type == HullType::IV;
    CHECK(is_simplicial(l) == simplicial);
    if (x.t.type == HullType::IV) CHECK(neighborliness(l) == x.t.m[1] - 1);
  }
}
