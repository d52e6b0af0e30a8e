#include "doctest.h"

#include "galehull/analysis.hpp"
#include "galehull/equivalence.hpp"
#include "support.hpp"

using namespace galehull;

namespace {

TypeReport fake(HullType type, std::array<int, 3> m) {
  TypeReport t;
  t.type = type;
  t.m = m;
  return t;
}

}  // namespace

TEST_CASE("criterion on hand-made reports") {
  const FVector f8{12, 18, 8};
  CHECK(equivalent(fake(HullType::II, {2, 3, 3}), f8, fake(HullType::II, {2, 3, 3}), f8));
  // same face count, same m2, different type
  CHECK_FALSE(equivalent(fake(HullType::II, {3, 3, 3}), f8, fake(HullType::III, {3, 3, 4}), f8));
  CHECK_FALSE(equivalent(fake(HullType::II, {2, 3, 3}), f8, fake(HullType::IV, {2, 2, 2}), FVector{8, 12, 6}));
  CHECK_FALSE(equivalent(fake(HullType::I, {2, 3, 5}), f8, fake(HullType::I, {2, 4, 4}), f8));
}

TEST_CASE("relabeled copies are equivalent both ways") {
  for (auto p : {prism(4), prism(6)}) {
    auto q = PlanarPolytope::validate(testing::relabel(p.faces(), p.vertex_count(), 99));
    auto a = analyze(p), b = analyze(q);
    auto r = compare(a, b, true);
    CHECK(r.by_theorem);
    REQUIRE(r.by_oracle);
    CHECK(r.by_oracle->equivalent);
    REQUIRE(r.by_oracle->bijection);
  }
}

TEST_CASE("prism file relabeling") {
  auto a = analyze(prism(6));
  auto b = analyze(testing::load("prism6_relabeled.json"));
  auto r = compare(a, b, true);
  CHECK(r.by_theorem);
  CHECK(r.by_oracle->equivalent);
}

TEST_CASE("distinct catalog hulls") {
  auto cube = analyze(prism(4)), hex = analyze(prism(6)), oct = analyze(prism(8));
  auto r = compare(cube, hex, true);
  CHECK_FALSE(r.by_theorem);
  CHECK_FALSE(r.by_oracle->equivalent);
  r = compare(hex, oct, true);
  CHECK_FALSE(r.by_theorem);
  CHECK_FALSE(r.by_oracle->equivalent);
  r = compare(hex, oct, false);
  CHECK_FALSE(r.by_oracle);
}

TEST_CASE("criterion agrees with the oracle, and is an equivalence relation") {
  std::vector<Analysis> all;
  for (auto p : {prism(4), prism(6), prism(8), testing::load("type1_m345.json")}) {
    all.push_back(analyze(p));
    all.push_back(analyze(PlanarPolytope::validate(testing::relabel(p.faces(), p.vertex_count(), 5))));
  }
  std::vector<std::vector<bool>> eq(all.size(), std::vector<bool>(all.size()));
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = 0; j < all.size(); ++j) {
      auto r = compare(all[i], all[j], true);
      CHECK(r.by_theorem == r.by_oracle->equivalent);
      eq[i][j] = r.by_theorem;
    }
  for (std::size_t i = 0; i < all.size(); ++i) {
    CHECK(eq[i][i]);
    for (std::size_t j = 0; j < all.size(); ++j) {
      CHECK(eq[i][j] == eq[j][i]);
      for (std::size_t k = 0; k < all.size(); ++k)
        if (eq[i][j] && eq[j][k]) CHECK(eq[i][k]);
    }
  }
}
