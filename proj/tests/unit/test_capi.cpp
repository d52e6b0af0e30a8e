#include "doctest.h"

#include <cstring>
#include <string>

#include "galehull/galehull.h"
#include "json.hpp"

using Json = nlohmann::json;

namespace {

// Takes ownership of a string returned through the C API.
std::string take(char* s) {
  std::string out = s ? s : "";
  ghx_string_free(s);
  return out;
}

}  // namespace

TEST_CASE("catalog round trip through the C API") {
  ghx_polytope* p = nullptr;
  REQUIRE(ghx_polytope_from_catalog("prism:6", &p) == GHX_OK);
  char* text = nullptr;
  REQUIRE(ghx_polytope_faces_json(p, 0, &text) == GHX_OK);
  const std::string faces = take(text);

  ghx_polytope* q = nullptr;
  REQUIRE(ghx_polytope_from_json(faces.c_str(), &q) == GHX_OK);
  REQUIRE(ghx_polytope_report(q, 0, &text) == GHX_OK);
  auto report = Json::parse(take(text));
  CHECK(report["n"] == 6);
  CHECK(report["classSizes"] == Json::array({2, 3, 3}));
  ghx_polytope_free(q);

  ghx_analysis* a = nullptr;
  REQUIRE(ghx_analyze(p, &a) == GHX_OK);
  REQUIRE(ghx_analysis_report(a, 0, &text) == GHX_OK);
  auto analysis = Json::parse(take(text));
  CHECK(analysis["hull"]["type"] == "II");
  CHECK(analysis["hull"]["dim"] == 6);

  REQUIRE(ghx_verify(a, 0, &text) == GHX_OK);
  CHECK(Json::parse(take(text))["passed"] == true);

  REQUIRE(ghx_compare(a, a, 1, 0, &text) == GHX_OK);
  auto cmp = Json::parse(take(text));
  CHECK(cmp["equivalentByTheorem"] == true);
  CHECK(cmp["equivalentByOracle"] == true);

  REQUIRE(ghx_hamilton(p, 0, &text) == GHX_OK);
  CHECK(Json::parse(take(text))["length"] == 12);

  ghx_analysis_free(a);
  ghx_polytope_free(p);
}

TEST_CASE("errors carry codes and a structured message") {
  ghx_polytope* p = nullptr;
  CHECK(ghx_polytope_from_catalog("prism:5", &p) == GHX_E_ODD_PRISM);
  CHECK(p == nullptr);
  auto err = Json::parse(ghx_last_error());
  CHECK(err["error"] == "OddPrism");
  CHECK(err["module"] == "combinatorial-polytope");

  CHECK(ghx_polytope_from_json("{\"faces\": [[0,1,2],[0,3,1],[1,3,2],[0,2,3]]}", &p) == GHX_OK);
  ghx_analysis* a = nullptr;
  CHECK(ghx_analyze(p, &a) == GHX_E_NOT_THREE_COLORABLE);
  ghx_polytope_free(p);

  CHECK(ghx_polytope_from_json("not json", &p) == GHX_E_PARSE);
  CHECK(ghx_polytope_from_json(nullptr, &p) == GHX_E_INVALID_ARGUMENT);
  CHECK(ghx_polytope_from_catalog("cube", nullptr) == GHX_E_INVALID_ARGUMENT);

  CHECK(ghx_polytope_from_catalog("prism:16", &p) == GHX_OK);
  char* text = nullptr;
  CHECK(ghx_hamilton(p, 0, &text) == GHX_E_TOO_LARGE);
  ghx_polytope_free(p);
}

TEST_CASE("status names and exit codes") {
  CHECK(std::strcmp(ghx_status_name(GHX_OK), "OK") == 0);
  CHECK(ghx_status_exit_code(GHX_OK) == 0);
  CHECK(ghx_status_exit_code(GHX_E_NOT_CUBIC) == 2);
  CHECK(ghx_status_exit_code(GHX_E_CRITERION_MISMATCH) == 3);
  CHECK(ghx_status_exit_code(GHX_E_VERIFY_FAILED) == 3);
  CHECK(ghx_status_exit_code(GHX_E_TOO_LARGE) == 4);
  CHECK(ghx_status_exit_code(GHX_E_TOO_MANY_POINTS) == 4);
}

TEST_CASE("reports are deterministic") {
  ghx_polytope* p = nullptr;
  REQUIRE(ghx_polytope_from_catalog("cube", &p) == GHX_OK);
  std::string first;
  for (int i = 0; i < 3; ++i) {
    ghx_analysis* a = nullptr;
    REQUIRE(ghx_analyze(p, &a) == GHX_OK);
    char* text = nullptr;
    REQUIRE(ghx_analysis_report(a, GHX_PRETTY, &text) == GHX_OK);
    auto s = take(text);
    if (i == 0) first = s;
    CHECK(s == first);
    ghx_analysis_free(a);
  }
  ghx_polytope_free(p);
}
