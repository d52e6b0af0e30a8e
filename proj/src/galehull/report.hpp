#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "galehull/analysis.hpp"
#include "galehull/error.hpp"

namespace galehull::report {

using Json = nlohmann::ordered_json;

// Parses {"faces": [[int, ...], ...]} and validates it.
PlanarPolytope parse_polytope(std::string_view text);

Json faces_json(const PlanarPolytope& p);
Json polytope_json(const PlanarPolytope& p, const ColoringResult& c);
Json hull_json(const HullAnalysis& h);
Json analysis_json(const Analysis& a);
Json lattice_json(const FaceLattice& l);
Json verify_json(const std::vector<VerifyReport>& reports);
Json compare_json(const CompareResult& r);
Json hamilton_json(const PlanarPolytope& p, const std::optional<std::vector<int>>& cycle);
Json error_json(const Error& e);

}  // namespace galehull::report
