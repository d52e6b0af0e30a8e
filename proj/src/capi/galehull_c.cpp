#include "galehull/galehull.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "galehull/analysis.hpp"
#include "galehull/error.hpp"
#include "galehull/hamilton.hpp"
#include "galehull/report.hpp"

struct ghx_polytope {
  galehull::PlanarPolytope value;
};

struct ghx_analysis {
  galehull::Analysis value;
};

namespace {

using galehull::Error;
using galehull::ErrorCode;
using galehull::report::Json;

thread_local std::string last_error;

ghx_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return GHX_E_PARSE;
    case ErrorCode::NotCubic: return GHX_E_NOT_CUBIC;
    case ErrorCode::BadEdge: return GHX_E_BAD_EDGE;
    case ErrorCode::EulerViolation: return GHX_E_EULER_VIOLATION;
    case ErrorCode::Disconnected: return GHX_E_DISCONNECTED;
    case ErrorCode::DegenerateFace: return GHX_E_DEGENERATE_FACE;
    case ErrorCode::NotThreeColorable: return GHX_E_NOT_THREE_COLORABLE;
    case ErrorCode::UnknownName: return GHX_E_UNKNOWN_NAME;
    case ErrorCode::OddPrism: return GHX_E_ODD_PRISM;
    case ErrorCode::BadParameters: return GHX_E_BAD_PARAMETERS;
    case ErrorCode::DimensionMismatch: return GHX_E_DIMENSION_MISMATCH;
    case ErrorCode::TheoremViolation: return GHX_E_THEOREM_VIOLATION;
    case ErrorCode::DiagramMismatch: return GHX_E_DIAGRAM_MISMATCH;
    case ErrorCode::CriterionMismatch: return GHX_E_CRITERION_MISMATCH;
    case ErrorCode::StructureMismatch: return GHX_E_STRUCTURE_MISMATCH;
    case ErrorCode::PointOutsideAffineHull: return GHX_E_POINT_OUTSIDE_AFFINE_HULL;
    case ErrorCode::DegenerateInput: return GHX_E_DEGENERATE_INPUT;
    case ErrorCode::TooManyPoints: return GHX_E_TOO_MANY_POINTS;
    case ErrorCode::TooLarge: return GHX_E_TOO_LARGE;
  }
  return GHX_E_INTERNAL;
}

void set_error(const std::string& code, const std::string& module, const std::string& message) {
  Json j;
  j["error"] = code;
  j["module"] = module;
  j["message"] = message;
  last_error = j.dump();
}

template <class F>
ghx_status guarded(F&& body) {
  last_error.clear();
  try {
    return body();
  } catch (const Error& e) {
    last_error = galehull::report::error_json(e).dump();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    set_error("OutOfMemory", "capi", "allocation failed");
    return GHX_E_INTERNAL;
  } catch (const std::exception& e) {
    set_error("Internal", "capi", e.what());
    return GHX_E_INTERNAL;
  }
}

ghx_status invalid(const char* what) {
  set_error("InvalidArgument", "capi", what);
  return GHX_E_INVALID_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

char* emit(const Json& j, int flags) { return dup_string((flags & GHX_PRETTY) ? j.dump(2) : j.dump()); }

}  // namespace

extern "C" {

const char* ghx_status_name(ghx_status status) {
  switch (status) {
    case GHX_OK: return "OK";
    case GHX_E_INVALID_ARGUMENT: return "InvalidArgument";
    case GHX_E_PARSE: return "ParseError";
    case GHX_E_NOT_CUBIC: return "NotCubic";
    case GHX_E_BAD_EDGE: return "BadEdge";
    case GHX_E_EULER_VIOLATION: return "EulerViolation";
    case GHX_E_DISCONNECTED: return "Disconnected";
    case GHX_E_DEGENERATE_FACE: return "DegenerateFace";
    case GHX_E_NOT_THREE_COLORABLE: return "NotThreeColorable";
    case GHX_E_UNKNOWN_NAME: return "UnknownName";
    case GHX_E_ODD_PRISM: return "OddPrism";
    case GHX_E_BAD_PARAMETERS: return "BadParameters";
    case GHX_E_DIMENSION_MISMATCH: return "DimensionMismatch";
    case GHX_E_THEOREM_VIOLATION: return "TheoremViolation";
    case GHX_E_DIAGRAM_MISMATCH: return "DiagramMismatch";
    case GHX_E_CRITERION_MISMATCH: return "CriterionMismatch";
    case GHX_E_STRUCTURE_MISMATCH: return "StructureMismatch";
    case GHX_E_POINT_OUTSIDE_AFFINE_HULL: return "PointOutsideAffineHull";
    case GHX_E_DEGENERATE_INPUT: return "DegenerateInput";
    case GHX_E_TOO_MANY_POINTS: return "TooManyPoints";
    case GHX_E_TOO_LARGE: return "TooLarge";
    case GHX_E_VERIFY_FAILED: return "VerifyFailed";
    case GHX_E_INTERNAL: return "Internal";
  }
  return "Unknown";
}

int ghx_status_exit_code(ghx_status status) {
  switch (status) {
    case GHX_OK: return 0;
    case GHX_E_PARSE:
    case GHX_E_NOT_CUBIC:
    case GHX_E_BAD_EDGE:
    case GHX_E_EULER_VIOLATION:
    case GHX_E_DISCONNECTED:
    case GHX_E_DEGENERATE_FACE:
    case GHX_E_NOT_THREE_COLORABLE:
    case GHX_E_UNKNOWN_NAME:
    case GHX_E_ODD_PRISM:
    case GHX_E_BAD_PARAMETERS:
    case GHX_E_INVALID_ARGUMENT:
      return 2;
    case GHX_E_THEOREM_VIOLATION:
    case GHX_E_DIAGRAM_MISMATCH:
    case GHX_E_CRITERION_MISMATCH:
    case GHX_E_STRUCTURE_MISMATCH:
    case GHX_E_VERIFY_FAILED:
      return 3;
    case GHX_E_TOO_MANY_POINTS:
    case GHX_E_TOO_LARGE:
      return 4;
    default:
      return 1;
  }
}

const char* ghx_last_error(void) { return last_error.c_str(); }

void ghx_string_free(char* s) { std::free(s); }

ghx_status ghx_polytope_from_json(const char* json, ghx_polytope** out) {
  if (!json || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ghx_polytope{galehull::report::parse_polytope(json)};
    return GHX_OK;
  });
}

ghx_status ghx_polytope_from_catalog(const char* spec, ghx_polytope** out) {
  if (!spec || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ghx_polytope{galehull::catalog_spec(spec)};
    return GHX_OK;
  });
}

void ghx_polytope_free(ghx_polytope* p) { delete p; }

ghx_status ghx_polytope_faces_json(const ghx_polytope* p, int flags, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = emit(galehull::report::faces_json(p->value), flags);
    return GHX_OK;
  });
}

ghx_status ghx_polytope_report(const ghx_polytope* p, int flags, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = emit(galehull::report::polytope_json(p->value, galehull::three_color(p->value)), flags);
    return GHX_OK;
  });
}

ghx_status ghx_catalog_names(int flags, char** out) {
  if (!out) return invalid("null argument");
  return guarded([&] {
    Json j;
    j["names"] = Json::array();
    for (auto n : galehull::catalog_names()) j["names"].push_back(std::string(n));
    *out = emit(j, flags);
    return GHX_OK;
  });
}

ghx_status ghx_analyze(const ghx_polytope* p, ghx_analysis** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = new ghx_analysis{galehull::analyze(p->value)};
    return GHX_OK;
  });
}

void ghx_analysis_free(ghx_analysis* a) { delete a; }

ghx_status ghx_analysis_report(const ghx_analysis* a, int flags, char** out) {
  if (!a || !out) return invalid("null argument");
  return guarded([&] {
    *out = emit(galehull::report::analysis_json(a->value), flags);
    return GHX_OK;
  });
}

ghx_status ghx_analysis_lattice(const ghx_analysis* a, int flags, char** out) {
  if (!a || !out) return invalid("null argument");
  return guarded([&] {
    *out = emit(galehull::report::lattice_json(a->value.primary().lattice), flags);
    return GHX_OK;
  });
}

ghx_status ghx_verify(const ghx_analysis* a, int flags, char** out) {
  if (!a || !out) return invalid("null argument");
  return guarded([&] {
    std::vector<galehull::VerifyReport> reports;
    for (const auto& h : a->value.hulls) reports.push_back(galehull::verify(h));
    const Json j = galehull::report::verify_json(reports);
    *out = emit(j, flags);
    if (!j["passed"].get<bool>()) {
      set_error("VerifyFailed", "hull-oracle", "oracle cross-check reported mismatches");
      return GHX_E_VERIFY_FAILED;
    }
    return GHX_OK;
  });
}

ghx_status ghx_compare(const ghx_analysis* a, const ghx_analysis* b, int use_oracle, int flags, char** out) {
  if (!a || !b || !out) return invalid("null argument");
  return guarded([&] {
    *out = emit(galehull::report::compare_json(galehull::compare(a->value, b->value, use_oracle != 0)), flags);
    return GHX_OK;
  });
}

ghx_status ghx_hamilton(const ghx_polytope* p, int flags, char** out) {
  if (!p || !out) return invalid("null argument");
  return guarded([&] {
    *out = emit(galehull::report::hamilton_json(p->value, galehull::hamiltonian_cycle(p->value)), flags);
    return GHX_OK;
  });
}

}  // extern "C"
