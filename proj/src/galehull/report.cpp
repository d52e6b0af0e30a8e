#include "galehull/report.hpp"

#include "galehull/error.hpp"

namespace galehull::report {

PlanarPolytope parse_polytope(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, "combinatorial-polytope", std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("faces") || !doc["faces"].is_array())
    throw Error(ErrorCode::ParseError, "combinatorial-polytope", "expected an object with a \"faces\" array");
  std::vector<FaceCycle> faces;
  for (const auto& f : doc["faces"]) {
    if (!f.is_array()) throw Error(ErrorCode::ParseError, "combinatorial-polytope", "each face must be an array");
    FaceCycle cycle;
    for (const auto& v : f) {
      if (!v.is_number_integer())
        throw Error(ErrorCode::ParseError, "combinatorial-polytope", "vertex ids must be integers");
      cycle.push_back(v.get<int>());
    }
    faces.push_back(std::move(cycle));
  }
  return PlanarPolytope::validate(std::move(faces));
}

Json faces_json(const PlanarPolytope& p) {
  Json j;
  j["faces"] = p.faces();
  return j;
}

namespace {

Json sizes(const std::array<int, 3>& m) { return Json::array({m[0], m[1], m[2]}); }

Json point_json(const RationalPoint& p) {
  Json j = Json::array();
  for (const auto& x : p) j.push_back(x.to_string());
  return j;
}

}  // namespace

Json polytope_json(const PlanarPolytope& p, const ColoringResult& c) {
  const auto fv = p.fvector();
  Json j;
  j["n"] = p.n();
  j["fvector"] = Json::array({fv.vertices, fv.edges, fv.faces});
  j["colors"] = c.first().color;
  j["classSizes"] = sizes(c.first().class_sizes);
  j["essentialColorings"] = c.essential_count();
  return j;
}

Json hull_json(const HullAnalysis& h) {
  Json j;
  j["dim"] = h.type.dim;
  j["type"] = to_string(h.type.type);
  j["m"] = sizes(h.type.m);
  j["k"] = h.type.k ? Json(h.type.k->to_fraction_string()) : Json(nullptr);
  Json gale = Json::array();
  for (const auto& p : h.gale.points) {
    Json e;
    e["face"] = p.face;
    e["color"] = p.color;
    e["point"] = point_json(p.value);
    e["direction"] = point_json(p.direction);
    gale.push_back(std::move(e));
  }
  j["galeDiagram"] = std::move(gale);
  j["fvector"] = h.fvector;
  j["simplicial"] = h.simplicial;
  j["neighborly"] = h.neighborly;
  j["structure"] = h.type.structure;
  return j;
}

Json analysis_json(const Analysis& a) {
  Json j;
  j["polytope"] = polytope_json(a.polytope, a.coloring);
  j["hull"] = hull_json(a.primary());
  Json extra = Json::array();
  for (std::size_t i = 1; i < a.hulls.size(); ++i) {
    Json e;
    e["colors"] = a.coloring.essential[i].color;
    e["hull"] = hull_json(a.hulls[i]);
    extra.push_back(std::move(e));
  }
  j["additionalColorings"] = std::move(extra);
  return j;
}

Json lattice_json(const FaceLattice& l) {
  Json j;
  j["vertices"] = l.vertex_count();
  j["dim"] = l.dim();
  Json faces = Json::array();
  for (const auto& f : l.faces()) {
    Json e;
    e["vertices"] = members(f.vertices);
    e["dim"] = f.dim;
    faces.push_back(std::move(e));
  }
  j["faces"] = std::move(faces);
  return j;
}

namespace {

Json face_list(const std::vector<Face>& faces) {
  Json out = Json::array();
  for (const auto& f : faces) {
    Json e;
    e["vertices"] = members(f.vertices);
    e["dim"] = f.dim;
    out.push_back(std::move(e));
  }
  return out;
}

Json one_verify(const VerifyReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["reference"] = r.reference;
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    e["detail"] = c.detail;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (!r.only_in_criterion.empty() || !r.only_in_oracle.empty()) {
    j["diff"]["onlyInCriterion"] = face_list(r.only_in_criterion);
    j["diff"]["onlyInOracle"] = face_list(r.only_in_oracle);
  }
  return j;
}

}  // namespace

Json verify_json(const std::vector<VerifyReport>& reports) {
  Json j = one_verify(reports.front());
  bool all = reports.front().passed();
  Json extra = Json::array();
  for (std::size_t i = 1; i < reports.size(); ++i) {
    all = all && reports[i].passed();
    extra.push_back(one_verify(reports[i]));
  }
  j["passed"] = all;
  j["additionalColorings"] = std::move(extra);
  return j;
}

Json compare_json(const CompareResult& r) {
  Json j;
  j["equivalentByTheorem"] = r.by_theorem;
  if (r.by_oracle) {
    j["equivalentByOracle"] = r.by_oracle->equivalent;
    j["witnessBijection"] = r.by_oracle->bijection ? Json(*r.by_oracle->bijection) : Json(nullptr);
  } else {
    j["equivalentByOracle"] = "skipped";
    j["witnessBijection"] = nullptr;
  }
  return j;
}

Json hamilton_json(const PlanarPolytope& p, const std::optional<std::vector<int>>& cycle) {
  Json j;
  j["vertices"] = p.vertex_count();
  if (cycle) {
    j["cycle"] = *cycle;
    j["length"] = cycle->size();
  } else {
    j["cycle"] = "none";
    j["length"] = 0;
  }
  return j;
}

Json error_json(const Error& e) {
  Json j;
  j["error"] = std::string(to_string(e.code()));
  j["module"] = e.module();
  j["message"] = e.what();
  return j;
}

}  // namespace galehull::report
