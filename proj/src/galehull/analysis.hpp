#pragma once

#include <optional>
#include <string>
#include <vector>

#include "galehull/equivalence.hpp"
#include "galehull/face_lattice.hpp"
#include "galehull/gale.hpp"
#include "galehull/polytope.hpp"
#include "galehull/reference.hpp"

namespace galehull {

// Everything computed about the hull for one coloring of P.
struct HullAnalysis {
  IncidenceSystem system;
  GaleDiagram gale;
  TypeReport type;
  FaceLattice lattice;
  std::vector<int> fvector;
  bool simplicial = false;
  int neighborly = 0;
};

HullAnalysis analyze_hull(const PlanarPolytope& p, const FaceColoring& c);

struct Analysis {
  PlanarPolytope polytope;
  ColoringResult coloring;
  std::vector<HullAnalysis> hulls;  // one per essential coloring, first coloring first

  const HullAnalysis& primary() const { return hulls.front(); }
};

// validate -> three_color -> per coloring: incidence system, dimension, Gale
// transform, classification, face enumeration.
Analysis analyze(const PlanarPolytope& p);

// The reference model predicted for the hull's type.
ReferenceLattice predicted_reference(const TypeReport& t);

struct Check {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct VerifyReport {
  std::string reference;
  std::vector<Check> checks;
  std::vector<Face> only_in_criterion;
  std::vector<Face> only_in_oracle;

  bool passed() const;
};

// Oracle cross-validation of one hull analysis.
VerifyReport verify(const HullAnalysis& h);

struct CompareResult {
  bool by_theorem = false;
  std::optional<OracleEquivalence> by_oracle;
};

CompareResult compare(const Analysis& a, const Analysis& b, bool use_oracle);

}  // namespace galehull
