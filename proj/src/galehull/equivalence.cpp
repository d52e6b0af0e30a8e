#include "galehull/equivalence.hpp"

#include "galehull/oracle.hpp"
#include "galehull/reference.hpp"

namespace galehull {

bool equivalent(const TypeReport& a, const FVector& pa, const TypeReport& b, const FVector& pb) {
  return pa.faces == pb.faces && a.type == b.type && a.m[1] == b.m[1];
}

OracleEquivalence equivalent_oracle(const IncidenceSystem& a, const IncidenceSystem& b) {
  OracleEquivalence out;
  if (a.hull_vertex_count() != b.hull_vertex_count()) return out;
  const FaceLattice la = oracle_lattice(a.vectors);
  const FaceLattice lb = oracle_lattice(b.vectors);
  if (la.dim() != lb.dim()) return out;
  out.bijection = lattice_isomorphic(la, lb);
  out.equivalent = out.bijection.has_value();
  return out;
}

}  // namespace galehull
