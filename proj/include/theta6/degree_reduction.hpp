#pragma once

#include <map>
#include <optional>

#include "theta6/spanner.hpp"

namespace theta6 {

// Canonical sequence of one negative subcone of `source`: its half-theta-6
// neighbors inside the subcone in counterclockwise order. closest_index picks
// the vertex with the smallest projection onto the bisector of the full cone.
struct CanonicalPathRecord {
  int source = -1;
  SubconeRef subcone;             // negative subcone of source
  std::vector<int> sequence;      // counterclockwise around source
  int closest_index = 0;

  int closest() const { return sequence[closest_index]; }
};

// Per (vertex, cone) charge counts mirroring the degree accounting: every
// G9 edge is charged at both endpoints, so the per-vertex total bounds its
// degree from above. Incident-constraint counts per cone ride along.
struct ChargeLedger {
  std::map<std::pair<int, ConeRef>, int> charge;
  std::map<std::pair<int, ConeRef>, int> incident_constraints;

  int charge_of(int v, const ConeRef& cone) const;
  int constraints_in(int v, const ConeRef& cone) const;
  int total(int v) const;
};

// One positive cone resolved by the G6 transformation. x is the endpoint
// whose edge to the center survives (and is the last vertex, away from the
// path source, on the center's own canonical path); y is the removed side.
struct TransformationStep {
  int center = -1;       // v: vertex whose positive cone was charged twice
  ConeRef cone;          // that positive cone
  int path_source = -1;  // u: vertex whose canonical path charged it
  int x = -1;
  int y = -1;
  Edge added;                        // xy
  Edge removed_type1;                // vy
  std::optional<Edge> removed_type2; // xw, when w sits unresolved in x's negative cone
  int w = -1;                        // x's unique neighbor along the center's canonical path
  SubconeRef x_record;               // the center's negative subcone whose path ends at x
};

std::vector<CanonicalPathRecord> canonical_paths(const Instance& inst, const HalfThetaGraph& ht);

// G9: for every canonical sequence, the path between consecutive vertices
// plus the edge from the source to the closest canonical vertex.
std::pair<GeoGraph, std::vector<CanonicalPathRecord>> build_g9(const Instance& inst,
                                                               const HalfThetaGraph& ht);

ChargeLedger compute_charges(const Instance& inst,
                             const std::vector<CanonicalPathRecord>& records);  // throws UnchargeableEdge

std::vector<TransformationStep> find_transformations(
    const Instance& inst, const HalfThetaGraph& ht,
    const std::vector<CanonicalPathRecord>& records);  // throws InconsistentState

// Applies all steps to the pristine G9 in one batch (simultaneous semantics)
// and asserts the no-conflict claims instead of assuming them.
GeoGraph build_g6(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g9,
                  const std::vector<TransformationStep>& steps);  // throws ConflictDetected

// Audit-only reproduction of the post-transformation charge bookkeeping; has
// no effect on any graph. After it, every positive cone is expected to carry
// at most c_i(v)+1 and every negative cone at most c_ibar(v)+1.
ChargeLedger recharged_ledger(const Instance& inst, const ChargeLedger& ledger,
                              const std::vector<CanonicalPathRecord>& records,
                              const std::vector<TransformationStep>& steps);

// True iff z is the closest canonical vertex in one of the (at most two)
// subcones of `cone` of v that contain it.
bool is_closest_canonical(const Instance& inst, const std::vector<CanonicalPathRecord>& records,
                          int v, const ConeRef& cone, int z);

}  // namespace theta6
