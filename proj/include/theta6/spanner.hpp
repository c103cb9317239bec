#pragma once

#include <map>
#include <optional>

#include "theta6/graph.hpp"
#include "theta6/visibility.hpp"

namespace theta6 {

// The constrained half-theta-6 graph: one edge per nonempty positive subcone
// of each vertex, to the closest visible vertex measured along the bisector
// of the original cone. Provenance records which (apex, positive subcone)
// pairs generated each edge; the degree-reduction stage needs it.
struct HalfThetaGraph {
  GeoGraph graph;
  std::map<Edge, std::vector<SubconeRef>> provenance;
};

// Closest visible vertex in or on the boundary of a positive subcone, by
// bisector projection onto the original cone. Unique when present: projection
// ties would violate general position.
std::optional<int> closest_visible_in_subcone(const Instance& inst, const SubconeRef& sc);

HalfThetaGraph build_half_theta6(const Instance& inst);  // throws InvalidInstance

}  // namespace theta6
