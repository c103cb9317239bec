#pragma once

#include <vector>

#include "theta6/cones.hpp"
#include "theta6/graph.hpp"

namespace theta6 {

// Two vertices see each other iff the segment between them properly crosses
// no constraint, or is itself a constraint.
bool can_see(const Instance& inst, int u, int v);

// Vis(P,S): the complete graph minus edges properly crossed by a constraint.
// Direct O(n^2 |S|) evaluation; instances are desk scale.
GeoGraph build_visibility_graph(const Instance& inst);

// Convex chain of visibility edges from u to v inside triangle uvw, together
// with uw and wv bounding a polygon empty of vertices and constraints. The
// corners may be arbitrary rational points, not only instance vertices; the
// interior chain vertices always come from the instance.
//
// Preconditions (throws PreconditionViolated): uw and vw are not properly
// crossed by constraints, w is not the endpoint of a constraint entering the
// open triangle, and u, v, w are not collinear.
std::vector<Point> convex_chain(const Instance& inst, const Point& u, const Point& v, const Point& w);

}  // namespace theta6
