#include "theta6/spanner.hpp"

#include <algorithm>

#include "theta6/errors.hpp"

namespace theta6 {

namespace {

template <class SeesFn>
std::optional<int> closest_in_subcone(const Instance& inst, const SubconeRef& sc, SeesFn sees) {
  const Point& pu = inst.points[sc.apex];
  std::optional<int> best;
  ExtScalar best_proj;
  for (int v = 0; v < inst.n(); ++v) {
    if (v == sc.apex) continue;
    if (!membership(inst, sc, inst.points[v])) continue;
    if (!sees(sc.apex, v)) continue;
    ExtScalar proj = bisector_projection(pu, sc.cone, inst.points[v]);
    if (!best || sign_of(proj - best_proj) < 0) {
      best = v;
      best_proj = proj;
    }
  }
  return best;
}

}  // namespace

std::optional<int> closest_visible_in_subcone(const Instance& inst, const SubconeRef& sc) {
  return closest_in_subcone(inst, sc, [&](int u, int v) { return can_see(inst, u, v); });
}

HalfThetaGraph build_half_theta6(const Instance& inst) {
  ValidationReport report = validate_general_position(inst);
  if (!report.valid())
    throw InvalidInstance("instance violates general position: " +
                          report.violations.front().describe());
  GeoGraph vis = build_visibility_graph(inst);
  HalfThetaGraph ht;
  std::set<Edge> edges;
  for (int u = 0; u < inst.n(); ++u) {
    for (int i = 0; i < 3; ++i) {
      for (const Subcone& sub : subcones_of(inst, u, ConeRef::positive(i))) {
        auto v = closest_in_subcone(inst, sub.ref, [&](int a, int b) { return vis.has_edge(a, b); });
        if (!v) continue;
        Edge e = make_edge(u, *v);
        edges.insert(e);
        ht.provenance[e].push_back(sub.ref);
      }
    }
  }
  ht.graph = GeoGraph::from_edge_set(inst.n(), edges);
  return ht;
}

}  // namespace theta6
