#include "theta6/degree_reduction.hpp"

#include <algorithm>

#include "theta6/errors.hpp"

namespace theta6 {

int ChargeLedger::charge_of(int v, const ConeRef& cone) const {
  auto it = charge.find({v, cone});
  return it == charge.end() ? 0 : it->second;
}

int ChargeLedger::constraints_in(int v, const ConeRef& cone) const {
  auto it = incident_constraints.find({v, cone});
  return it == incident_constraints.end() ? 0 : it->second;
}

int ChargeLedger::total(int v) const {
  int sum = 0;
  for (const auto& [key, count] : charge)
    if (key.first == v) sum += count;
  return sum;
}

namespace {

// An edge to a constraint endpoint v sitting on the boundary between two
// negative subcones of u belongs to the canonical path of the subcone that
// intersects the positive subcone of v whose closest visible vertex is u,
// i.e. the one on the same side of the constraint line.
bool paired_subcone_picked(const Instance& inst, int u, int v, int index, bool v_on_ccw_boundary) {
  for (const Subcone& s : subcones_of(inst, v, ConeRef::positive(index))) {
    const std::optional<int>& facing = v_on_ccw_boundary ? s.lo_constraint : s.hi_constraint;
    if (!facing || *facing != u) continue;
    auto pick = closest_visible_in_subcone(inst, s.ref);
    return pick && *pick == u;
  }
  return false;
}

}  // namespace

std::vector<CanonicalPathRecord> canonical_paths(const Instance& inst, const HalfThetaGraph& ht) {
  std::vector<CanonicalPathRecord> records;
  auto adj = ht.graph.adjacency();
  for (int u = 0; u < inst.n(); ++u) {
    const Point& pu = inst.points[u];
    for (int i = 0; i < 3; ++i) {
      ConeRef cone = ConeRef::negative(i);
      for (const Subcone& sub : subcones_of(inst, u, cone)) {
        CanonicalPathRecord rec;
        rec.source = u;
        rec.subcone = sub.ref;
        for (int v : adj[u]) {
          if (!membership(inst, sub.ref, inst.points[v])) continue;
          bool on_cw = sub.lo_constraint && *sub.lo_constraint == v;
          bool on_ccw = sub.hi_constraint && *sub.hi_constraint == v;
          if ((on_cw || on_ccw) && !paired_subcone_picked(inst, u, v, i, on_ccw)) continue;
          rec.sequence.push_back(v);
        }
        if (rec.sequence.empty()) continue;
        // ccw angular order around u, starting from the clockwise cone boundary
        std::sort(rec.sequence.begin(), rec.sequence.end(), [&](int a, int b) {
          return orientation(pu, inst.points[a], inst.points[b]) == Orientation::Left;
        });
        rec.closest_index = 0;
        ExtScalar best = bisector_projection(pu, cone, inst.points[rec.sequence[0]]);
        for (int k = 1; k < static_cast<int>(rec.sequence.size()); ++k) {
          ExtScalar proj = bisector_projection(pu, cone, inst.points[rec.sequence[k]]);
          if (sign_of(proj - best) < 0) {
            best = proj;
            rec.closest_index = k;
          }
        }
        records.push_back(std::move(rec));
      }
    }
  }
  return records;
}

std::pair<GeoGraph, std::vector<CanonicalPathRecord>> build_g9(const Instance& inst,
                                                               const HalfThetaGraph& ht) {
  std::vector<CanonicalPathRecord> records = canonical_paths(inst, ht);
  std::set<Edge> edges;
  for (const CanonicalPathRecord& rec : records) {
    for (size_t k = 1; k < rec.sequence.size(); ++k)
      edges.insert(make_edge(rec.sequence[k - 1], rec.sequence[k]));
    edges.insert(make_edge(rec.source, rec.closest()));
  }
  return {GeoGraph::from_edge_set(inst.n(), edges), std::move(records)};
}

namespace {

// The cone a path edge (endpoint -> other) is charged to, for a canonical
// path living in negative cone index i of its source. Edges never lie in
// C_i or nC_i of an endpoint; anything else is a construction bug.
ConeRef charge_target(const Instance& inst, int endpoint, int other, int i,
                      const CanonicalPathRecord& rec) {
  ConeRef c = cone_of(inst, endpoint, other);
  int plus = (i + 1) % 3;
  int minus = (i + 2) % 3;
  if (c == ConeRef::negative(plus) || c == ConeRef::negative(minus)) return ConeRef::positive(i);
  if (c == ConeRef::positive(plus)) return ConeRef::negative(minus);
  if (c == ConeRef::positive(minus)) return ConeRef::negative(plus);
  throw UnchargeableEdge("path edge " + std::to_string(endpoint) + "-" + std::to_string(other) +
                         " of record " + to_string(rec.subcone) + " lies in " + to_string(c));
}

}  // namespace

ChargeLedger compute_charges(const Instance& inst, const std::vector<CanonicalPathRecord>& records) {
  ChargeLedger ledger;
  for (int v = 0; v < inst.n(); ++v)
    for (int i = 0; i < 3; ++i)
      for (Polarity pol : {Polarity::Positive, Polarity::Negative}) {
        ConeRef cone{pol, i};
        int c = inst.c_in_cone(v, cone);
        if (c > 0) ledger.incident_constraints[{v, cone}] = c;
      }
  for (const CanonicalPathRecord& rec : records) {
    int i = rec.subcone.cone.index;
    ++ledger.charge[{rec.source, ConeRef::negative(i)}];
    ++ledger.charge[{rec.closest(), ConeRef::positive(i)}];
    for (size_t k = 1; k < rec.sequence.size(); ++k) {
      int a = rec.sequence[k - 1];
      int b = rec.sequence[k];
      ++ledger.charge[{a, charge_target(inst, a, b, i, rec)}];
      ++ledger.charge[{b, charge_target(inst, b, a, i, rec)}];
    }
  }
  return ledger;
}

bool is_closest_canonical(const Instance& inst, const std::vector<CanonicalPathRecord>& records,
                          int v, const ConeRef& cone, int z) {
  for (const CanonicalPathRecord& rec : records) {
    if (rec.source != v || rec.subcone.cone != cone) continue;
    if (std::find(rec.sequence.begin(), rec.sequence.end(), z) == rec.sequence.end()) continue;
    if (rec.closest() == z) return true;
  }
  return false;
}

namespace {

const CanonicalPathRecord* find_record_with(const std::vector<CanonicalPathRecord>& records,
                                            int source, const ConeRef& cone, int member) {
  for (const CanonicalPathRecord& rec : records) {
    if (rec.source != source || rec.subcone.cone != cone) continue;
    if (std::find(rec.sequence.begin(), rec.sequence.end(), member) != rec.sequence.end())
      return &rec;
  }
  return nullptr;
}

}  // namespace

std::vector<TransformationStep> find_transformations(const Instance& inst, const HalfThetaGraph& ht,
                                                     const std::vector<CanonicalPathRecord>& records) {
  std::vector<TransformationStep> steps;
  for (int v = 0; v < inst.n(); ++v) {
    for (int i = 0; i < 3; ++i) {
      ConeRef pos = ConeRef::positive(i);
      if (inst.c_in_cone(v, pos) != 0) continue;  // only unconstrained cones can be over-charged
      // The only candidate path source: the closest visible vertex of this
      // (single) positive subcone -- v lies on no other canonical path here.
      auto u = closest_visible_in_subcone(inst, SubconeRef{v, pos, 0});
      if (!u) continue;
      const CanonicalPathRecord* rec = find_record_with(records, *u, ConeRef::negative(i), v);
      if (!rec) continue;
      auto pos_in_seq = std::find(rec->sequence.begin(), rec->sequence.end(), v);
      int p = static_cast<int>(pos_in_seq - rec->sequence.begin());
      if (p == 0 || p + 1 == static_cast<int>(rec->sequence.size())) continue;
      int a = rec->sequence[p - 1];  // ccw-before v: candidate in nC_{i-1}
      int b = rec->sequence[p + 1];  // ccw-after v: candidate in nC_{i+1}
      ConeRef cone_a = cone_of(inst, v, a);
      ConeRef cone_b = cone_of(inst, v, b);
      if (cone_a != ConeRef::negative(i + 2) || cone_b != ConeRef::negative(i + 1))
        continue;  // not charged twice through the adjacent negative cones
      if (is_closest_canonical(inst, records, v, cone_a, a) ||
          is_closest_canonical(inst, records, v, cone_b, b))
        continue;  // resolved by re-charging alone, no structural step
      TransformationStep step;
      step.center = v;
      step.cone = pos;
      step.path_source = *u;
      // walk from v toward the closest canonical vertex: if that side is a,
      // remove vb and keep va, and symmetrically otherwise
      bool keep_a = rec->closest_index < p;
      step.x = keep_a ? a : b;
      step.y = keep_a ? b : a;
      step.added = make_edge(step.x, step.y);
      step.removed_type1 = make_edge(v, step.y);
      if (ht.graph.has_edge(step.x, step.y))
        throw InconsistentState("transformation at vertex " + std::to_string(v) +
                                " would add an existing half-theta-6 edge");
      // x ends v's own canonical path in the subcone containing it: no path
      // member can sit between x and the transformed positive cone (it would
      // lie in the empty triangle u-v-x or cross the edge xu). In the
      // ccw-adjacent cone nC_{i-1} that extreme is the ccw-first element; in
      // the cw-adjacent cone nC_{i+1} it is the ccw-last. w is x's neighbor.
      ConeRef xcone = keep_a ? cone_a : cone_b;
      bool x_at_back = !keep_a;
      const CanonicalPathRecord* xrec = nullptr;
      for (const CanonicalPathRecord& r : records) {
        if (r.source != v || r.subcone.cone != xcone) continue;
        if (r.sequence.empty()) continue;
        int end = x_at_back ? static_cast<int>(r.sequence.size()) - 1 : 0;
        if (r.sequence[end] == step.x) {
          xrec = &r;
          break;
        }
      }
      if (!xrec) {
        bool on_path = find_record_with(records, v, xcone, step.x) != nullptr;
        throw InconsistentState("vertex " + std::to_string(step.x) +
                                (on_path ? " does not end the canonical path of "
                                         : " is missing from the canonical paths of ") +
                                std::to_string(v) + " in " + to_string(xcone));
      }
      if (xrec->sequence.size() < 2)
        throw InconsistentState("canonical path of " + std::to_string(v) + " in " + to_string(xcone) +
                                " has no neighbor for vertex " + std::to_string(step.x));
      step.w = x_at_back ? xrec->sequence[xrec->sequence.size() - 2] : xrec->sequence[1];
      step.x_record = xrec->subcone;
      ConeRef wcone = cone_of(inst, step.x, step.w);
      if (wcone == ConeRef::negative(i) &&
          !is_closest_canonical(inst, records, step.x, wcone, step.w))
        step.removed_type2 = make_edge(step.x, step.w);
      steps.push_back(step);
    }
  }
  return steps;
}

GeoGraph build_g6(const Instance& inst, const HalfThetaGraph& ht, const GeoGraph& g9,
                  const std::vector<TransformationStep>& steps) {
  (void)ht;
  std::set<Edge> added;
  std::set<Edge> removed;
  for (const TransformationStep& step : steps) {
    added.insert(step.added);
    removed.insert(step.removed_type1);
    if (step.removed_type2) removed.insert(*step.removed_type2);
  }
  for (const Edge& e : added) {
    if (g9.has_edge(e.first, e.second))
      throw ConflictDetected("added edge " + std::to_string(e.first) + "-" +
                             std::to_string(e.second) + " already in G9");
    if (removed.count(e))
      throw ConflictDetected("edge " + std::to_string(e.first) + "-" + std::to_string(e.second) +
                             " both added and removed");
  }
  std::set<Edge> edges(g9.edges.begin(), g9.edges.end());
  for (const Edge& e : removed) edges.erase(e);
  for (const Edge& e : added) edges.insert(e);
  GeoGraph g6 = GeoGraph::from_edge_set(inst.n(), edges);
  for (const TransformationStep& step : steps)
    if (!g6.has_edge(step.center, step.x))
      throw ConflictDetected("surviving edge " + std::to_string(step.center) + "-" +
                             std::to_string(step.x) + " was removed by another step");
  return g6;
}

ChargeLedger recharged_ledger(const Instance& inst, const ChargeLedger& ledger,
                              const std::vector<CanonicalPathRecord>& records,
                              const std::vector<TransformationStep>& steps) {
  ChargeLedger out = ledger;
  auto uncharge_path_edge = [&](int endpoint, int other, int i, const CanonicalPathRecord& rec) {
    --out.charge[{endpoint, charge_target(inst, endpoint, other, i, rec)}];
  };
  // Structural steps: the removed edges drop their charges, the added edge xy
  // is charged to the cone of y that lost the type-1 charge and to the
  // positive cone of x facing v.
  std::set<std::pair<int, ConeRef>> resolved;
  for (const TransformationStep& step : steps) {
    int v = step.center;
    int i = step.cone.index;
    resolved.insert({v, step.cone});
    const CanonicalPathRecord* urec = find_record_with(records, step.path_source,
                                                       ConeRef::negative(i), v);
    if (!urec) continue;
    uncharge_path_edge(v, step.y, i, *urec);
    uncharge_path_edge(step.y, v, i, *urec);
    // vy at y was charged to a negative cone; xy takes its place there
    ++out.charge[{step.y, charge_target(inst, step.y, v, i, *urec)}];
    // at x, xy is charged to the positive cone with the index of cone_of(v,x)
    int m = cone_of(inst, v, step.x).index;
    ConeRef xpos = ConeRef::positive(m);
    if (step.removed_type2) {
      for (const CanonicalPathRecord& r : records) {
        if (r.subcone != step.x_record) continue;
        uncharge_path_edge(step.x, step.w, m, r);
        uncharge_path_edge(step.w, step.x, m, r);
        break;
      }
    } else if (cone_of(inst, step.x, step.w) == ConeRef::negative(i)) {
      // w closest canonical: xw was double-charged at x, drop the path charge
      --out.charge[{step.x, xpos}];
    }
    ++out.charge[{step.x, xpos}];
  }
  // Over-charged cones resolved by re-charging alone: drop the double-counted
  // path-edge charge for each neighbor that is a closest canonical vertex.
  for (int v = 0; v < inst.n(); ++v) {
    for (int i = 0; i < 3; ++i) {
      ConeRef pos = ConeRef::positive(i);
      if (resolved.count({v, pos})) continue;
      if (ledger.charge_of(v, pos) != 2 || inst.c_in_cone(v, pos) != 0) continue;
      auto u = closest_visible_in_subcone(inst, SubconeRef{v, pos, 0});
      if (!u) continue;
      const CanonicalPathRecord* rec = find_record_with(records, *u, ConeRef::negative(i), v);
      if (!rec) continue;
      auto it = std::find(rec->sequence.begin(), rec->sequence.end(), v);
      int p = static_cast<int>(it - rec->sequence.begin());
      if (p == 0 || p + 1 == static_cast<int>(rec->sequence.size())) continue;
      for (int nb : {rec->sequence[p - 1], rec->sequence[p + 1]}) {
        ConeRef nbcone = cone_of(inst, v, nb);
        if (nbcone.polarity != Polarity::Negative) continue;
        if (is_closest_canonical(inst, records, v, nbcone, nb)) --out.charge[{v, pos}];
      }
    }
  }
  return out;
}

}  // namespace theta6
