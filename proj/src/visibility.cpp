#include "theta6/visibility.hpp"

#include <algorithm>

#include "theta6/errors.hpp"

namespace theta6 {

bool can_see(const Instance& inst, int u, int v) {
  if (inst.is_constraint(u, v)) return true;
  Segment s{inst.points[u], inst.points[v]};
  for (const auto& [a, b] : inst.constraints)
    if (properly_intersect(s, {inst.points[a], inst.points[b]})) return false;
  return true;
}

GeoGraph build_visibility_graph(const Instance& inst) {
  std::set<Edge> edges;
  for (int u = 0; u < inst.n(); ++u)
    for (int v = u + 1; v < inst.n(); ++v)
      if (can_see(inst, u, v)) edges.insert({u, v});
  return GeoGraph::from_edge_set(inst.n(), edges);
}

namespace {

bool segment_blocked(const Instance& inst, const Point& a, const Point& b) {
  for (const auto& [p, q] : inst.constraints) {
    if ((inst.points[p] == a && inst.points[q] == b) || (inst.points[p] == b && inst.points[q] == a))
      return false;  // is itself a constraint
    if (properly_intersect({a, b}, {inst.points[p], inst.points[q]})) return true;
  }
  return false;
}

// Monotone chain over points already known to be pairwise distinct; collinear
// hull-edge points are dropped (strict hull).
std::vector<Point> convex_hull(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end(), [](const Point& p, const Point& q) {
    int cx = cmp(p.x, q.x);
    return cx != 0 ? cx < 0 : p.y < q.y;
  });
  auto build = [&](auto begin, auto end) {
    std::vector<Point> h;
    for (auto it = begin; it != end; ++it) {
      while (h.size() >= 2 && orientation(h[h.size() - 2], h.back(), *it) != Orientation::Left)
        h.pop_back();
      h.push_back(*it);
    }
    return h;
  };
  std::vector<Point> lower = build(pts.begin(), pts.end());
  std::vector<Point> upper = build(pts.rbegin(), pts.rend());
  lower.pop_back();
  upper.pop_back();
  lower.insert(lower.end(), upper.begin(), upper.end());
  return lower;  // counterclockwise
}

}  // namespace

std::vector<Point> convex_chain(const Instance& inst, const Point& u, const Point& v, const Point& w) {
  if (orientation(u, v, w) == Orientation::Collinear)
    throw PreconditionViolated("convex_chain: u, v, w are collinear");
  if (segment_blocked(inst, u, w) || segment_blocked(inst, v, w))
    throw PreconditionViolated("convex_chain: uw or vw is not a visibility edge");
  // w must not anchor a constraint entering the open triangle
  for (int i = 0; i < inst.n(); ++i) {
    if (!(inst.points[i] == w)) continue;
    for (int z : inst.constraint_partners(i)) {
      const Point& pz = inst.points[z];
      bool inside_wedge = orientation(w, u, pz) == orientation(w, u, v) &&
                          orientation(w, v, pz) == orientation(w, v, u);
      if (inside_wedge)
        throw PreconditionViolated("convex_chain: constraint at w enters triangle interior");
    }
  }

  std::vector<Point> inside;
  for (const Point& p : inst.points) {
    if (p == u || p == v || p == w) continue;
    if (strictly_inside_triangle(u, v, w, p) || on_open_segment(u, v, p)) inside.push_back(p);
  }
  if (inside.empty()) return {u, v};

  bool all_on_uv = std::all_of(inside.begin(), inside.end(), [&](const Point& p) {
    return orientation(u, v, p) == Orientation::Collinear;
  });
  if (all_on_uv) {
    // degenerate hull: order along u -> v
    std::sort(inside.begin(), inside.end(), [&](const Point& p, const Point& q) {
      return dot(p - u, v - u) < dot(q - u, v - u);
    });
    std::vector<Point> chain{u};
    chain.insert(chain.end(), inside.begin(), inside.end());
    chain.push_back(v);
    return chain;
  }

  inside.push_back(u);
  inside.push_back(v);
  std::vector<Point> hull = convex_hull(std::move(inside));
  auto find = [&](const Point& p) {
    for (size_t i = 0; i < hull.size(); ++i)
      if (hull[i] == p) return i;
    throw PreconditionViolated("convex_chain: endpoint fell off its own hull");
  };
  size_t iu = find(u);
  size_t iv = find(v);
  size_t m = hull.size();
  std::vector<Point> chain;
  if ((iu + 1) % m == iv) {
    // edge u->v in ccw hull order; walk the other way round
    for (size_t i = iu;; i = (i + m - 1) % m) {
      chain.push_back(hull[i]);
      if (i == iv) break;
    }
  } else if ((iv + 1) % m == iu) {
    for (size_t i = iu;; i = (i + 1) % m) {
      chain.push_back(hull[i]);
      if (i == iv) break;
    }
  } else {
    throw PreconditionViolated("convex_chain: uv is not a hull edge");
  }
  return chain;
}

}  // namespace theta6
