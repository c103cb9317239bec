#include "theta6/cones.hpp"

#include <algorithm>
#include <cmath>

#include "theta6/errors.hpp"

namespace theta6 {

ConeRef ConeRef::from_sector(int k) {
  k = ((k % 6) + 6) % 6;
  switch (k) {
    case 0: return negative(1);
    case 1: return positive(0);
    case 2: return negative(2);
    case 3: return positive(1);
    case 4: return negative(0);
    default: return positive(2);
  }
}

std::string to_string(const ConeRef& c) {
  return (c.polarity == Polarity::Positive ? "C" : "nC") + std::to_string(c.index);
}

std::string to_string(const SubconeRef& sc) {
  return "v" + std::to_string(sc.apex) + ":" + to_string(sc.cone) + "[" + std::to_string(sc.j) + "]";
}

bool Instance::is_constraint(int u, int v) const {
  auto e = std::minmax(u, v);
  return std::binary_search(constraints.begin(), constraints.end(),
                            std::make_pair(e.first, e.second));
}

std::vector<int> Instance::constraint_partners(int v) const {
  std::vector<int> out;
  for (const auto& [a, b] : constraints) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  return out;
}

int Instance::c_of(int v) const { return static_cast<int>(constraint_partners(v).size()); }

int Instance::c_in_cone(int v, const ConeRef& cone) const {
  int count = 0;
  for (int z : constraint_partners(v))
    if (cone_of(*this, v, z) == cone) ++count;
  return count;
}

ExtPoint ray_direction(int k) {
  // Ray at 60k degrees, scaled by 2: (2cos, 2sin) with sqrt(3) parts exact.
  switch (((k % 6) + 6) % 6) {
    case 0: return {ExtScalar(2), ExtScalar(0)};
    case 1: return {ExtScalar(1), ExtScalar(Scalar(0), Scalar(1))};
    case 2: return {ExtScalar(-1), ExtScalar(Scalar(0), Scalar(1))};
    case 3: return {ExtScalar(-2), ExtScalar(0)};
    case 4: return {ExtScalar(-1), ExtScalar(Scalar(0), Scalar(-1))};
    default: return {ExtScalar(1), ExtScalar(Scalar(0), Scalar(-1))};
  }
}

ExtPoint bisector_direction(int sector) {
  // Bisector of sector k lies at 60k + 30 degrees; scaled by 2.
  switch (((sector % 6) + 6) % 6) {
    case 0: return {ExtScalar(Scalar(0), Scalar(1)), ExtScalar(1)};
    case 1: return {ExtScalar(0), ExtScalar(2)};
    case 2: return {ExtScalar(Scalar(0), Scalar(-1)), ExtScalar(1)};
    case 3: return {ExtScalar(Scalar(0), Scalar(-1)), ExtScalar(-1)};
    case 4: return {ExtScalar(0), ExtScalar(-2)};
    default: return {ExtScalar(Scalar(0), Scalar(1)), ExtScalar(-1)};
  }
}

std::optional<int> maybe_sector(const Vec2<Scalar>& d) {
  int sy = sgn(d.y);
  if (sy == 0) return std::nullopt;  // on the 0/180 ray, or d == 0
  Scalar dx = d.x;
  Scalar dy = d.y;
  int base = 0;
  if (sy < 0) {
    dx = -dx;
    dy = -dy;
    base = 3;
  }
  // cross of the 60-degree ray (1, sqrt 3) with d: dy - sqrt(3) dx
  int e1 = sign_of(ExtScalar(dy, -dx));
  if (e1 == 0) return std::nullopt;
  if (e1 < 0) return base;
  // d is ccw of the 120-degree ray (-1, sqrt 3) iff dy + sqrt(3) dx < 0
  int e2 = sign_of(ExtScalar(dy, dx));
  if (e2 == 0) return std::nullopt;
  return base + (e2 < 0 ? 2 : 1);
}

ConeRef cone_of(const Point& u, const Point& p) {
  auto k = maybe_sector(p - u);
  if (!k)
    throw DegenerateDirection("direction from (" + format_rational(u.x) + "," + format_rational(u.y) +
                              ") to (" + format_rational(p.x) + "," + format_rational(p.y) +
                              ") lies on a cone ray");
  return ConeRef::from_sector(*k);
}

ConeRef cone_of(const Instance& inst, int u, int v) { return cone_of(inst.points[u], inst.points[v]); }

std::vector<Subcone> subcones_of(const Instance& inst, int u, const ConeRef& cone) {
  const Point& pu = inst.points[u];
  std::vector<int> splitters;
  for (int z : inst.constraint_partners(u))
    if (cone_of(inst, u, z) == cone) splitters.push_back(z);
  // counterclockwise by angle; within one cone a single cross test orders
  std::sort(splitters.begin(), splitters.end(), [&](int a, int b) {
    return orientation(pu, inst.points[a], inst.points[b]) == Orientation::Left;
  });
  std::vector<Subcone> out;
  int parts = static_cast<int>(splitters.size()) + 1;
  for (int j = 0; j < parts; ++j) {
    Subcone sc;
    sc.ref = SubconeRef{u, cone, j};
    if (j > 0) sc.lo_constraint = splitters[j - 1];
    if (j < parts - 1) sc.hi_constraint = splitters[j];
    out.push_back(sc);
  }
  return out;
}

bool membership(const Instance& inst, const SubconeRef& scref, const Point& p) {
  const Point& pu = inst.points[scref.apex];
  auto k = maybe_sector(p - pu);
  if (!k || ConeRef::from_sector(*k) != scref.cone) return false;
  auto subs = subcones_of(inst, scref.apex, scref.cone);
  if (scref.j < 0 || scref.j >= static_cast<int>(subs.size())) return false;
  const Subcone& sc = subs[scref.j];
  if (sc.lo_constraint) {
    // at or ccw of the clockwise splitting ray
    if (orientation(pu, inst.points[*sc.lo_constraint], p) == Orientation::Right) return false;
  }
  if (sc.hi_constraint) {
    if (orientation(pu, inst.points[*sc.hi_constraint], p) == Orientation::Left) return false;
  }
  return true;
}

ExtScalar bisector_projection(const Point& u, const ConeRef& cone, const Point& p) {
  Scalar dx = p.x - u.x;
  Scalar dy = p.y - u.y;
  // dot(d, unit bisector); the unit bisector of sector k is
  // (cos(60k+30), sin(60k+30)) whose entries are halves of {0, 1, sqrt 3}.
  switch (cone.sector()) {
    case 0: return {dy / 2, dx / 2};
    case 1: return ExtScalar(dy);
    case 2: return {dy / 2, -dx / 2};
    case 3: return {-dy / 2, -dx / 2};
    case 4: return ExtScalar(-dy);
    default: return {-dy / 2, dx / 2};
  }
}

CanonicalTriangle canonical_triangle(const Instance& inst, int u, int w) {
  const Point& pu = inst.points[u];
  const Point& pw = inst.points[w];
  ConeRef cone = cone_of(pu, pw);
  if (cone.polarity != Polarity::Positive)
    throw NotInPositiveCone("vertex " + std::to_string(w) + " lies in " + to_string(cone) +
                            " of vertex " + std::to_string(u));
  int k = cone.sector();
  CanonicalTriangle t;
  t.apex = u;
  t.target = w;
  t.cone = cone;
  t.apex_point = pu;
  t.height = bisector_projection(pu, cone, pw);
  // Corner on boundary ray r (unit direction) sits at distance 2h/sqrt(3)
  // from the apex: corner = u + h * (2/sqrt(3)) * unit(r).
  ExtScalar scale = t.height * ExtScalar(Scalar(0), Scalar(2, 3));  // h * (2 sqrt(3) / 3)
  auto corner_on = [&](int ray) {
    ExtPoint r = ray_direction(ray);  // 2 * unit direction
    ExtScalar half(Scalar(1, 2));
    return ExtPoint{ExtScalar(pu.x) + scale * (half * r.x), ExtScalar(pu.y) + scale * (half * r.y)};
  };
  t.corner_b = corner_on(k);      // clockwise boundary, "upper right"
  t.corner_a = corner_on(k + 1);  // counterclockwise boundary, "upper left"
  Vec2<Scalar> d = pw - pu;
  ExtPoint bis = bisector_direction(k);
  ExtPoint de = {ExtScalar(d.x), ExtScalar(d.y)};
  t.tan_alpha = abs(cross(bis, de)) / dot(bis, de);
  t.alpha = std::atan(t.tan_alpha.to_double());
  return t;
}

bool contains_point(const CanonicalTriangle& t, const Point& p) {
  Vec2<Scalar> d = p - t.apex_point;
  ExtPoint de = {ExtScalar(d.x), ExtScalar(d.y)};
  int k = t.cone.sector();
  if (sign_of(cross(ray_direction(k), de)) < 0) return false;      // cw of the cw boundary
  if (sign_of(cross(ray_direction(k + 1), de)) > 0) return false;  // ccw of the ccw boundary
  ExtScalar proj = bisector_projection(t.apex_point, t.cone, p);
  return sign_of(proj - t.height) <= 0;
}

namespace {

std::string point_str(const Instance& inst, int i) {
  return "p" + std::to_string(i) + "=(" + format_rational(inst.points[i].x) + "," +
         format_rational(inst.points[i].y) + ")";
}

}  // namespace

std::string Violation::describe() const {
  switch (kind) {
    case Kind::CoincidentPoints:
      return "coincident points " + std::to_string(ids[0]) + "," + std::to_string(ids[1]);
    case Kind::RayParallelPair:
      return "direction of pair " + std::to_string(ids[0]) + "," + std::to_string(ids[1]) +
             " is a multiple of 60 degrees";
    case Kind::CollinearTriple:
      return "collinear triple " + std::to_string(ids[0]) + "," + std::to_string(ids[1]) + "," +
             std::to_string(ids[2]);
    case Kind::CrossingConstraints:
      return "constraints " + std::to_string(ids[0]) + "-" + std::to_string(ids[1]) + " and " +
             std::to_string(ids[2]) + "-" + std::to_string(ids[3]) + " properly cross";
  }
  return "";
}

ValidationReport validate_general_position(const Instance& inst) {
  ValidationReport report;
  int n = inst.n();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (inst.points[i] == inst.points[j]) {
        report.violations.push_back({Violation::Kind::CoincidentPoints, {i, j, -1, -1}});
        continue;
      }
      Vec2<Scalar> d = inst.points[j] - inst.points[i];
      // parallel to one of the three ray directions (1,0), (1,sqrt 3), (-1,sqrt 3)
      bool on_ray = d.y == 0 || sign_of(ExtScalar(d.y, -d.x)) == 0 || sign_of(ExtScalar(d.y, d.x)) == 0;
      if (on_ray) report.violations.push_back({Violation::Kind::RayParallelPair, {i, j, -1, -1}});
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (inst.points[i] == inst.points[j]) continue;
      for (int k = j + 1; k < n; ++k)
        if (orientation(inst.points[i], inst.points[j], inst.points[k]) == Orientation::Collinear)
          report.violations.push_back({Violation::Kind::CollinearTriple, {i, j, k, -1}});
    }
  for (size_t a = 0; a < inst.constraints.size(); ++a)
    for (size_t b = a + 1; b < inst.constraints.size(); ++b) {
      auto [p, q] = inst.constraints[a];
      auto [r, s] = inst.constraints[b];
      if (properly_intersect({inst.points[p], inst.points[q]}, {inst.points[r], inst.points[s]}))
        report.violations.push_back({Violation::Kind::CrossingConstraints, {p, q, r, s}});
    }
  return report;
}

}  // namespace theta6
