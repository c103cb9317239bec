#include "theta6/geometry.hpp"

#include "theta6/errors.hpp"

namespace theta6 {

int sign_of(const ExtScalar& v) {
  int sa = sgn(v.a);
  int sb = sgn(v.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  int cmp = sgn(v.a * v.a - 3 * v.b * v.b);  // compares |a| against sqrt(3)|b|
  return sa > 0 ? cmp : -cmp;
}

ExtScalar operator/(const ExtScalar& x, const ExtScalar& y) {
  Scalar norm = y.a * y.a - 3 * y.b * y.b;  // zero only for y == 0
  if (norm == 0) throw Error("ExtScalar division by zero");
  return {(x.a * y.a - 3 * x.b * y.b) / norm, (x.b * y.a - x.a * y.b) / norm};
}

bool properly_intersect(const Segment& s1, const Segment& s2) {
  int d1 = static_cast<int>(orientation(s1.a, s1.b, s2.a));
  int d2 = static_cast<int>(orientation(s1.a, s1.b, s2.b));
  int d3 = static_cast<int>(orientation(s2.a, s2.b, s1.a));
  int d4 = static_cast<int>(orientation(s2.a, s2.b, s1.b));
  return d1 * d2 < 0 && d3 * d4 < 0;
}

bool on_open_segment(const Point& a, const Point& b, const Point& p) {
  if (p == a || p == b) return false;
  if (orientation(a, b, p) != Orientation::Collinear) return false;
  return sign_of(dot(p - a, b - a)) > 0 && sign_of(dot(p - b, a - b)) > 0;
}

bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c, const Point& p) {
  int o1 = static_cast<int>(orientation(a, b, p));
  int o2 = static_cast<int>(orientation(b, c, p));
  int o3 = static_cast<int>(orientation(c, a, p));
  return o1 != 0 && o1 == o2 && o2 == o3;
}

double euclid_length_approx(const Point& p, const Point& q) {
  Scalar dx = q.x - p.x;
  Scalar dy = q.y - p.y;
  return sqrt_to_double(dx * dx + dy * dy);
}

}  // namespace theta6
