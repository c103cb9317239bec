#pragma once

#include <cmath>

#include "theta6/scalar.hpp"

namespace theta6 {

// Value a + b*sqrt(3). Closed under +,-,* and / (Q[sqrt(3)] is a field);
// signs are decided exactly. sqrt(3) shows up because cone boundary rays and
// bisectors lie at multiples of 30 degrees.
struct ExtScalar {
  Scalar a = 0;
  Scalar b = 0;

  ExtScalar() = default;
  ExtScalar(Scalar a_, Scalar b_) : a(std::move(a_)), b(std::move(b_)) {}
  explicit ExtScalar(Scalar rational) : a(std::move(rational)), b(0) {}
  ExtScalar(int value) : a(value), b(0) {}

  double to_double() const { return to_double_nearest(a) + to_double_nearest(b) * std::sqrt(3.0); }
};

// Exact sign of a + b*sqrt(3): when the parts disagree in sign, compare a^2
// against 3*b^2 with the appropriate bookkeeping.
int sign_of(const ExtScalar& v);

inline ExtScalar operator+(const ExtScalar& x, const ExtScalar& y) { return {x.a + y.a, x.b + y.b}; }
inline ExtScalar operator-(const ExtScalar& x, const ExtScalar& y) { return {x.a - y.a, x.b - y.b}; }
inline ExtScalar operator-(const ExtScalar& x) { return {-x.a, -x.b}; }
inline ExtScalar operator*(const ExtScalar& x, const ExtScalar& y) {
  return {x.a * y.a + 3 * x.b * y.b, x.a * y.b + x.b * y.a};
}
inline ExtScalar operator*(const Scalar& s, const ExtScalar& y) { return {s * y.a, s * y.b}; }
ExtScalar operator/(const ExtScalar& x, const ExtScalar& y);  // pre: y != 0

inline bool operator==(const ExtScalar& x, const ExtScalar& y) { return x.a == y.a && x.b == y.b; }
inline bool operator<(const ExtScalar& x, const ExtScalar& y) { return sign_of(x - y) < 0; }
inline bool operator<=(const ExtScalar& x, const ExtScalar& y) { return sign_of(x - y) <= 0; }

inline ExtScalar abs(const ExtScalar& v) { return sign_of(v) < 0 ? -v : v; }

template <class S>
struct Vec2 {
  S x{};
  S y{};
};

using Point = Vec2<Scalar>;
using ExtPoint = Vec2<ExtScalar>;

inline bool operator==(const Point& p, const Point& q) { return p.x == q.x && p.y == q.y; }

inline ExtPoint to_ext(const Point& p) { return {ExtScalar(p.x), ExtScalar(p.y)}; }

struct Segment {
  Point a;
  Point b;
};

enum class Orientation { Right = -1, Collinear = 0, Left = 1 };

template <class S>
S cross(const Vec2<S>& u, const Vec2<S>& v) {
  return u.x * v.y - u.y * v.x;
}
template <class S>
S dot(const Vec2<S>& u, const Vec2<S>& v) {
  return u.x * v.x + u.y * v.y;
}
template <class S>
Vec2<S> operator-(const Vec2<S>& u, const Vec2<S>& v) {
  return {u.x - v.x, u.y - v.y};
}

// Sign of the signed area of triangle pqr.
template <class S>
Orientation orientation(const Vec2<S>& p, const Vec2<S>& q, const Vec2<S>& r) {
  return static_cast<Orientation>(sign_of(cross(q - p, r - p)));
}

// True iff the open segments cross at exactly one interior point. Shared
// endpoints, T-junctions and collinear overlaps all return false.
bool properly_intersect(const Segment& s1, const Segment& s2);

bool on_open_segment(const Point& a, const Point& b, const Point& p);
bool strictly_inside_triangle(const Point& a, const Point& b, const Point& c, const Point& p);

// |pq| as a correctly rounded double. Used only in verification-time length
// sums and rendering, never in construction decisions.
double euclid_length_approx(const Point& p, const Point& q);

}  // namespace theta6
