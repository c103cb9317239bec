#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "theta6/geometry.hpp"

namespace theta6 {

// Six open 60-degree cones around every vertex, bounded by rays at multiples
// of 60 degrees from the positive x-axis. Counterclockwise from that axis the
// sequence is nC1, C0, nC2, C1, nC0, C2 (sectors 0..5), so positive cone C_i
// occupies sector 2i+1 and negative cone nC_i occupies sector (2i+4) mod 6.
enum class Polarity { Positive, Negative };

struct ConeRef {
  Polarity polarity = Polarity::Positive;
  int index = 0;  // mod 3

  int sector() const {
    return polarity == Polarity::Positive ? 2 * index + 1 : (2 * index + 4) % 6;
  }
  static ConeRef from_sector(int k);
  static ConeRef positive(int i) { return {Polarity::Positive, ((i % 3) + 3) % 3}; }
  static ConeRef negative(int i) { return {Polarity::Negative, ((i % 3) + 3) % 3}; }
  ConeRef opposite() const {
    return {polarity == Polarity::Positive ? Polarity::Negative : Polarity::Positive, index};
  }
  friend bool operator==(const ConeRef&, const ConeRef&) = default;
  friend auto operator<=>(const ConeRef&, const ConeRef&) = default;
};

std::string to_string(const ConeRef& c);

struct SubconeRef {
  int apex = -1;
  ConeRef cone;
  int j = 0;  // counterclockwise ordinal within the cone
  friend bool operator==(const SubconeRef&, const SubconeRef&) = default;
  friend auto operator<=>(const SubconeRef&, const SubconeRef&) = default;
};

std::string to_string(const SubconeRef& sc);

// One subcone with its bounding directions. A nullopt boundary is the cone's
// own ray (exclusive); a vertex id is a constraint-induced split (inclusive).
struct Subcone {
  SubconeRef ref;
  std::optional<int> lo_constraint;  // clockwise boundary
  std::optional<int> hi_constraint;  // counterclockwise boundary
};

struct Instance {
  std::vector<Point> points;
  std::vector<std::pair<int, int>> constraints;  // normalized u<v, sorted, unique

  int n() const { return static_cast<int>(points.size()); }
  bool is_constraint(int u, int v) const;
  std::vector<int> constraint_partners(int v) const;
  // Number of incident constraints at v (the paper's c(v)), and the count
  // restricted to one cone (c_i / c_ibar).
  int c_of(int v) const;
  int c_in_cone(int v, const ConeRef& cone) const;
};

struct Violation {
  enum class Kind { CoincidentPoints, RayParallelPair, CollinearTriple, CrossingConstraints };
  Kind kind;
  std::array<int, 4> ids{-1, -1, -1, -1};
  std::string describe() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

// Lists every coincident pair, 60-degree-multiple direction pair, collinear
// triple and properly crossing constraint pair. Never throws; builders refuse
// instances with a nonempty report.
ValidationReport validate_general_position(const Instance& inst);

// The triangle bounded by the rays of u's positive cone and the line through
// w perpendicular to the cone's bisector. corner_a is the counterclockwise
// ("upper left") corner, corner_b the clockwise one; both live in Q[sqrt(3)].
struct CanonicalTriangle {
  int apex = -1;
  int target = -1;
  ConeRef cone;
  Point apex_point;
  ExtPoint corner_a;
  ExtPoint corner_b;
  ExtScalar height;     // bisector projection of the target
  ExtScalar tan_alpha;  // exact tangent of the angle between uw and the bisector
  double alpha = 0;
};

// Sector classification of direction d; nullopt when d lies on a ray
// (including d == 0).
std::optional<int> maybe_sector(const Vec2<Scalar>& d);

ConeRef cone_of(const Point& u, const Point& p);  // throws DegenerateDirection
ConeRef cone_of(const Instance& inst, int u, int v);

std::vector<Subcone> subcones_of(const Instance& inst, int u, const ConeRef& cone);

// Closed subcone membership minus the cone's own open boundary: the 60-degree
// rays are exclusive, constraint-induced boundaries inclusive (a splitting
// constraint's endpoint lies in both adjacent subcones).
bool membership(const Instance& inst, const SubconeRef& sc, const Point& p);

// Distance from u to p's orthogonal projection on the cone's bisector.
ExtScalar bisector_projection(const Point& u, const ConeRef& cone, const Point& p);

CanonicalTriangle canonical_triangle(const Instance& inst, int u, int w);  // throws NotInPositiveCone

bool contains_point(const CanonicalTriangle& t, const Point& p);

// Unnormalized exact ray/bisector directions for sector k (and boundary ray k).
ExtPoint ray_direction(int k);
ExtPoint bisector_direction(int sector);

}  // namespace theta6
