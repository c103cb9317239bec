#include <doctest.h>

#include <random>

#include "theta6/cones.hpp"
#include "theta6/errors.hpp"
#include "theta6/instance_io.hpp"

using namespace theta6;

namespace {
Point pt(long x, long y) { return {Scalar(x), Scalar(y)}; }
Instance make_inst(std::vector<Point> pts, std::vector<std::pair<int, int>> cons = {}) {
  Instance inst;
  inst.points = std::move(pts);
  for (auto [a, b] : cons) inst.constraints.push_back(make_edge(a, b));
  std::sort(inst.constraints.begin(), inst.constraints.end());
  return inst;
}
}  // namespace

TEST_CASE("cone_of classifies the six sectors") {
  Point u = pt(0, 0);
  CHECK(cone_of(u, pt(1, 2)) == ConeRef::positive(0));    // ~63 degrees
  CHECK(cone_of(u, pt(-1, -2)) == ConeRef::negative(0));  // ~243 degrees
  CHECK(cone_of(u, pt(2, 1)) == ConeRef::negative(1));    // ~27 degrees
  CHECK(cone_of(u, pt(-2, 1)) == ConeRef::negative(2));
  CHECK(cone_of(u, pt(-2, -1)) == ConeRef::positive(1));
  CHECK(cone_of(u, pt(2, -1)) == ConeRef::positive(2));
  CHECK_THROWS_AS(cone_of(u, pt(5, 0)), DegenerateDirection);
}

TEST_CASE("cone duality: v in C_i of u iff u in nC_i of v") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 800; ++i) {
    Point u = pt(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 2001) - 1000);
    Point v = pt(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 2001) - 1000);
    if (u.y == v.y) continue;
    ConeRef cu = cone_of(u, v);
    ConeRef cv = cone_of(v, u);
    CHECK(cu.index == cv.index);
    CHECK(cu.polarity != cv.polarity);
  }
}

TEST_CASE("positive cones have the stated clockwise and counterclockwise negative neighbors") {
  // sector arithmetic: C_i at sector 2i+1, clockwise next is nC_{i+1},
  // counterclockwise next is nC_{i-1}
  for (int i = 0; i < 3; ++i) {
    ConeRef pos = ConeRef::positive(i);
    CHECK(ConeRef::from_sector(pos.sector() - 1) == ConeRef::negative(i + 1));
    CHECK(ConeRef::from_sector(pos.sector() + 1) == ConeRef::negative(i + 2));  // i-1 mod 3
  }
}

TEST_CASE("validate_general_position reports each violation kind") {
  CHECK(validate_general_position(make_inst({pt(0, 0), pt(1, 2)})).valid());
  {
    auto report = validate_general_position(make_inst({pt(0, 0), pt(2, 0)}));
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0].kind == Violation::Kind::RayParallelPair);
  }
  {
    auto report = validate_general_position(make_inst({pt(0, 0), pt(1, 1), pt(2, 2)}));
    bool found = false;
    for (const auto& v : report.violations)
      if (v.kind == Violation::Kind::CollinearTriple) found = true;
    CHECK(found);
  }
  {
    auto report = validate_general_position(make_inst({pt(0, 0), pt(0, 3)}));
    CHECK(report.valid());  // vertical is a bisector, not a ray
  }
  {
    auto report = validate_general_position(make_inst({pt(1, 2), pt(1, 2)}));
    REQUIRE(!report.valid());
    CHECK(report.violations[0].kind == Violation::Kind::CoincidentPoints);
  }
  {
    auto report = validate_general_position(
        make_inst({pt(0, 0), pt(2, 2), pt(0, 3), pt(2, 1)}, {{0, 1}, {2, 3}}));
    REQUIRE(!report.valid());
    CHECK(report.violations[0].kind == Violation::Kind::CrossingConstraints);
  }
}

TEST_CASE("subcones: unsplit cone is a single subcone") {
  Instance inst = make_inst({pt(0, 0), pt(1, 2)});
  auto subs = subcones_of(inst, 0, ConeRef::positive(0));
  REQUIRE(subs.size() == 1);
  CHECK(!subs[0].lo_constraint);
  CHECK(!subs[0].hi_constraint);
}

TEST_CASE("subcones: incident constraint splits and its endpoint lies in both") {
  Instance inst = make_inst({pt(0, 0), pt(1, 2)}, {{0, 1}});
  auto subs = subcones_of(inst, 0, ConeRef::positive(0));
  REQUIRE(subs.size() == 2);
  CHECK(membership(inst, subs[0].ref, pt(1, 2)));
  CHECK(membership(inst, subs[1].ref, pt(1, 2)));
  // strictly clockwise of the split: only the first subcone
  CHECK(membership(inst, subs[0].ref, pt(7, 13)));
  CHECK(!membership(inst, subs[1].ref, pt(7, 13)));
  // strictly counterclockwise: only the second
  CHECK(!membership(inst, subs[0].ref, pt(-1, 3)));
  CHECK(membership(inst, subs[1].ref, pt(-1, 3)));
}

TEST_CASE("subcones: two interior constraints make three parts, ordered ccw") {
  Instance inst = make_inst({pt(0, 0), pt(1, 2), pt(-1, 3)}, {{0, 1}, {0, 2}});
  auto subs = subcones_of(inst, 0, ConeRef::positive(0));
  REQUIRE(subs.size() == 3);
  CHECK(*subs[0].hi_constraint == 1);
  CHECK(*subs[1].lo_constraint == 1);
  CHECK(*subs[1].hi_constraint == 2);
  CHECK(*subs[2].lo_constraint == 2);
}

TEST_CASE("membership: full cone subcone, boundaries exclusive") {
  Instance inst = make_inst({pt(0, 0), pt(1, 2)});
  SubconeRef sc{0, ConeRef::positive(0), 0};
  CHECK(membership(inst, sc, pt(1, 2)));
  CHECK(!membership(inst, sc, pt(2, 1)));   // lies in nC1
  CHECK(!membership(inst, sc, pt(0, 0)));   // the apex itself
  CHECK(!membership(inst, sc, pt(3, 0)));   // on the 0-degree ray
}

TEST_CASE("bisector projection examples") {
  Point u = pt(0, 0);
  CHECK(bisector_projection(u, ConeRef::positive(0), pt(1, 2)) == ExtScalar(2));
  CHECK(bisector_projection(u, ConeRef::positive(0), pt(-2, 3)) == ExtScalar(3));
  // C2 bisector at 330 degrees: dot((3,-1), (sqrt3/2,-1/2)) = (3 sqrt3 + 1)/2
  CHECK(bisector_projection(u, ConeRef::positive(2), pt(3, -1)) ==
        ExtScalar{Scalar(1, 2), Scalar(3, 2)});
}

TEST_CASE("no projection ties on valid instances") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 50; ++trial) {
    InstanceFile f = generate_instance({rng(), 12, 0, 500});
    const Instance& inst = f.instance;
    for (int i = 0; i < 3; ++i) {
      ConeRef cone = ConeRef::positive(i);
      for (int v = 1; v < inst.n(); ++v)
        for (int w = v + 1; w < inst.n(); ++w) {
          ExtScalar pv = bisector_projection(inst.points[0], cone, inst.points[v]);
          ExtScalar pw = bisector_projection(inst.points[0], cone, inst.points[w]);
          CHECK(sign_of(pv - pw) != 0);
        }
    }
  }
}

TEST_CASE("canonical triangle of ((0,0),(1,2))") {
  Instance inst = make_inst({pt(0, 0), pt(1, 2)});
  CanonicalTriangle t = canonical_triangle(inst, 0, 1);
  CHECK(t.corner_a.x == ExtScalar{Scalar(0), Scalar(-2, 3)});  // -2 sqrt(3)/3
  CHECK(t.corner_a.y == ExtScalar(2));
  CHECK(t.corner_b.x == ExtScalar{Scalar(0), Scalar(2, 3)});
  CHECK(t.corner_b.y == ExtScalar(2));
  CHECK(t.height == ExtScalar(2));
  CHECK(t.tan_alpha == ExtScalar{Scalar(1, 2), Scalar(0)});
  // w lies on segment ab: equal y, x between corners
  CHECK(contains_point(t, pt(1, 2)));
  CHECK(contains_point(t, pt(0, 1)));   // on the bisector below the lid
  CHECK(!contains_point(t, pt(5, 5)));
  CHECK(contains_point(t, pt(0, 0)));   // apex is in the closed triangle
  CHECK(!contains_point(t, pt(2, 1)));  // outside the cone
  CHECK(!contains_point(t, pt(1, 3)));  // beyond the lid
}

TEST_CASE("canonical triangle requires a positive cone") {
  Instance inst = make_inst({pt(0, 0), pt(2, 1)});
  CHECK_THROWS_AS(canonical_triangle(inst, 0, 1), NotInPositiveCone);
}

TEST_CASE("canonical triangle corners satisfy |aw| + |wb| = |ab|") {
  std::mt19937_64 rng(29);
  InstanceFile f = generate_instance({77, 16, 0, 300});
  const Instance& inst = f.instance;
  int checked = 0;
  for (int u = 0; u < inst.n(); ++u)
    for (int w = 0; w < inst.n(); ++w) {
      if (u == w || cone_of(inst, u, w).polarity != Polarity::Positive) continue;
      CanonicalTriangle t = canonical_triangle(inst, u, w);
      auto len = [](const ExtPoint& p, const ExtPoint& q) {
        double dx = (p.x - q.x).to_double();
        double dy = (p.y - q.y).to_double();
        return std::hypot(dx, dy);
      };
      ExtPoint w_ext = to_ext(inst.points[w]);
      double lhs = len(t.corner_a, w_ext) + len(w_ext, t.corner_b);
      double rhs = len(t.corner_a, t.corner_b);
      CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
      ++checked;
    }
  CHECK(checked > 0);
  (void)rng;
}
