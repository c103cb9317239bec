#include <doctest.h>

#include <cmath>
#include <random>

#include "theta6/geometry.hpp"

using namespace theta6;

TEST_CASE("rational parsing accepts integers and fractions only") {
  CHECK(*parse_rational("42") == 42);
  CHECK(*parse_rational("-7") == -7);
  CHECK(*parse_rational("4/6") == Scalar(2, 3));
  CHECK(*parse_rational("-10/5") == -2);
  CHECK(!parse_rational("1.5"));
  CHECK(!parse_rational("1e3"));
  CHECK(!parse_rational("3/0"));
  CHECK(!parse_rational(""));
  CHECK(!parse_rational("/2"));
  CHECK(!parse_rational("2/"));
}

TEST_CASE("rational formatting is canonical") {
  CHECK(format_rational(*parse_rational("4/6")) == "2/3");
  CHECK(format_rational(*parse_rational("-8/4")) == "-2");
  CHECK(format_rational(Scalar(0)) == "0");
}

TEST_CASE("to_double_nearest rounds to nearest") {
  CHECK(to_double_nearest(Scalar(1, 3)) == 1.0 / 3.0);
  CHECK(to_double_nearest(Scalar(2)) == 2.0);
  // 1/3 + one quintillionth of an ulp style check: exact thirds of odd powers
  Scalar q = Scalar(1, 10);  // 0.1 is not a double; nearest is the usual 0.1
  CHECK(to_double_nearest(q) == 0.1);
}

TEST_CASE("sqrt_to_double is exact on perfect squares and correctly rounded") {
  CHECK(sqrt_to_double(Scalar(25)) == 5.0);
  CHECK(sqrt_to_double(Scalar(0)) == 0.0);
  CHECK(sqrt_to_double(Scalar(2)) == 1.4142135623730951);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    long num = static_cast<long>(rng() % 1000000) + 1;
    long den = static_cast<long>(rng() % 1000) + 1;
    Scalar q(num, den);
    q.canonicalize();
    double s = sqrt_to_double(q);
    // s must be within half an ulp: (s +- ulp/2)^2 brackets q
    double up = std::nextafter(s, 1e300), down = std::nextafter(s, -1e300);
    Scalar hi = (Scalar(s) + Scalar(up)) / 2;
    Scalar lo = (Scalar(down) + Scalar(s)) / 2;
    CHECK(lo * lo <= q);
    CHECK(q <= hi * hi);
  }
}

TEST_CASE("euclid_length_approx matches the stated values") {
  CHECK(euclid_length_approx({Scalar(0), Scalar(0)}, {Scalar(3), Scalar(4)}) == 5.0);
  CHECK(euclid_length_approx({Scalar(0), Scalar(0)}, {Scalar(0), Scalar(0)}) == 0.0);
  CHECK(euclid_length_approx({Scalar(0), Scalar(0)}, {Scalar(1), Scalar(1)}) ==
        1.4142135623730951);
}

TEST_CASE("sign of a + b sqrt(3)") {
  CHECK(sign_of(ExtScalar{Scalar(1), Scalar(-1)}) < 0);  // 1 < sqrt(3)
  CHECK(sign_of(ExtScalar{Scalar(2), Scalar(-1)}) > 0);  // 4 > 3
  CHECK(sign_of(ExtScalar{Scalar(0), Scalar(0)}) == 0);
  CHECK(sign_of(ExtScalar{Scalar(-5), Scalar(3)}) > 0);
  CHECK(sign_of(ExtScalar{Scalar(5), Scalar(-3)}) < 0);
  CHECK(sign_of(ExtScalar{Scalar(0), Scalar(-2)}) < 0);
  CHECK(sign_of(ExtScalar{Scalar(7), Scalar(0)}) > 0);
}

TEST_CASE("ext sign agrees with double evaluation away from zero") {
  std::mt19937_64 rng(11);
  auto small = [&]() {
    long num = static_cast<long>(rng() % 2000000) - 1000000;
    long den = static_cast<long>(rng() % 999999) + 1;
    Scalar q(num, den);
    q.canonicalize();
    return q;
  };
  const double sqrt3 = std::sqrt(3.0);
  int checked = 0;
  for (int i = 0; i < 5000; ++i) {
    ExtScalar v{small(), small()};
    double approx = to_double_nearest(v.a) + to_double_nearest(v.b) * sqrt3;
    if (std::fabs(approx) <= 1e-6) continue;
    ++checked;
    CHECK(sign_of(v) == (approx > 0 ? 1 : -1));
  }
  CHECK(checked > 4000);
}

TEST_CASE("ext arithmetic closes over Q[sqrt 3]") {
  ExtScalar x{Scalar(1), Scalar(2)};
  ExtScalar y{Scalar(-3), Scalar(1, 2)};
  CHECK(x * y == ExtScalar{Scalar(0), Scalar(-11, 2)});
  CHECK((x - x) == ExtScalar{Scalar(0), Scalar(0)});
  ExtScalar q = x / y;
  CHECK(q * y == x);
  // 1/(a + b sqrt 3) has the conjugate form
  ExtScalar inv = ExtScalar{Scalar(1), Scalar(0)} / x;
  CHECK(inv * x == ExtScalar{Scalar(1), Scalar(0)});
}

TEST_CASE("exactness: repeated evaluation is deterministic") {
  ExtScalar v{Scalar(123456789, 7), Scalar(-987654321, 13)};
  int s = sign_of(v);
  for (int i = 0; i < 10; ++i) CHECK(sign_of(v) == s);
}
