#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace theta6 {

// Exact coordinate type. All construction decisions reduce to sign tests over
// Q[sqrt(3)], so rationals (kept canonical by GMP) make every predicate exact.
using Scalar = mpq_class;

inline int sign_of(const Scalar& v) { return sgn(v); }

// Accepts "123", "-7", "3/4", "-10/9". Anything else (decimals, exponents,
// whitespace, zero denominators) is rejected.
std::optional<Scalar> parse_rational(std::string_view text);

// Canonical form: "n" when the denominator is 1, "n/d" otherwise.
std::string format_rational(const Scalar& v);

// Nearest double (round half to even). mpq_get_d truncates toward zero, so the
// result is fixed up by exact comparison against the neighboring doubles.
double to_double_nearest(const Scalar& v);

// Correctly rounded sqrt of a nonnegative rational: the double estimate is
// adjusted by comparing v exactly against squared ulp midpoints.
double sqrt_to_double(const Scalar& v);

}  // namespace theta6
