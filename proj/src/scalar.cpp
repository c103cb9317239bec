#include "theta6/scalar.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>

namespace theta6 {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

bool mantissa_even(double d) { return (std::bit_cast<std::uint64_t>(d) & 1u) == 0; }

}  // namespace

std::optional<Scalar> parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  bool neg = false;
  if (!num.empty() && (num[0] == '-' || num[0] == '+')) {
    neg = num[0] == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) return std::nullopt;
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) return std::nullopt;
  if (neg) n = -n;
  Scalar q(n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Scalar& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

double to_double_nearest(const Scalar& v) {
  double d = v.get_d();  // truncated toward zero, within one ulp
  if (!std::isfinite(d)) return d;
  const double inf = std::numeric_limits<double>::infinity();
  double best = d;
  Scalar best_err = abs(v - Scalar(d));
  for (double c : {std::nextafter(d, inf), std::nextafter(d, -inf)}) {
    if (!std::isfinite(c)) continue;
    Scalar err = abs(v - Scalar(c));
    if (err < best_err || (err == best_err && mantissa_even(c) && !mantissa_even(best))) {
      best = c;
      best_err = err;
    }
  }
  return best;
}

double sqrt_to_double(const Scalar& v) {
  if (v == 0) return 0.0;
  const double inf = std::numeric_limits<double>::infinity();
  double c = std::sqrt(to_double_nearest(v));
  if (!std::isfinite(c)) return c;
  // Walk to the double whose ulp interval around it contains sqrt(v); the
  // estimate is already within a couple of ulps so this terminates fast.
  for (int iter = 0; iter < 64; ++iter) {
    double up = std::nextafter(c, inf);
    Scalar mid_hi = (Scalar(c) + Scalar(up)) / 2;
    int hi_cmp = cmp(v, mid_hi * mid_hi);
    if (hi_cmp > 0) {
      c = up;
      continue;
    }
    if (hi_cmp == 0) return mantissa_even(c) ? c : up;
    if (c > 0) {
      double down = std::nextafter(c, -inf);
      Scalar mid_lo = (Scalar(down) + Scalar(c)) / 2;
      int lo_cmp = cmp(v, mid_lo * mid_lo);
      if (lo_cmp < 0) {
        c = down;
        continue;
      }
      if (lo_cmp == 0) return mantissa_even(c) ? c : down;
    }
    break;
  }
  return c;
}

}  // namespace theta6
