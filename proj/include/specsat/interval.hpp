// interval.hpp — closed real intervals with outward-rounded arithmetic.
//
// An inexact operation widens its result by one ulp in each direction, which
// covers the half-ulp error of a single round-to-nearest operation. Exact
// results (checked with an error-free transform) stay put.
#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

namespace specsat {

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  static Interval point(double x) { return {x, x}; }
  /// Exact value known only to within floating rounding of one operation.
  static Interval around(double x) { return {down(x), up(x)}; }

  double width() const { return hi - lo; }
  double mid() const { return lo + 0.5 * (hi - lo); }
  bool contains(double x) const { return lo <= x && x <= hi; }

  static double down(double x) { return std::nextafter(x, -std::numeric_limits<double>::infinity()); }
  static double up(double x) { return std::nextafter(x, std::numeric_limits<double>::infinity()); }
};

namespace interval_detail {

inline bool sum_exact(double a, double b, double s) {
  const double bb = s - a;
  return std::isfinite(s) && (a - (s - bb)) + (b - bb) == 0.0;
}
inline bool product_exact(double a, double b, double p) { return std::isfinite(p) && std::fma(a, b, -p) == 0.0; }
inline double lower(double x, bool exact) { return exact ? x : Interval::down(x); }
inline double upper(double x, bool exact) { return exact ? x : Interval::up(x); }

}  // namespace interval_detail

inline Interval operator+(Interval a, Interval b) {
  using namespace interval_detail;
  const double lo = a.lo + b.lo, hi = a.hi + b.hi;
  return {lower(lo, sum_exact(a.lo, b.lo, lo)), upper(hi, sum_exact(a.hi, b.hi, hi))};
}

inline Interval operator-(Interval a) { return {-a.hi, -a.lo}; }

inline Interval operator-(Interval a, Interval b) { return a + (-b); }

inline Interval operator*(Interval a, Interval b) {
  using namespace interval_detail;
  const double x[] = {a.lo, a.lo, a.hi, a.hi}, y[] = {b.lo, b.hi, b.lo, b.hi};
  Interval r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < 4; ++i) {
    const double p = x[i] * y[i];
    const bool exact = product_exact(x[i], y[i], p);
    r.lo = std::min(r.lo, lower(p, exact));
    r.hi = std::max(r.hi, upper(p, exact));
  }
  return r;
}

/// Division by an interval that does not contain zero.
inline Interval operator/(Interval a, Interval b) {
  using namespace interval_detail;
  const double x[] = {a.lo, a.lo, a.hi, a.hi}, y[] = {b.lo, b.hi, b.lo, b.hi};
  Interval r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (int i = 0; i < 4; ++i) {
    const double q = x[i] / y[i];
    const bool exact = std::isfinite(q) && std::fma(q, y[i], -x[i]) == 0.0;
    r.lo = std::min(r.lo, lower(q, exact));
    r.hi = std::max(r.hi, upper(q, exact));
  }
  return r;
}

inline Interval abs(Interval a) {
  if (a.lo >= 0) return a;
  if (a.hi <= 0) return -a;
  return {0.0, std::max(-a.lo, a.hi)};
}

inline Interval pow(Interval a, int k) {
  Interval r = Interval::point(1.0);
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

inline Interval sqrt(Interval a) {
  const double lo = std::sqrt(std::max(0.0, a.lo)), hi = std::sqrt(std::max(0.0, a.hi));
  return {interval_detail::lower(lo, std::fma(lo, lo, -std::max(0.0, a.lo)) == 0.0),
          interval_detail::upper(hi, std::fma(hi, hi, -std::max(0.0, a.hi)) == 0.0)};
}

inline Interval hull(Interval a, Interval b) { return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)}; }

inline bool overlaps(Interval a, Interval b) { return !(a.hi < b.lo || b.hi < a.lo); }

}  // namespace specsat
