#pragma once

#include <algorithm>
#include <cmath>
#include <limits>

#include "wiltonlab/bigint.hpp"

namespace wiltonlab {

/// Closed interval enclosure [lo, hi]. Arithmetic rounds outward, so an
/// enclosure stays valid through double rounding (libm results are assumed
/// accurate to < 2 ulp, hence the double nudge).
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    double halfwidth() const { return 0.5 * (hi - lo); }
    bool contains(double x) const { return lo <= x && x <= hi; }
};

namespace detail {
inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
inline double dn(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up2(double x) { return up(up(x)); }
inline double dn2(double x) { return dn(dn(x)); }
}  // namespace detail

inline Interval iv_point(double x) { return {x, x}; }

inline Interval iv_add(const Interval& a, const Interval& b) {
    return {detail::dn(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline Interval iv_sub(const Interval& a, const Interval& b) {
    return {detail::dn(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline Interval iv_mul(const Interval& a, const Interval& b) {
    const double c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    return {detail::dn(std::min({c[0], c[1], c[2], c[3]})),
            detail::up(std::max({c[0], c[1], c[2], c[3]}))};
}

inline Interval iv_neg(const Interval& a) { return {-a.hi, -a.lo}; }

/// Exact rational p/q as an outward-rounded interval.
inline Interval iv_from_ratio(const BigInt& p, const BigInt& q) {
    const double d = ratio_to_double(p, q);
    if (!std::isfinite(d)) {
        return {std::numeric_limits<double>::max(),
                std::numeric_limits<double>::infinity()};
    }
    return {detail::dn2(d), detail::up2(d)};
}

/// log(p/q) as an interval, valid even when p or q overflows double.
inline Interval iv_log_ratio(const BigInt& p, const BigInt& q) {
    const double l = log_big_ratio(p, q);
    // log_big is accurate to a few ulp of each part; pad by a relative bound
    const double pad = 8e-16 * (std::fabs(log_big(p)) + std::fabs(log_big(q))) +
                       4 * std::numeric_limits<double>::epsilon();
    return {l - pad, l + pad};
}

}  // namespace wiltonlab
