#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <cstdint>
#include <limits>

namespace wiltonlab {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline double to_double(const BigInt& n) {
    return n.convert_to<double>();
}

/// Natural log of a positive integer; works far beyond the double range.
inline double log_big(const BigInt& n) {
    if (n <= 0) return -std::numeric_limits<double>::infinity();
    const std::size_t bits = boost::multiprecision::msb(n) + 1;
    if (bits <= 960) return std::log(to_double(n));
    const std::size_t shift = bits - 64;
    const double top = to_double(BigInt(n >> shift));
    return std::log(top) + static_cast<double>(shift) * 0.69314718055994531;
}

/// log(p/q) for positive big integers, immune to overflow of either part.
inline double log_big_ratio(const BigInt& p, const BigInt& q) {
    return log_big(p) - log_big(q);
}

/// p/q as a double; saturates to 0 / inf instead of overflowing.
inline double ratio_to_double(const BigInt& p, const BigInt& q) {
    if (p == 0) return 0.0;
    const auto bp = static_cast<long>(boost::multiprecision::msb(p));
    const auto bq = static_cast<long>(boost::multiprecision::msb(q));
    if (bp - bq > 1030) return std::numeric_limits<double>::infinity();
    if (bq - bp > 1070) return 0.0;
    if (bp < 1020 && bq < 1020) return to_double(p) / to_double(q);
    // scale both down so the smaller keeps ~80 bits
    const long shift = std::min(bp, bq) - 80;
    if (shift > 0) {
        return to_double(BigInt(p >> shift)) / to_double(BigInt(q >> shift));
    }
    return to_double(p) / to_double(q);
}

inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace wiltonlab
