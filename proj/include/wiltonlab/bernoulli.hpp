#pragma once

#include <cmath>
#include <cstdint>

#include "wiltonlab/rational.hpp"

namespace wiltonlab {

/// A truncated series value with a rigorous tail bound: the true sum lies in
/// [value - tail_bound, value + tail_bound].
struct SeriesValue {
    double value = 0.0;
    double tail_bound = 0.0;
    std::int64_t terms_used = 0;
};

/// Normalized first Bernoulli function {t} - 1/2 + [t integer]/2.
inline double bernoulli1(double t) {
    const double f = t - std::floor(t);
    return (f == 0.0) ? 0.0 : f - 0.5;
}

/// Second Bernoulli function {t}^2 - {t} + 1/6, 1-periodic.
inline double bernoulli2(double t) {
    const double f = t - std::floor(t);
    return f * f - f + 1.0 / 6.0;
}

/// Partial sum sum_{n<=v} B_1(n x)/n, ascending order, compensated.
double phi1_partial(double x, double v);

/// phi_2(x) = sum_n B_2(n x)/n^2 to tolerance tol: N = ceil(1/(6 tol)) terms,
/// tail bound (1/6) sum_{n>N} 1/n^2 <= 1/(6N). 1-periodic in x.
SeriesValue phi2(double x, double tol);

/// Difference phi_2(x+h) - phi_2(x) summed term-by-term with a shared cutoff;
/// cancellation keeps the difference accurate for small h.
SeriesValue phi2_difference(double x, double h, double tol);

/// phi_2 via its absolutely-continuous form 2 int_0^x phi_1 + zeta(2)/6,
/// each inner integral int_0^x B_1(nu) du = (B_2(nx) - B_2(0))/(2n) closed form.
SeriesValue phi2_via_integral(double x, double tol);

/// Exact integral int_0^1 B_1(mt) B_1(nt) dt by piecewise rational
/// integration; asserts it equals gcd(m,n)^2/(12 m n) and returns the value.
/// Throws std::logic_error on mismatch (oracle failure).
Rational landau_inner(std::uint32_t m, std::uint32_t n);

/// Residual of the Sylvester-type approximate functional equation for the
/// partial sums of phi_1:
///   eps(x,v) = sum_{m<=v} B_1(mx)/m + x sum_{n<=xv} B_1(n {1/x})/n
///              - F(x) + (1/2) log(1/x),
/// which is O(1/(xv)). Requires x in (0,1], x*v >= 1.
double sylvester_residual(double x, double v);

inline constexpr double kZeta2 = 1.6449340668482264;       // pi^2/6
inline constexpr double kZeta2Over6 = 0.27415567780803774; // pi^2/36

}  // namespace wiltonlab
