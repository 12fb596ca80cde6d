#include "wiltonlab/bernoulli.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "wiltonlab/autocorr.hpp"
#include "wiltonlab/summation.hpp"

namespace wiltonlab {

double phi1_partial(double x, double v) {
    if (!(v >= 1)) throw std::domain_error("phi1_partial: need v >= 1");
    const auto N = static_cast<std::int64_t>(std::floor(v));
    Kahan acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        acc.add(bernoulli1(static_cast<double>(n) * x) / static_cast<double>(n));
    }
    return acc.get();
}

namespace {
constexpr std::int64_t kPhi2Cap = 100000000;  // 1e8 terms

std::int64_t phi2_terms(double tol) {
    if (!(tol > 0)) throw std::domain_error("phi2: need tol > 0");
    const double need = 1.0 / (6.0 * tol);
    if (need > static_cast<double>(kPhi2Cap)) {
        throw std::runtime_error(
            "phi2: tolerance too small; achievable bound is " +
            std::to_string(1.0 / (6.0 * static_cast<double>(kPhi2Cap))));
    }
    return std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(need)));
}
}  // namespace

SeriesValue phi2(double x, double tol) {
    const std::int64_t N = phi2_terms(tol);
    const double y = x - std::floor(x);
    Kahan acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        acc.add(bernoulli2(nd * y) / (nd * nd));
    }
    return {acc.get(), 1.0 / (6.0 * static_cast<double>(N)), N};
}

SeriesValue phi2_difference(double x, double h, double tol) {
    // |B_2(n(x+h)) - B_2(nx)| <= 5/12, so the difference tail is <= (5/12)/N
    if (!(tol > 0)) throw std::domain_error("phi2_difference: need tol > 0");
    const double need = 5.0 / (12.0 * tol);
    if (need > static_cast<double>(kPhi2Cap))
        throw std::runtime_error("phi2_difference: tolerance too small");
    const auto N = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(need)));
    const double y = x - std::floor(x);
    Kahan acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        acc.add((bernoulli2(nd * (y + h)) - bernoulli2(nd * y)) / (nd * nd));
    }
    return {acc.get(), 5.0 / (12.0 * static_cast<double>(N)), N};
}

SeriesValue phi2_via_integral(double x, double tol) {
    if (!(x >= 0 && x <= 1)) throw std::domain_error("phi2_via_integral: need x in [0,1]");
    // 2 sum_n (1/n) int_0^x B_1(nu) du + zeta(2)/6, inner integral
    // (B_2(nx) - B_2(0))/(2n); term tail |B_2(nx)-1/6|/n^2 <= (1/4)/n^2
    if (!(tol > 0)) throw std::domain_error("phi2_via_integral: need tol > 0");
    const double need = 1.0 / (4.0 * tol);
    if (need > static_cast<double>(kPhi2Cap))
        throw std::runtime_error("phi2_via_integral: tolerance too small");
    const auto N = std::max<std::int64_t>(1, static_cast<std::int64_t>(std::ceil(need)));
    Kahan acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        acc.add((bernoulli2(nd * x) - 1.0 / 6.0) / (nd * nd));
    }
    return {acc.get() + kZeta2Over6, 1.0 / (4.0 * static_cast<double>(N)), N};
}

Rational landau_inner(std::uint32_t m, std::uint32_t n) {
    if (m < 1 || n < 1) throw std::domain_error("landau_inner: need m,n >= 1");
    // breakpoints k/m and k/n on [0,1]; between them both floors are constant
    std::vector<BigRat> cuts;
    cuts.reserve(m + n + 2);
    for (std::uint32_t k = 0; k <= m; ++k) cuts.emplace_back(BigInt(k), BigInt(m));
    for (std::uint32_t k = 0; k <= n; ++k) cuts.emplace_back(BigInt(k), BigInt(n));
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    const BigRat half(1, 2);
    BigRat total(0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const BigRat& a = cuts[i];
        const BigRat& b = cuts[i + 1];
        const BigRat mid = (a + b) / 2;
        const BigInt fm = floor_div(boost::multiprecision::numerator(mid * m),
                                    boost::multiprecision::denominator(mid * m));
        const BigInt fn = floor_div(boost::multiprecision::numerator(mid * n),
                                    boost::multiprecision::denominator(mid * n));
        // integrand (mt - fm - 1/2)(nt - fn - 1/2): quadratic with rational
        // coefficients mn t^2 - (m cn + n cm) t + cm cn, cm = fm + 1/2
        const BigRat cm = BigRat(fm) + half;
        const BigRat cn = BigRat(fn) + half;
        const BigRat A2 = BigRat(BigInt(m) * BigInt(n));
        const BigRat A1 = BigRat(m) * cn + BigRat(n) * cm;
        const BigRat A0 = cm * cn;
        const BigRat b2 = b * b, a2 = a * a;
        total += A2 * (b2 * b - a2 * a) / 3 - A1 * (b2 - a2) / 2 + A0 * (b - a);
    }

    const BigInt g = boost::multiprecision::gcd(BigInt(m), BigInt(n));
    const BigRat closed(g * g, BigInt(12) * m * n);
    if (total != closed) {
        throw std::logic_error("landau_inner: piecewise integral disagrees with gcd(m,n)^2/(12mn)");
    }
    return Rational(total);
}

double sylvester_residual(double x, double v) {
    if (!(x > 0 && x <= 1)) throw std::domain_error("sylvester_residual: need x in (0,1]");
    if (!(x * v >= 1)) throw std::domain_error("sylvester_residual: need x*v >= 1");
    const double inv = 1.0 / x;
    const double ax = inv - std::floor(inv);
    const double s1 = phi1_partial(x, v);
    // alpha(1) = 0 makes every term of the second sum vanish
    const double s2 = (ax == 0.0) ? 0.0 : phi1_partial(ax, x * v);
    return s1 + x * s2 - F_aux(x, 1e-7) + 0.5 * std::log(1.0 / x);
}

}  // namespace wiltonlab
