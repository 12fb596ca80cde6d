#include "wiltonlab/autocorr.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "wiltonlab/bernoulli.hpp"
#include "wiltonlab/constants.hpp"
#include "wiltonlab/quadrature.hpp"
#include "wiltonlab/summation.hpp"

namespace wiltonlab {

std::string to_string(AMethod m) {
    switch (m) {
        case AMethod::direct: return "direct";
        case AMethod::via_phi2: return "phi2";
        case AMethod::via_series: return "series";
        case AMethod::via_delta: return "delta";
    }
    return "?";
}

namespace {

constexpr double kPieceCap = 2.5e8;

/// Running state of the piecewise integration of {t}{lambda t}/t^2.
struct SState {
    double t = 0.0;
    std::int64_t m = 0;  // floor(t)
    std::int64_t n = 0;  // floor(lambda t)
    Kahan acc;
    std::int64_t pieces = 0;
};

/// Advance the exact piecewise integral from state.t to T.
void integrate_S(double lambda, double T, SState& s) {
    while (s.t < T) {
        const double bm = static_cast<double>(s.m + 1);
        const double bn = static_cast<double>(s.n + 1) / lambda;
        double b = std::min(std::min(bm, bn), T);
        if (b > s.t) {
            const double a = s.t;
            double piece;
            if (s.m == 0 && s.n == 0) {
                piece = lambda * (b - a);
            } else {
                const double md = static_cast<double>(s.m);
                const double nd = static_cast<double>(s.n);
                piece = lambda * (b - a) - (nd + lambda * md) * std::log(b / a);
                if (s.m != 0 && s.n != 0) piece -= md * nd * (1.0 / b - 1.0 / a);
            }
            s.acc.add(piece);
        }
        if (b >= bm) ++s.m;
        if (b >= bn) ++s.n;
        s.t = b;
        if (++s.pieces > static_cast<std::int64_t>(kPieceCap))
            throw std::runtime_error("A_direct: piece cap exceeded (lower T)");
    }
    s.t = T;
}

// --- small-lambda route -----------------------------------------------------
//
// For 0 < lambda <= 1 and y = 1/lambda:
//   A(lambda) = (lambda/2) log(1/lambda) + ((1+A(1))/2) lambda
//               + (lambda^2/2) phi_2(y) - int_y^inf phi_2(t) dt/t^3,
// and repeated integration by parts against the periodic antiderivatives
//   M(s)   = sum_n B_3({ns})/(3 n^3)        (mean 0)
//   M2(s)  = sum_n (B_4({ns})-B_4(0))/(12 n^4)   (mean m2 = pi^4/32400)
//   M3(s)  = sum_n B_5({ns})/(60 n^5)
// gives
//   int_y^inf phi_2 dt/t^3 = -M({y})/y^3 - 3 (M2({y})-m2)/y^4 - 12 M3({y})/y^5
//                            + E,  |E| <= 5.1e-3 / y^5.

double bern3(double s) { return ((s - 1.5) * s + 0.5) * s; }
double bern4(double s) { return (((s - 2.0) * s + 1.0) * s) * s - 1.0 / 30.0; }
double bern5(double s) { return ((((s - 2.5) * s + 5.0 / 3.0) * s) * s - 1.0 / 6.0) * s; }

constexpr double kM2Mean = 3.0064655263454430e-3;  // pi^4/32400

double periodic_series(double (*bk)(double), double denom_scale, int power,
                       double x, double abs_tol, double tail_c) {
    // sum_n bk({n x}) / (denom_scale * n^power), tail <= tail_c / N^{power-1}
    const double need = tail_c / std::max(abs_tol, 1e-14);
    auto N = static_cast<std::int64_t>(std::ceil(std::pow(need, 1.0 / (power - 1))));
    N = std::clamp<std::int64_t>(N, 8, 2000000);
    Kahan acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        const double nd = static_cast<double>(n);
        const double nx = nd * x;
        double np = nd * nd * nd;
        if (power >= 4) np *= nd;
        if (power >= 5) np *= nd;
        acc.add(bk(nx - std::floor(nx)) / (denom_scale * np));
    }
    return acc.get();
}

double tail_integral_phi2_over_t3(double y, double abs_tol, double* err_out) {
    const double fy = y - std::floor(y);
    const double y3 = y * y * y, y4 = y3 * y, y5 = y4 * y;
    const double M = periodic_series(&bern3, 3.0, 3, fy, abs_tol * y3 / 4, 8.1e-3);
    const double M2 = periodic_series(&bern4, 12.0, 4, fy, abs_tol * y4 / 12, 1.9e-3);
    const double M3 = periodic_series(&bern5, 60.0, 5, fy, abs_tol * y5 / 48, 1.1e-4);
    *err_out = 5.1e-3 / y5 + abs_tol;
    return -M / y3 - 3.0 * (M2 - kM2Mean) / y4 - 12.0 * M3 / y5;
}

/// Expansion of A against the periodic antiderivatives of phi_2; valid for
/// lambda in (0,1], achievable error ~ 5.1e-3 lambda^5.
double A_small(double lambda, double tol, double* err_out) {
    const double y = 1.0 / lambda;
    const double lead = 0.5 * lambda * std::log(y) + 0.5 * (1.0 + kA1) * lambda;
    if (0.14 * lambda * lambda <= 0.5 * tol) {
        // both phi_2 terms bounded instead of evaluated
        *err_out = 0.28 * lambda * lambda;
        return lead;
    }
    const double phi_tol = std::max(1e-9, 0.25 * tol / (lambda * lambda));
    const SeriesValue p2 = phi2(y, phi_tol);
    double tail_err = 0.0;
    const double tail = tail_integral_phi2_over_t3(y, 0.25 * tol, &tail_err);
    *err_out = 0.5 * lambda * lambda * (p2.tail_bound) + tail_err;
    return lead + 0.5 * lambda * lambda * p2.value - tail;
}

/// Error A_small can reach at this lambda (its asymptotic remainder).
double A_small_floor(double lambda) {
    const double l5 = std::pow(lambda, 5);
    return 5.1e-3 * l5 + 2e-9;
}

}  // namespace

AValue A_direct(double lambda, double T) {
    if (lambda < 0) throw std::domain_error("A_direct: need lambda >= 0");
    if (lambda == 0) return {0.0, AMethod::direct, 0.0};
    if (!(T >= 10.0 * std::max(1.0, 1.0 / lambda)))
        throw std::domain_error("A_direct: need T >= 10 max(1, 1/lambda)");
    if ((1.0 + lambda) * 2.0 * T > kPieceCap)
        throw std::runtime_error("A_direct: T would exceed the piece cap");
    SState s;
    integrate_S(lambda, T, s);
    const double s1 = s.acc.get();
    integrate_S(lambda, 2.0 * T, s);
    const double s2 = s.acc.get();
    return {2.0 * s2 - s1, AMethod::direct, std::fabs(s2 - s1) + 1e-12};
}

AValue A_direct_tol(double lambda, double tol) {
    if (lambda < 0) throw std::domain_error("A_direct_tol: need lambda >= 0");
    if (lambda == 0) return {0.0, AMethod::direct, 0.0};
    // Track two successive Richardson values; their gap estimates the error
    // left after the 1/T tail term is cancelled, with a slice of the raw
    // tail as a safety floor.
    double T = 16.0 * std::max(1.0, 1.0 / lambda);
    SState s;
    integrate_S(lambda, T, s);
    double s1 = s.acc.get();
    integrate_S(lambda, 2.0 * T, s);
    double s2 = s.acc.get();
    integrate_S(lambda, 4.0 * T, s);
    double s3 = s.acc.get();
    double r1 = 2.0 * s2 - s1, r2 = 2.0 * s3 - s2;
    double err = std::fabs(r2 - r1) + std::fabs(s3 - s2) / 50.0 + 1e-13;
    while (err > tol && (1.0 + lambda) * 8.0 * T < kPieceCap) {
        T *= 2.0;
        s1 = s2;
        s2 = s3;
        integrate_S(lambda, 4.0 * T, s);
        s3 = s.acc.get();
        r1 = r2;
        r2 = 2.0 * s3 - s2;
        err = std::fabs(r2 - r1) + std::fabs(s3 - s2) / 50.0 + 1e-13;
    }
    return {r2, AMethod::direct, err};
}

AValue A_via_phi2(double lambda, double U, double tol) {
    if (lambda < 0) throw std::domain_error("A_via_phi2: need lambda >= 0");
    if (lambda == 0) return {0.0, AMethod::via_phi2, 0.0};
    if (!(tol > 0)) throw std::domain_error("A_via_phi2: need tol > 0");
    if (U == 0.0) {
        U = std::max(10.0 * lambda, std::sqrt(0.412 * lambda / tol));
        U = std::min(U, 4096.0);
    }
    if (!(U >= 10.0 * lambda)) throw std::domain_error("A_via_phi2: need U >= 10 lambda");

    const double point_tol = std::max(1e-8, std::min(tol * lambda, 1e-5));
    const SeriesValue p2 = phi2(lambda, point_tol);
    const double node_tol = std::max(1e-7, std::min(tol * lambda, 1e-5));
    const auto integrand = [node_tol](double t) {
        return phi2(t, node_tol).value / (t * t * t);
    };
    const QuadResult quad =
        adaptive_simpson(integrand, lambda, U, tol / (3.0 * lambda), 20);
    const double tail_bound = lambda * kZeta2Over6 / (2.0 * U * U);

    AValue out;
    out.method = AMethod::via_phi2;
    out.value = 0.5 * std::log(lambda) + 0.5 * (1.0 + kA1) +
                p2.value / (2.0 * lambda) - lambda * quad.value;
    out.err_estimate = p2.tail_bound / (2.0 * lambda) + lambda * quad.err_estimate +
                       node_tol / (2.0 * lambda) + tail_bound;
    return out;
}

namespace {

/// J(a) = int_a^inf B_1(u)/u^2 du, exact per unit interval up to an even
/// integer M >= 48, then J(M) = -1/(12 M^2) + 1/(120 M^4) + O(5e-3/M^5).
double b1_tail_integral(double a) {
    double sum = 0.0;
    double lo = a;
    auto k = static_cast<std::int64_t>(std::floor(a));
    // partial piece [a, k+1): antiderivative log u + (k + 1/2)/u
    const auto piece = [](double u0, double u1, double kk) {
        return std::log(u1 / u0) + (kk + 0.5) * (1.0 / u1 - 1.0 / u0);
    };
    const auto M = std::max<std::int64_t>(k + 1, 48);
    if (lo < static_cast<double>(k + 1)) {
        sum += piece(lo, static_cast<double>(k + 1), static_cast<double>(k));
        ++k;
    }
    for (; k < M; ++k) {
        const double kd = static_cast<double>(k);
        sum += piece(kd, kd + 1.0, kd);
    }
    const double Md = static_cast<double>(M);
    sum += -1.0 / (12.0 * Md * Md) + 1.0 / (120.0 * Md * Md * Md * Md);
    return sum;
}

}  // namespace

AValue A_via_series(double lambda, std::int64_t N) {
    if (!(lambda > 0)) throw std::domain_error("A_via_series: need lambda > 0");
    if (N < 1) throw std::domain_error("A_via_series: need N >= 1");
    Kahan acc;
    for (std::int64_t n = 1; n <= N; ++n) {
        acc.add(b1_tail_integral(static_cast<double>(n) * lambda));
    }
    AValue out;
    out.method = AMethod::via_series;
    out.value = 0.5 * std::log(lambda) + 0.5 * (kA1 + 1.0) - lambda * acc.get();
    out.err_estimate =
        frozen::c_series * (1.0 / lambda + 1.0 / (lambda * lambda)) / static_cast<double>(N);
    return out;
}

AValue A_eval(double lambda, double tol) {
    if (lambda < 0) throw std::domain_error("A_eval: need lambda >= 0");
    if (lambda == 0) return {0.0, AMethod::direct, 0.0};
    if (!(tol > 0)) throw std::domain_error("A_eval: need tol > 0");
    if (lambda > 1.0) {
        AValue inner = A_eval(1.0 / lambda, tol / lambda);
        return {lambda * inner.value, inner.method, lambda * inner.err_estimate};
    }
    if (A_small_floor(lambda) <= 0.75 * tol) {
        double err = 0.0;
        const double v = A_small(lambda, tol, &err);
        return {v, AMethod::via_phi2, err};
    }
    return A_direct_tol(lambda, tol);
}

double F_aux_err(double x, double tol, double* err_estimate) {
    if (x < 0 || x > 1) throw std::domain_error("F_aux: need x in [0,1]");
    if (x == 0) {
        if (err_estimate) *err_estimate = 0.0;
        return 0.5 * kA1;
    }
    if (x == 1) {
        if (err_estimate) *err_estimate = 0.0;
        return 0.0;
    }
    const AValue a = A_eval(x, tol);
    if (err_estimate) *err_estimate = a.err_estimate;
    return 0.5 * (x + 1.0) * kA1 - a.value - 0.5 * x * std::log(x);
}

double F_aux(double x, double tol) { return F_aux_err(x, tol, nullptr); }

double mod_continuity_A(double h, std::size_t grid_points) {
    if (!(h > 0 && h <= 1)) throw std::domain_error("mod_continuity_A: need h in (0,1]");
    // The sup lives near 0+ and near low-denominator rationals; spend most
    // points on a log mesh, the rest on a dithered linear mesh.
    const std::size_t nlog = std::max<std::size_t>((grid_points * 7) / 10, 4);
    const std::size_t nlin = std::max<std::size_t>(grid_points - nlog, 4);
    const double tol = std::max(1e-6, h / 50.0);
    double sup = 0.0;
    const auto probe = [&](double x) {
        const double d = std::fabs(A_eval(x + h, tol).value - A_eval(x, tol).value);
        sup = std::max(sup, d);
    };
    for (std::size_t i = 1; i <= nlog; ++i) {
        const double u = static_cast<double>(nlog - i) / static_cast<double>(nlog - 1);
        probe(2.0 * std::exp(-12.3 * u));
    }
    constexpr double dither = 4.1421356237309515e-4;  // (sqrt(2)-1)/1000
    for (std::size_t i = 1; i <= nlin; ++i) {
        probe(2.0 * (static_cast<double>(i) - 0.5) / static_cast<double>(nlin) + dither);
    }
    return sup;
}

}  // namespace wiltonlab
