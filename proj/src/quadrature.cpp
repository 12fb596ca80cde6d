#include "wiltonlab/quadrature.hpp"

#include "wiltonlab/summation.hpp"

namespace wiltonlab {

namespace {

struct SimpsonCtx {
    const std::function<double(double)>& f;
    std::size_t evals = 0;
    double err = 0.0;
};

double simpson_rec(SimpsonCtx& ctx, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = ctx.f(lm), frm = ctx.f(rm);
    ctx.evals += 2;
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::fabs(delta) <= 15.0 * tol) {
        ctx.err += std::fabs(delta) / 15.0;
        return left + right + delta / 15.0;
    }
    return simpson_rec(ctx, a, m, fa, flm, fm, left, tol * 0.5, depth - 1) +
           simpson_rec(ctx, m, b, fm, frm, fb, right, tol * 0.5, depth - 1);
}

}  // namespace

QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth) {
    if (a == b) return {0.0, 0.0, 0};
    SimpsonCtx ctx{f};
    const double m = 0.5 * (a + b);
    const double fa = f(a), fm = f(m), fb = f(b);
    ctx.evals = 3;
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const double v = simpson_rec(ctx, a, b, fa, fm, fb, whole, tol, max_depth);
    return {v, ctx.err, ctx.evals};
}

QuadResult midpoint_refine(const std::function<double(double)>& f, double a,
                           double b, double tol, std::size_t n_start,
                           std::size_t n_max) {
    if (a == b) return {0.0, 0.0, 0};
    constexpr double dither = 0.20710678118654752;  // (sqrt(2)-1)/2
    std::size_t evals = 0;
    auto level = [&](std::size_t n) {
        const double h = (b - a) / static_cast<double>(n);
        Kahan s;
        for (std::size_t i = 0; i < n; ++i) {
            s.add(f(a + h * (static_cast<double>(i) + 0.5 + dither * h)));
        }
        evals += n;
        return s.get() * h;
    };
    double prev = level(n_start), err = std::fabs(prev);
    std::size_t n = n_start;
    while (n < n_max) {
        n *= 2;
        const double cur = level(n);
        err = std::fabs(cur - prev);
        prev = cur;
        if (err <= tol) break;
    }
    return {prev, err, evals};
}

}  // namespace wiltonlab
