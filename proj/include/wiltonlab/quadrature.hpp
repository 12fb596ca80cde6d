#pragma once

#include <cmath>
#include <cstddef>
#include <functional>

namespace wiltonlab {

struct QuadResult {
    double value = 0.0;
    double err_estimate = 0.0;
    std::size_t evals = 0;
};

/// Adaptive Simpson with depth cap; fine for integrands that are smooth off
/// a sparse cusp set (panels straddling a cusp stop at the cap).
QuadResult adaptive_simpson(const std::function<double(double)>& f, double a,
                            double b, double tol, int max_depth = 20);

/// Composite midpoint rule on n panels with an irrational node dither, so
/// nodes never land on low-denominator rationals. Doubles n until two
/// successive levels agree to tol (or n_max); err_estimate is the last gap.
QuadResult midpoint_refine(const std::function<double(double)>& f, double a,
                           double b, double tol, std::size_t n_start = 256,
                           std::size_t n_max = 8192);

}  // namespace wiltonlab
