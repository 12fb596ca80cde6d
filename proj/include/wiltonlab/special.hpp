#pragma once

#include <string>
#include <vector>

#include "wiltonlab/bernoulli.hpp"
#include "wiltonlab/contfrac.hpp"

namespace wiltonlab {

/// Partial sum of the Wilton series sum_k (-1)^k gamma_k (or the Brjuno
/// series with all-plus signs). For rational input the sum is exact up to
/// the orbit point-rounding; tail_estimate is 0 there.
struct WiltonEval {
    double partial = 0.0;        // midpoint of the enclosure
    std::size_t K = 0;           // number of gamma terms summed
    double tail_estimate = 0.0;  // bound-style estimate of the dropped tail
    bool converged = false;
    Interval enclosure;          // partial sum with rounding widths
};

/// Terms (-1)^k log(q_{k+1})/q_k and their partial sums: the convergence
/// criterion series for the Wilton function.
struct CriterionTrace {
    std::vector<double> terms;
    std::vector<double> partial_sums;
};

struct EquationCheck {
    std::string name;
    double lhs = 0.0;
    double rhs = 0.0;
    double residual = 0.0;
    double bound = 0.0;
    bool pass = false;
};

/// Alternating partial sum of gamma_k over k < K (capped at a rational's
/// depth). W(0) = W(1) = 0 by the periodic convention.
WiltonEval wilton(const CFExpansion& cf, std::size_t K);

/// Same with all-positive signs: the Brjuno series partial sum.
WiltonEval brjuno(const CFExpansion& cf, std::size_t K);

/// Convergence-criterion trace over k < K (fewer for rationals).
CriterionTrace criterion(const CFExpansion& cf, std::size_t K);

/// G(x) = sum_j (-1)^j beta_{j-1} F(alpha_j): truncated at J with tail
/// <= sup|F| * sum_{j>J} 1/F_{j+1} for streams; the full inclusive sum
/// j <= K for a rational of depth K. tail_bound folds in the F errors.
SeriesValue G_series(const CFExpansion& cf, double tol);
SeriesValue G_series(const Rational& r, double tol);
double G_at(double x, double tol);  // x as its exact dyadic rational

/// delta: 0 on irrationals, (-1)^{K+1} A(1)/(2q) at p/q of depth K.
double delta_value(const Rational& r);
double delta_value(const CFExpansion& cf);

/// Upsilon(x) = int_0^x W, evaluated through
/// phi_2(0) - phi_2(x) + 2 int_0^x G with adaptive midpoint quadrature.
SeriesValue upsilon(double x, double tol);

/// Residual checks of the exact functional equations:
///   W(x) = log(1/x) - x W(alpha(x))
///   G(x) = F(x) - x G(alpha(x))
///   W(x) = sum_{k<J}(-1)^k gamma_k + (-1)^J beta_{J-1} W(alpha_J(x))
/// evaluated from partial sums at depth K with matched truncations; each
/// bound combines enclosure widths and tail terms.
std::vector<EquationCheck> functional_residuals(const CFExpansion& cf, std::size_t K);

/// Drop the first `s` quotients: the expansion of alpha_s(x).
CFExpansion shift_cf(const CFExpansion& cf, std::size_t s);

}  // namespace wiltonlab
