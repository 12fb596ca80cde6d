#pragma once

namespace wiltonlab::frozen {

// Constants behind the "<<" bounds, measured once by `wiltonlab calibrate`
// on the canonical grids and frozen with at least a 2x margin. The check
// suites assert against these values; they are never recomputed at check
// time.

/// max |eps(x,v)| * x * v over the Sylvester calibration grid (measured 3.1).
inline constexpr double c_sylvester = 10.0;

/// max |sum_{n<=v} tau(n) sin(2 pi n x)/n| / log v over the Walfisz grid
/// (measured 1.68).
inline constexpr double c_walfisz = 4.0;

/// max |afe residual| * sqrt(x^2 v) / log^2(x^2 v) (measured 0.0040).
inline constexpr double c_afe_psi1 = 0.05;

/// err_estimate multiplier for the B_1 tail-integral route to A:
/// err = c_series (1/lambda + 1/lambda^2)/N (measured max ratio 0.71).
inline constexpr double c_series = 3.0;

/// sup |F| on [0,1]: 1e4-point scan gives 0.6303 (attained at 0), +10%.
inline constexpr double f_sup_norm = 0.70;

/// Required log-log decay slope for the divisor AFE residual.
inline constexpr double afe_slope_max = -0.4;

}  // namespace wiltonlab::frozen
