#pragma once

#include <cstdint>
#include <string>

namespace wiltonlab {

inline constexpr double kEulerGamma = 0.57721566490153287;
inline constexpr double kLog2Pi = 1.8378770664093455;
/// A(1) = log(2 pi) - gamma, the closed form of the autocorrelation at 1.
inline constexpr double kA1 = kLog2Pi - kEulerGamma;

enum class AMethod { direct, via_phi2, via_series, via_delta };

std::string to_string(AMethod m);

/// A value of the fractional-part autocorrelation A(lambda), tagged with the
/// evaluation route and an error estimate.
struct AValue {
    double value = 0.0;
    AMethod method = AMethod::direct;
    double err_estimate = 0.0;
};

/// A(lambda) = int_0^inf {t}{lambda t} dt/t^2 by exact piecewise integration
/// on [0,T] (breakpoints at integers and at n/lambda; each piece has the
/// closed-form antiderivative lambda t - (n + lambda m) log t - m n / t),
/// with the 1/T tail cancelled by Richardson extrapolation 2 S(2T) - S(T).
/// err_estimate = |S(2T) - S(T)|. Requires T >= 10 max(1, 1/lambda).
AValue A_direct(double lambda, double T);

/// Direct route with T doubled until err_estimate <= tol.
AValue A_direct_tol(double lambda, double tol);

/// A(lambda) = (1/2) log lambda + (1+A(1))/2 + phi_2(lambda)/(2 lambda)
///             - lambda int_lambda^U phi_2(t) dt/t^3  (+ bounded tail),
/// the integral by adaptive quadrature. Pass U = 0 to pick U from tol.
AValue A_via_phi2(double lambda, double U, double tol);

/// A(lambda) = (1/2) log lambda + (A(1)+1)/2
///             - lambda sum_{n<=N} int_{n lambda}^infty B_1(u) du/u^2,
/// inner integrals in closed form per unit interval with an Euler-Maclaurin
/// tail. err_estimate = c (1/lambda + 1/lambda^2)/N, c frozen by calibration.
AValue A_via_series(double lambda, std::int64_t N);

/// Best cheap route at the requested tolerance (series shortcut for small
/// lambda, reflection for lambda > 1, adaptive direct otherwise).
AValue A_eval(double lambda, double tol);

/// F(x) = ((x+1)/2) A(1) - A(x) - (x/2) log x, continuous on [0,1] with
/// F(0) = A(1)/2 and F(1) = 0 (both exact here).
double F_aux(double x, double tol = 1e-6);
double F_aux_err(double x, double tol, double* err_estimate);

/// Empirical sup of |A(x+h) - A(x)| over a deterministic grid on (0,2];
/// a lower bound for the true modulus of continuity.
double mod_continuity_A(double h, std::size_t grid_points = 2000);

}  // namespace wiltonlab
