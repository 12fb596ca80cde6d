#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wiltonlab/interval.hpp"
#include "wiltonlab/rational.hpp"

namespace wiltonlab {

/// Continued-fraction expansion [0; a_1, a_2, ...]. Either a terminating
/// expansion of a rational in [0,1) (canonical: last quotient >= 2) or an
/// infinite quotient stream. Streams are the only way irrationals enter:
/// iterating {1/x} in binary64 loses every digit by k ~ 35.
class CFExpansion {
public:
    using Generator = std::function<BigInt(std::size_t)>;  // k >= 1

    static CFExpansion terminating(std::vector<BigInt> quotients);
    static CFExpansion stream(Generator gen);
    static CFExpansion periodic(std::vector<BigInt> pattern);
    static CFExpansion golden();    // all a_k = 1, value (sqrt(5)-1)/2
    static CFExpansion sqrt2m1();   // all a_k = 2, value sqrt(2)-1

    bool is_terminating() const { return terminating_; }
    /// Depth K of a terminating expansion (0 for the empty expansion of 0).
    std::size_t depth() const { return quotients_.size(); }
    /// a_k, 1-based. Throws for k past a terminating expansion's depth.
    BigInt quotient(std::size_t k) const;
    const std::vector<BigInt>& quotients() const { return quotients_; }

    /// The exact value of a terminating expansion.
    Rational to_rational() const;

private:
    CFExpansion() = default;
    bool terminating_ = true;
    std::vector<BigInt> quotients_;
    Generator gen_;
    mutable std::vector<BigInt> cache_;  // stream quotients fetched so far
};

struct Convergents {
    std::vector<BigInt> p;  // p_0, p_1, ...
    std::vector<BigInt> q;  // q_0, q_1, ...
    bool truncated = false; // expansion ended before the requested count
};

/// Per-index data of the Gauss-map orbit: alpha_k (iterated {1/x}),
/// beta_k = alpha_0 ... alpha_k, gamma_k = beta_{k-1} log(1/alpha_k).
/// Entries are enclosures; for terminating input they are point values
/// computed from exact rationals. gamma has no entry at the terminal index
/// of a rational (alpha_K = 0 there).
struct GaussOrbit {
    std::vector<Interval> alpha;
    std::vector<Interval> beta;
    std::vector<Interval> gamma;
    Convergents convergents;
    bool terminated = false;   // input was rational and the orbit hit depth
    std::size_t depth = 0;     // K(r) when terminated
};

struct OrbitOptions {
    double tol = 1e-30;          // target enclosure width for alpha_k
    std::size_t max_tail_terms = 64;
};

struct Cell {
    std::vector<BigInt> quotients;
    Rational first;   // p_k / q_k
    Rational second;  // (p_k + p_{k-1}) / (q_k + q_{k-1})
};

/// The Gauss map {1/x}. Domain error for x <= 0.
double gauss_map(double x);
Rational gauss_map(const Rational& r);

/// Canonical expansion of r in [0,1); last quotient >= 2, 0 has depth 0.
CFExpansion expand_rational(const Rational& r);

/// First `count` convergents p_0/q_0, p_1/q_1, ... (truncated and flagged
/// if a terminating expansion is shorter).
Convergents convergents(const CFExpansion& cf, std::size_t count);

/// Orbit data for k = 0..K (or up to the rational's depth, flagged).
GaussOrbit orbit(const CFExpansion& cf, std::size_t K, const OrbitOptions& opt = {});

/// Endpoints of the cell of all x whose first quotients are b_1..b_k;
/// the pair (first, second) is increasing iff k is even. Empty list: (0,1).
Cell cell_endpoints(const std::vector<BigInt>& b);

/// Both sides of the invariance of the Gauss measure dt/(1+t) under the
/// Gauss map, for f(t) = t or f(t) = log(1/t): the branch sum
/// sum_{k<=branches} int_{1/(k+1)}^{1/k} f(1/t-k) dt/(1+t) bracketed by a
/// tail enclosure, and int_0^1 f(t) dt/(1+t) by quadrature.
struct InvarianceCheck {
    double lhs_partial = 0;  // sum of branch integrals
    double tail_lo = 0, tail_hi = 0;
    double rhs = 0;
    double residual = 0;     // |lhs_partial + tail_mid - rhs|
    double bound = 0;        // tail halfwidth + quadrature slack
};
InvarianceCheck gauss_invariance(bool log_kernel, std::size_t branches = 100000);

/// Parse a CLI orbit spec: "p/q", a decimal, "golden", "sqrt2m1",
/// or "periodic:a1,a2,...".
CFExpansion parse_cf_spec(const std::string& spec);

}  // namespace wiltonlab
