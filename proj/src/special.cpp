#include "wiltonlab/special.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <stdexcept>
#include <unordered_map>

#include "wiltonlab/autocorr.hpp"
#include "wiltonlab/constants.hpp"
#include "wiltonlab/quadrature.hpp"
#include "wiltonlab/summation.hpp"

namespace wiltonlab {

CFExpansion shift_cf(const CFExpansion& cf, std::size_t s) {
    if (s == 0) return cf;
    if (cf.is_terminating()) {
        const auto& q = cf.quotients();
        if (s > q.size()) throw std::domain_error("shift_cf: shift past depth");
        return CFExpansion::terminating(std::vector<BigInt>(q.begin() + static_cast<long>(s), q.end()));
    }
    return CFExpansion::stream([cf, s](std::size_t k) { return cf.quotient(k + s); });
}

namespace {

double safe_term(const BigInt& qk1, const BigInt& qk, double add_num) {
    // (log q_{k+1} + add_num) / q_k with graceful underflow for huge q_k
    const double lq = log_big(qk1) + add_num;
    const double qd = to_double(qk);
    if (!std::isfinite(qd)) return 0.0;
    return lq / qd;
}

WiltonEval sum_gammas(const CFExpansion& cf, std::size_t K, bool alternating) {
    WiltonEval out;
    const bool rat = cf.is_terminating();
    const std::size_t depth = rat ? cf.depth() : K;
    const std::size_t terms = std::min(K, depth);
    const GaussOrbit o = orbit(cf, terms == 0 ? 0 : terms);
    Interval acc = iv_point(0.0);
    for (std::size_t k = 0; k < terms && k < o.gamma.size(); ++k) {
        const bool neg = alternating && (k % 2 == 1);
        acc = iv_add(acc, neg ? iv_neg(o.gamma[k]) : o.gamma[k]);
    }
    out.enclosure = acc;
    out.partial = acc.mid();
    out.K = std::min(terms, o.gamma.size());

    if (rat && K >= depth) {
        out.tail_estimate = 0.0;
        out.converged = true;
        return out;
    }
    // estimate the dropped tail by (log q_{k+1} + log 2)/q_k over a lookahead,
    // closed off geometrically (q at least Fibonacci)
    const std::size_t look = 16;
    const std::size_t last = rat ? depth : K + look;
    const Convergents c = convergents(cf, last + 2);
    double tail = 0.0, term = 0.0;
    for (std::size_t k = K; k + 1 < c.q.size() && (!rat || k < depth); ++k) {
        term = safe_term(c.q[k + 1], c.q[k], 0.69314718055994531);
        tail += term;
    }
    if (!rat) tail += 4.0 * term;
    out.tail_estimate = tail;
    out.converged = tail <= 1e-8;
    return out;
}

}  // namespace

WiltonEval wilton(const CFExpansion& cf, std::size_t K) {
    if (cf.is_terminating() && cf.depth() == 0) {
        WiltonEval w;
        w.converged = true;
        return w;  // W(0) = 0
    }
    return sum_gammas(cf, K, true);
}

WiltonEval brjuno(const CFExpansion& cf, std::size_t K) {
    if (cf.is_terminating() && cf.depth() == 0) {
        WiltonEval w;
        w.converged = true;
        return w;
    }
    return sum_gammas(cf, K, false);
}

CriterionTrace criterion(const CFExpansion& cf, std::size_t K) {
    if (K < 1) throw std::domain_error("criterion: need K >= 1");
    CriterionTrace tr;
    const std::size_t terms = cf.is_terminating() ? std::min(K, cf.depth()) : K;
    const Convergents c = convergents(cf, terms + 1);
    double run = 0.0;
    for (std::size_t k = 0; k + 1 < c.q.size(); ++k) {
        double t = safe_term(c.q[k + 1], c.q[k], 0.0);
        if (k % 2 == 1) t = -t;
        tr.terms.push_back(t);
        run += t;
        tr.partial_sums.push_back(run);
    }
    return tr;
}

namespace {

/// F values memoized on the exact double argument, so shared sub-orbits on
/// the two sides of a functional equation receive the identical value.
class FCache {
public:
    double get(double x, double tol, double* err) {
        std::uint64_t key;
        std::memcpy(&key, &x, sizeof key);
        auto it = map_.find(key);
        if (it != map_.end() && it->second.second <= tol * 1.0001) {
            if (err) *err = it->second.second;
            return it->second.first;
        }
        double e = 0.0;
        const double v = F_aux_err(x, tol, &e);
        map_[key] = {v, e};
        if (err) *err = e;
        return v;
    }

private:
    std::unordered_map<std::uint64_t, std::pair<double, double>> map_;
};

double fib_recip_tail(std::size_t j0) {
    // sum_{j > j0} 1/F_{j+1}
    double a = 1.0, b = 1.0;  // F_1, F_2
    for (std::size_t i = 2; i <= j0 + 1; ++i) {
        const double c = a + b;
        a = b;
        b = c;
    }
    // now b = F_{j0+2}; continue summing 1/F_{j+1} for j = j0+1, ...
    double sum = 0.0;
    for (int i = 0; i < 200; ++i) {
        const double c = a + b;
        a = b;
        b = c;
        const double t = 1.0 / b;
        sum += t;
        if (t < 1e-18 * sum) break;
    }
    return sum;
}

SeriesValue G_impl(const CFExpansion& cf, double tol, FCache& cache) {
    if (!(tol > 0)) throw std::domain_error("G_series: need tol > 0");
    const bool rat = cf.is_terminating();
    std::size_t J;
    double trunc_tail = 0.0;
    if (rat) {
        J = cf.depth();  // inclusive sum j <= K
    } else {
        J = 1;
        while (J < 64 && frozen::f_sup_norm * fib_recip_tail(J) > 0.5 * tol) ++J;
        trunc_tail = frozen::f_sup_norm * fib_recip_tail(J);
    }
    const GaussOrbit o = orbit(cf, J);
    Kahan acc;
    double err_total = trunc_tail;
    const std::size_t nterms = J + 1;
    for (std::size_t j = 0; j < nterms && j < o.alpha.size(); ++j) {
        const double beta_prev = (j == 0) ? 1.0 : o.beta[j - 1].mid();
        const double beta_w = (j == 0) ? 0.0 : o.beta[j - 1].halfwidth();
        const double a = o.alpha[j].mid();
        const double f_tol = std::clamp(tol / (2.0 * static_cast<double>(nterms) *
                                               std::max(beta_prev, 1e-18)),
                                        2.5e-7, 1e-2);
        double f_err = 0.0;
        const double f = cache.get(a, f_tol, &f_err);
        const double term = beta_prev * f;
        acc.add((j % 2 == 1) ? -term : term);
        err_total += beta_prev * f_err + beta_w * frozen::f_sup_norm +
                     o.alpha[j].halfwidth();  // F is ~Lipschitz-1 off cusps
    }
    return {acc.get(), err_total, static_cast<std::int64_t>(nterms)};
}

}  // namespace

SeriesValue G_series(const CFExpansion& cf, double tol) {
    FCache cache;
    return G_impl(cf, tol, cache);
}

SeriesValue G_series(const Rational& r, double tol) {
    return G_series(expand_rational(r), tol);
}

double G_at(double x, double tol) {
    const double y = x - std::floor(x);
    return G_series(expand_rational(Rational::from_double(y)), tol).value;
}

double delta_value(const Rational& r) {
    if (!(r.value() < 1)) throw std::domain_error("delta_value: need r in [0,1)");
    const CFExpansion cf = expand_rational(r);
    const auto K = cf.depth();
    const double sign = (K % 2 == 0) ? -1.0 : 1.0;  // (-1)^{K+1}
    return sign * kA1 / (2.0 * to_double(r.den()));
}

double delta_value(const CFExpansion& cf) {
    if (!cf.is_terminating()) return 0.0;
    return delta_value(cf.to_rational());
}

SeriesValue upsilon(double x, double tol) {
    if (!(x >= 0 && x <= 1)) throw std::domain_error("upsilon: need x in [0,1]");
    if (!(tol > 0)) throw std::domain_error("upsilon: need tol > 0");
    if (x == 0) return {0.0, 0.0, 0};
    const double phi_tol = std::max(tol / 6.0, 1e-9);
    const SeriesValue p2 = phi2(x, phi_tol);
    const double g_tol = std::max(2e-5, tol / (6.0 * std::max(x, 0.05)));
    const auto g = [g_tol](double t) { return G_at(t, g_tol); };
    const QuadResult q = midpoint_refine(g, 0.0, x, tol / 6.0, 128, 8192);
    SeriesValue out;
    out.value = kZeta2Over6 - p2.value + 2.0 * q.value;
    out.tail_bound = p2.tail_bound + 2.0 * q.err_estimate + 2.0 * x * g_tol;
    out.terms_used = p2.terms_used;
    return out;
}

namespace {

EquationCheck make_check(std::string name, const Interval& lhs, const Interval& rhs,
                         double extra_bound) {
    EquationCheck c;
    c.name = std::move(name);
    c.lhs = lhs.mid();
    c.rhs = rhs.mid();
    c.residual = std::fabs(c.lhs - c.rhs);
    c.bound = lhs.halfwidth() + rhs.halfwidth() + extra_bound + 1e-15;
    c.pass = c.residual <= c.bound;
    return c;
}

}  // namespace

std::vector<EquationCheck> functional_residuals(const CFExpansion& cf, std::size_t K) {
    if (K < 1) throw std::domain_error("functional_residuals: need K >= 1");
    std::vector<EquationCheck> out;
    const bool rat = cf.is_terminating();
    const std::size_t depth = rat ? cf.depth() : K;
    const std::size_t KK = std::min(K, depth);
    if (KK < 1) throw std::domain_error("functional_residuals: depth-0 input");

    const GaussOrbit ox = orbit(cf, KK);
    const CFExpansion cf1 = shift_cf(cf, 1);

    // W(x) = log(1/x) - x W(alpha(x)); at matched depth the two partial sums
    // differ by exactly gamma_K(x).
    {
        const WiltonEval wl = wilton(cf, KK);
        const WiltonEval wr = wilton(cf1, KK);
        const Interval rhs = iv_sub(ox.gamma[0], iv_mul(ox.alpha[0], wr.enclosure));
        double extra = 0.0;
        if (!rat || KK < depth) {
            extra = (KK < ox.gamma.size()) ? std::fabs(ox.gamma[KK].hi)
                                           : std::fabs(ox.gamma[KK - 1].hi);
        } else if (KK >= 1) {
            // rational at full depth: right side is one term short of nothing
            extra = 1e-14;
        }
        out.push_back(make_check("wilton-feq", wl.enclosure, rhs, extra));
    }

    // G(x) = F(x) - x G(alpha(x)) with a shared F cache: the truncation
    // telescopes, leaving F-rounding and tail terms.
    {
        FCache cache;
        const double tol = 1e-6;
        const SeriesValue gl = G_impl(cf, tol, cache);
        const SeriesValue gr = G_impl(cf1, tol, cache);
        double f_err = 0.0;
        const double fx = cache.get(ox.alpha[0].mid(), 2.5e-7, &f_err);
        const Interval lhs = {gl.value - gl.tail_bound, gl.value + gl.tail_bound};
        const Interval rhs_core =
            iv_sub(iv_point(fx), iv_mul(ox.alpha[0], {gr.value, gr.value}));
        const Interval rhs = {rhs_core.lo - gr.tail_bound - f_err,
                              rhs_core.hi + gr.tail_bound + f_err};
        out.push_back(make_check("G-feq", lhs, rhs, 0.0));
    }

    // W(x) = sum_{k<J}(-1)^k gamma_k + (-1)^J beta_{J-1} W(alpha_J(x))
    {
        const std::size_t J = std::max<std::size_t>(1, std::min<std::size_t>(KK / 2, 8));
        const WiltonEval wl = wilton(cf, KK);
        const WiltonEval wr = wilton(shift_cf(cf, J), KK - J);
        Interval rhs = iv_point(0.0);
        for (std::size_t k = 0; k < J; ++k) {
            rhs = iv_add(rhs, (k % 2 == 1) ? iv_neg(ox.gamma[k]) : ox.gamma[k]);
        }
        const Interval bj = (J == 0) ? iv_point(1.0) : ox.beta[J - 1];
        Interval tailed = iv_mul(bj, wr.enclosure);
        if (J % 2 == 1) tailed = iv_neg(tailed);
        rhs = iv_add(rhs, tailed);
        double extra = 0.0;
        if (!rat || KK < depth) {
            extra = (KK < ox.gamma.size()) ? std::fabs(ox.gamma[KK].hi) : 1e-14;
        } else {
            extra = 1e-14;
        }
        out.push_back(make_check("wilton-feq-general", wl.enclosure, rhs, extra));
    }
    return out;
}

}  // namespace wiltonlab
