#include "wiltonlab/contfrac.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace wiltonlab {

CFExpansion CFExpansion::terminating(std::vector<BigInt> quotients) {
    for (std::size_t i = 0; i < quotients.size(); ++i) {
        if (quotients[i] < 1) throw std::domain_error("CFExpansion: quotients must be >= 1");
    }
    if (!quotients.empty() && quotients.back() < 2)
        throw std::domain_error("CFExpansion: canonical form needs last quotient >= 2");
    CFExpansion cf;
    cf.terminating_ = true;
    cf.quotients_ = std::move(quotients);
    return cf;
}

CFExpansion CFExpansion::stream(Generator gen) {
    CFExpansion cf;
    cf.terminating_ = false;
    cf.gen_ = std::move(gen);
    return cf;
}

CFExpansion CFExpansion::periodic(std::vector<BigInt> pattern) {
    if (pattern.empty()) throw std::domain_error("CFExpansion: empty period");
    for (const auto& a : pattern)
        if (a < 1) throw std::domain_error("CFExpansion: quotients must be >= 1");
    return stream([pattern = std::move(pattern)](std::size_t k) {
        return pattern[(k - 1) % pattern.size()];
    });
}

CFExpansion CFExpansion::golden() { return periodic({BigInt(1)}); }
CFExpansion CFExpansion::sqrt2m1() { return periodic({BigInt(2)}); }

BigInt CFExpansion::quotient(std::size_t k) const {
    if (k == 0) return BigInt(0);
    if (terminating_) {
        if (k > quotients_.size())
            throw std::out_of_range("CFExpansion: quotient index past depth");
        return quotients_[k - 1];
    }
    while (cache_.size() < k) cache_.push_back(gen_(cache_.size() + 1));
    return cache_[k - 1];
}

Rational CFExpansion::to_rational() const {
    if (!terminating_) throw std::domain_error("CFExpansion: stream has no rational value");
    BigRat v(0);
    for (std::size_t i = quotients_.size(); i-- > 0;) {
        v = BigRat(1) / (BigRat(quotients_[i]) + v);
    }
    return Rational(v);
}

double gauss_map(double x) {
    if (!(x > 0)) throw std::domain_error("gauss_map: need x > 0");
    const double inv = 1.0 / x;
    return inv - std::floor(inv);
}

Rational gauss_map(const Rational& r) {
    if (r.is_zero()) throw std::domain_error("gauss_map: need x > 0");
    const BigRat inv = BigRat(1) / r.value();
    const BigInt fl = floor_div(boost::multiprecision::numerator(inv),
                                boost::multiprecision::denominator(inv));
    return Rational(inv - BigRat(fl));
}

CFExpansion expand_rational(const Rational& r) {
    if (!(r.value() < 1)) throw std::domain_error("expand_rational: need 0 <= r < 1");
    std::vector<BigInt> a;
    // Euclid on (num, den): with gcd 1 the last quotient is automatically >= 2
    BigInt p = r.num(), q = r.den();
    // expansion of p/q in (0,1): a_k are the quotients of q = a*p + rem chain
    BigInt x = q, y = p;
    while (y != 0) {
        a.push_back(x / y);
        BigInt rem = x % y;
        x = y;
        y = rem;
    }
    return CFExpansion::terminating(std::move(a));
}

Convergents convergents(const CFExpansion& cf, std::size_t count) {
    Convergents c;
    if (count == 0) return c;
    c.p.reserve(count);
    c.q.reserve(count);
    BigInt pm1(1), qm1(0);  // p_{-1}, q_{-1}
    BigInt p0(0), q0(1);    // p_0 = a_0 = 0, q_0 = 1
    c.p.push_back(p0);
    c.q.push_back(q0);
    for (std::size_t k = 1; k < count; ++k) {
        if (cf.is_terminating() && k > cf.depth()) {
            c.truncated = true;
            break;
        }
        const BigInt ak = cf.quotient(k);
        BigInt pk = ak * p0 + pm1;
        BigInt qk = ak * q0 + qm1;
        c.p.push_back(pk);
        c.q.push_back(qk);
        pm1 = std::move(p0);
        qm1 = std::move(q0);
        p0 = std::move(pk);
        q0 = std::move(qk);
    }
    return c;
}

namespace {

// Enclosure of the tail value [0; a_{k+1}, a_{k+2}, ...] of a stream.
// Consecutive convergents of the tail bracket it; refine until the width
// target or the term cap is reached. Returns the two exact bracketing
// rationals (lo, hi).
struct RatPair {
    BigInt lo_n, lo_d, hi_n, hi_d;
};

RatPair stream_tail_bracket(const CFExpansion& cf, std::size_t k,
                            const OrbitOptions& opt) {
    BigInt hm1(1), lm1(0);  // h_{-1}, l_{-1}
    BigInt h0(0), l0(1);    // h_0 = 0, l_0 = 1
    BigInt hprev = h0, lprev = l0;
    for (std::size_t j = 1; j <= opt.max_tail_terms; ++j) {
        const BigInt b = cf.quotient(k + j);
        BigInt hj = b * h0 + hm1;
        BigInt lj = b * l0 + lm1;
        hm1 = h0; lm1 = l0;
        h0 = hj; l0 = lj;
        if (j >= 2) {
            // width = 1/(l_{j-1} l_j)
            const double w = ratio_to_double(BigInt(1), BigInt(lm1 * l0));
            if (w < opt.tol) break;
        }
    }
    // value lies strictly between the last two convergents
    RatPair out;
    const bool last_below = (h0 * lm1 < hm1 * l0);
    if (last_below) {
        out = {h0, l0, hm1, lm1};
    } else {
        out = {hm1, lm1, h0, l0};
    }
    return out;
}

}  // namespace

GaussOrbit orbit(const CFExpansion& cf, std::size_t K, const OrbitOptions& opt) {
    GaussOrbit o;
    if (cf.is_terminating()) {
        const std::size_t depth = cf.depth();
        o.terminated = K >= depth;
        o.depth = depth;
        const std::size_t last = std::min(K, depth);
        o.convergents = convergents(cf, depth + 1);
        // exact orbit: alpha_k is the tail rational, beta_k the product
        BigRat alpha = cf.to_rational().value();
        BigRat beta(1);  // beta_{k-1}
        for (std::size_t k = 0; k <= last; ++k) {
            const double a_d = ratio_to_double(boost::multiprecision::numerator(alpha),
                                               boost::multiprecision::denominator(alpha));
            o.alpha.push_back(iv_point(a_d));
            if (alpha != 0) {
                const double linv = log_big_ratio(boost::multiprecision::denominator(alpha),
                                                  boost::multiprecision::numerator(alpha));
                o.gamma.push_back(iv_point(ratio_to_double(
                                               boost::multiprecision::numerator(beta),
                                               boost::multiprecision::denominator(beta)) *
                                           linv));
            }
            beta *= alpha;
            o.beta.push_back(iv_point(ratio_to_double(boost::multiprecision::numerator(beta),
                                                      boost::multiprecision::denominator(beta))));
            if (alpha == 0) break;
            // alpha <- {1/alpha}
            BigRat inv = BigRat(1) / alpha;
            inv -= BigRat(floor_div(boost::multiprecision::numerator(inv),
                                    boost::multiprecision::denominator(inv)));
            alpha = inv;
        }
        return o;
    }

    // stream input: enclosures from bracketing tail convergents
    o.convergents = convergents(cf, K + 3);
    std::vector<Interval> logrecip(K + 2);  // log(1/alpha_k)
    std::vector<Interval> alphas(K + 2);
    for (std::size_t k = 0; k <= K + 1; ++k) {
        const RatPair t = stream_tail_bracket(cf, k, opt);
        const Interval lo = iv_from_ratio(t.lo_n, t.lo_d);
        const Interval hi = iv_from_ratio(t.hi_n, t.hi_d);
        alphas[k] = {lo.lo, hi.hi};
        // log(1/alpha) in [log(hi_d/hi_n), log(lo_d/lo_n)]
        const Interval l_hi = iv_log_ratio(t.hi_d, t.hi_n);
        const Interval l_lo = iv_log_ratio(t.lo_d, t.lo_n);
        logrecip[k] = {l_hi.lo, l_lo.hi};
    }
    o.alpha.assign(alphas.begin(), alphas.begin() + K + 1);
    // beta_k = 1/(q_{k+1} + alpha_{k+1} q_k)
    o.beta.resize(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        const Interval qk1 = iv_from_ratio(o.convergents.q[k + 1], BigInt(1));
        const Interval qk = iv_from_ratio(o.convergents.q[k], BigInt(1));
        const Interval den = iv_add(qk1, iv_mul(alphas[k + 1], qk));
        o.beta[k] = {detail::dn(1.0 / den.hi), detail::up(1.0 / den.lo)};
    }
    // gamma_k = beta_{k-1} log(1/alpha_k), beta_{-1} = 1
    o.gamma.resize(K + 1);
    for (std::size_t k = 0; k <= K; ++k) {
        const Interval bkm1 = (k == 0) ? iv_point(1.0) : o.beta[k - 1];
        o.gamma[k] = iv_mul(bkm1, logrecip[k]);
    }
    return o;
}

Cell cell_endpoints(const std::vector<BigInt>& b) {
    for (const auto& bi : b)
        if (bi < 1) throw std::domain_error("cell_endpoints: quotients must be >= 1");
    BigInt pm1(1), qm1(0), p0(0), q0(1);
    for (const auto& bi : b) {
        BigInt pk = bi * p0 + pm1;
        BigInt qk = bi * q0 + qm1;
        pm1 = std::move(p0);
        qm1 = std::move(q0);
        p0 = std::move(pk);
        q0 = std::move(qk);
    }
    Cell c;
    c.quotients = b;
    c.first = Rational(p0, q0);
    c.second = Rational(p0 + pm1, q0 + qm1);
    return c;
}

namespace {

constexpr double kGlx16[16] = {
    0.0483076656877383162, 0.1444719615827964934, 0.2392873622521370745,
    0.3318686022821276498, 0.4213512761306353454, 0.5068999089322293900,
    0.5877157572407623290, 0.6630442669302152010, 0.7321821187402896804,
    0.7944837959679424070, 0.8493676137325699701, 0.8963211557660521240,
    0.9349060759377396892, 0.9647622555875064308, 0.9856115115452683354,
    0.9972638618494815635};
constexpr double kGlw16[16] = {
    0.0965400885147278006, 0.0956387200792748594, 0.0938443990808045654,
    0.0911738786957638847, 0.0876520930044038111, 0.0833119242269467552,
    0.0781938957870703065, 0.0723457941088485062, 0.0658222227763618468,
    0.0586840934785355471, 0.0509980592623761762, 0.0428358980222266807,
    0.0342738629130214331, 0.0253920653092620595, 0.0162743947309056706,
    0.0070186100094700966};

template <typename Fn>
double gl16(Fn f, double a, double b) {
    const double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double s = 0.0;
    for (int i = 0; i < 16; ++i) s += kGlw16[i] * (f(c - h * kGlx16[i]) + f(c + h * kGlx16[i]));
    return s * h;
}

// int_0^1 log(1/a) g(a) da via a = e^{-s}: int_0^inf s e^{-s} g(e^{-s}) ds,
// smooth and exponentially decaying, so composite GL nails it.
template <typename Fn>
double log_weight_integral(Fn g, int panels = 6) {
    double total = 0.0;
    const double smax = 36.0;
    for (int p = 0; p < panels; ++p) {
        const double s0 = smax * p / panels, s1 = smax * (p + 1) / panels;
        total += gl16([&](double s) { return s * std::exp(-s) * g(std::exp(-s)); }, s0, s1);
    }
    return total;
}

}  // namespace

InvarianceCheck gauss_invariance(bool log_kernel, std::size_t branches) {
    InvarianceCheck r;
    // Branch k: t in (1/(k+1), 1/k), alpha(t) = 1/t - k. Substituting
    // alpha = 1/t - k turns the branch integral into
    // int_0^1 f(alpha) dalpha / ((alpha+k)(alpha+k+1)).
    double sum = 0.0, comp = 0.0;
    for (std::size_t k = 1; k <= branches; ++k) {
        const double kd = static_cast<double>(k);
        double branch;
        if (!log_kernel) {
            // f(t) = t: antiderivative log t - (k+1) log(1+t) on the branch
            const double t0 = 1.0 / (kd + 1.0), t1 = 1.0 / kd;
            branch = (std::log(t1) - (kd + 1.0) * std::log1p(t1)) -
                     (std::log(t0) - (kd + 1.0) * std::log1p(t0));
        } else {
            const int panels = k < 16 ? 6 : 3;
            branch = log_weight_integral(
                [kd](double a) { return 1.0 / ((a + kd) * (a + kd + 1.0)); }, panels);
        }
        const double y = branch - comp;
        const double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
    }
    r.lhs_partial = sum;
    // The remaining branches integrate f(alpha(t))/(1+t) over
    // (0, 1/(branches+1)); for both kernels the tail lies in [0, 1/(branches+1)]
    // (f(t)=t: integrand < 1; log kernel: branch <= 1/k - 1/(k+1) summed).
    r.tail_lo = 0.0;
    r.tail_hi = 1.0 / static_cast<double>(branches + 1);
    if (!log_kernel) {
        r.rhs = gl16([](double t) { return t / (1.0 + t); }, 0.0, 1.0);
    } else {
        r.rhs = log_weight_integral([](double a) { return 1.0 / (1.0 + a); }, 12);
    }
    const double tail_mid = 0.5 * (r.tail_lo + r.tail_hi);
    r.residual = std::fabs(r.lhs_partial + tail_mid - r.rhs);
    r.bound = 0.5 * (r.tail_hi - r.tail_lo) + 1e-9;
    return r;
}

CFExpansion parse_cf_spec(const std::string& spec) {
    if (spec == "golden") return CFExpansion::golden();
    if (spec == "sqrt2m1") return CFExpansion::sqrt2m1();
    if (spec.rfind("periodic:", 0) == 0) {
        std::vector<BigInt> pat;
        std::string rest = spec.substr(9);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            const auto comma = rest.find(',', pos);
            const auto tok = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                         : comma - pos);
            pat.emplace_back(tok);
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return CFExpansion::periodic(std::move(pat));
    }
    if (spec.find('/') != std::string::npos)
        return expand_rational(Rational::parse(spec));
    return expand_rational(Rational::from_double(std::stod(spec)));
}

}  // namespace wiltonlab
