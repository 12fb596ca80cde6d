#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "wiltonlab/bigint.hpp"

namespace wiltonlab {

/// Exact non-negative fraction, always canonical (gcd = 1, den >= 1).
class Rational {
public:
    Rational() : v_(0) {}
    Rational(const BigInt& num, const BigInt& den) {
        if (den <= 0) throw std::domain_error("Rational: denominator must be >= 1");
        if (num < 0) throw std::domain_error("Rational: negative value");
        v_ = BigRat(num, den);
    }
    explicit Rational(const BigRat& v) : v_(v) {
        if (v < 0) throw std::domain_error("Rational: negative value");
    }
    explicit Rational(long n) : Rational(BigInt(n), BigInt(1)) {}

    BigInt num() const { return boost::multiprecision::numerator(v_); }
    BigInt den() const { return boost::multiprecision::denominator(v_); }
    const BigRat& value() const { return v_; }

    bool is_zero() const { return v_ == 0; }
    double to_double() const { return ratio_to_double(num(), den()); }

    /// The exact dyadic rational stored in a finite double.
    static Rational from_double(double x) {
        if (!(x >= 0) || !std::isfinite(x))
            throw std::domain_error("Rational::from_double: need finite x >= 0");
        if (x == 0) return Rational();
        int e = 0;
        const double m = std::frexp(x, &e);  // x = m * 2^e, m in [0.5, 1)
        const auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
        const int shift = e - 53;
        BigInt num(mant), den(1);
        if (shift >= 0) num <<= shift; else den <<= -shift;
        return Rational(num, den);
    }

    /// Parse "p/q" or a plain integer.
    static Rational parse(const std::string& s) {
        const auto slash = s.find('/');
        if (slash == std::string::npos) return Rational(BigInt(s), BigInt(1));
        return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    }

    std::string str() const {
        return num().str() + "/" + den().str();
    }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
    friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }

private:
    BigRat v_;
};

}  // namespace wiltonlab
