#pragma once

#include "nvq/report.hpp"

#include <numeric>
#include <string>

namespace nvq {

/// Exact rational scalar over 64-bit integers, always normalized (gcd 1,
/// positive denominator). Intermediates run through 128-bit arithmetic and
/// overflow raises an Error rather than wrapping.
class Rational {
public:
    Rational() = default;
    Rational(long long n) : num_(n), den_(1) {}
    Rational(long long n, long long d) : num_(n), den_(d) { normalize(); }

    long long num() const { return num_; }
    long long den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Rational operator-() const { return Rational(-num_, den_); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational::from128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                                 i128(a.den_) * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational::from128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw Error("DivisionByZero", "rational division by zero");
        return Rational::from128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    /// "num/den" (always with the denominator, e.g. "2/1").
    std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }
    /// "num" for integers, "num/den" otherwise.
    std::string short_str() const {
        return den_ == 1 ? std::to_string(num_) : str();
    }

private:
    using i128 = __int128;

    static Rational from128(i128 n, i128 d) {
        if (d == 0) throw Error("DivisionByZero", "zero denominator");
        if (d < 0) {
            n = -n;
            d = -d;
        }
        i128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) {
            n /= g;
            d /= g;
        }
        constexpr i128 lo = -i128(0x7fffffffffffffffLL) - 1;
        constexpr i128 hi = i128(0x7fffffffffffffffLL);
        if (n < lo || n > hi || d > hi) throw Error("Overflow", "rational out of 64-bit range");
        Rational r;
        r.num_ = static_cast<long long>(n);
        r.den_ = static_cast<long long>(d);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        Rational r = from128(num_, den_);
        num_ = r.num_;
        den_ = r.den_;
    }

    long long num_ = 0;
    long long den_ = 1;
};

}  // namespace nvq
