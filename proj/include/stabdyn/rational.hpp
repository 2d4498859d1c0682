#pragma once

// Minimal exact rational arithmetic for displacement invariants.  Values in
// this project are ratios of small integers (orbit shift totals over cycle
// lengths), so int64 components with 128-bit intermediates are ample.

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace stabdyn {

class Rational {
public:
    Rational() : num_(0), den_(1) {}

    Rational(std::int64_t num, std::int64_t den = 1) : num_(num), den_(den) {
        if (den_ == 0) {
            throw std::invalid_argument("Rational: zero denominator");
        }
        normalize();
    }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    Rational operator-() const { return Rational(-num_, den_); }

    Rational abs() const { return num_ < 0 ? -*this : *this; }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                         i128(a.den_) * b.den_);
    }

    friend Rational operator-(const Rational& a, const Rational& b) {
        return a + (-b);
    }

    friend Rational operator*(const Rational& a, const Rational& b) {
        return from_i128(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
    }

    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) {
            throw std::domain_error("Rational: division by zero");
        }
        return from_i128(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
    }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    friend bool operator<(const Rational& a, const Rational& b) {
        return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
    }

    friend bool operator<=(const Rational& a, const Rational& b) {
        return !(b < a);
    }

    friend bool operator>(const Rational& a, const Rational& b) {
        return b < a;
    }

    friend bool operator>=(const Rational& a, const Rational& b) {
        return !(a < b);
    }

    double to_double() const {
        return static_cast<double>(num_) / static_cast<double>(den_);
    }

    std::string to_string() const {
        return den_ == 1 ? std::to_string(num_)
                         : std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    using i128 = __int128;

    static Rational from_i128(i128 num, i128 den) {
        if (den < 0) {
            num = -num;
            den = -den;
        }
        const i128 g = gcd128(num < 0 ? -num : num, den);
        if (g > 1) {
            num /= g;
            den /= g;
        }
        constexpr i128 lo = INT64_MIN, hi = INT64_MAX;
        if (num < lo || num > hi || den > hi) {
            throw std::overflow_error("Rational: value out of int64 range");
        }
        Rational r;
        r.num_ = static_cast<std::int64_t>(num);
        r.den_ = static_cast<std::int64_t>(den);
        return r;
    }

    static i128 gcd128(i128 a, i128 b) {
        while (b != 0) {
            const i128 t = a % b;
            a = b;
            b = t;
        }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        const std::int64_t g = std::gcd(num_, den_);
        if (g > 1) {
            num_ /= g;
            den_ /= g;
        }
    }

    std::int64_t num_;
    std::int64_t den_;
};

}  // namespace stabdyn
