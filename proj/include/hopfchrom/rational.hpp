#pragma once

#include <cstdint>
#include <compare>
#include <numeric>
#include <string>

#include "hopfchrom/errors.hpp"

namespace hopfchrom {

namespace detail {

inline std::int64_t narrow128(__int128 v, const char* what) {
    if (v > INT64_MAX || v < INT64_MIN)
        throw consistency_error(std::string("integer overflow in ") + what);
    return static_cast<std::int64_t>(v);
}

}  // namespace detail

// Exact rational on 64-bit words. Intermediates use 128 bits and any overflow
// of the reduced result aborts; silent wraparound is never acceptable here.
class Rational {
public:
    Rational() = default;
    Rational(std::int64_t n) : num_(n) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n, std::int64_t d) : num_(n), den_(d) { normalize(); }

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }

    std::int64_t as_integer() const {
        if (den_ != 1) throw consistency_error("expected integer, got " + str());
        return num_;
    }

    Rational operator-() const { return Rational(-num_, den_, unchecked{}); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        __int128 n = (__int128)a.num_ * b.den_ + (__int128)b.num_ * a.den_;
        __int128 d = (__int128)a.den_ * b.den_;
        return make128(n, d);
    }
    friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return make128((__int128)a.num_ * b.num_, (__int128)a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw consistency_error("rational division by zero");
        return make128((__int128)a.num_ * b.den_, (__int128)a.den_ * b.num_);
    }

    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        __int128 lhs = (__int128)a.num_ * b.den_;
        __int128 rhs = (__int128)b.num_ * a.den_;
        return lhs <=> rhs;
    }

    std::string str() const {
        if (den_ == 1) return std::to_string(num_);
        return std::to_string(num_) + "/" + std::to_string(den_);
    }

private:
    struct unchecked {};
    Rational(std::int64_t n, std::int64_t d, unchecked) : num_(n), den_(d) {}

    static Rational make128(__int128 n, __int128 d) {
        if (d == 0) throw consistency_error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        __int128 g = gcd128(n < 0 ? -n : n, d);
        if (g > 1) { n /= g; d /= g; }
        return Rational(detail::narrow128(n, "rational numerator"),
                        detail::narrow128(d, "rational denominator"), unchecked{});
    }

    static __int128 gcd128(__int128 a, __int128 b) {
        while (b != 0) { __int128 t = a % b; a = b; b = t; }
        return a == 0 ? 1 : a;
    }

    void normalize() {
        if (den_ == 0) throw consistency_error("rational with zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        std::int64_t g = std::gcd(num_ < 0 ? -num_ : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
    }

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
};

}  // namespace hopfchrom
