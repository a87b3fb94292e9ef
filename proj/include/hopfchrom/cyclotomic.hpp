#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hopfchrom/rational.hpp"

namespace hopfchrom {

long long euler_phi(long long n);

// Coefficients of the n-th cyclotomic polynomial, ascending powers. Cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(int n);

// An element of Q(zeta_e), stored on the power basis 1, z, ..., z^(phi(e)-1)
// modulo the e-th cyclotomic polynomial, always reduced to the minimal
// conductor so that equality and ordering are plain field comparisons.
class Cyclotomic {
public:
    Cyclotomic() : conductor_(1), coeffs_{Rational(0)} {}
    Cyclotomic(Rational r) : conductor_(1), coeffs_{r} {}  // NOLINT
    Cyclotomic(std::int64_t n) : Cyclotomic(Rational(n)) {}  // NOLINT

    // zeta_n^k
    static Cyclotomic root_of_unity(int n, long long k);

    // From an explicit coefficient vector over the power basis of Q(zeta_n);
    // the vector may have any length < n and is reduced mod Phi_n.
    static Cyclotomic from_coeffs(int n, std::vector<Rational> coeffs);

    int conductor() const { return conductor_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const { return conductor_ == 1 && coeffs_[0].is_zero(); }
    bool is_rational() const { return conductor_ == 1; }
    Rational as_rational() const;
    std::int64_t as_integer() const { return as_rational().as_integer(); }

    Cyclotomic conj() const;           // zeta -> zeta^(-1)
    Cyclotomic galois(long long a) const;  // zeta -> zeta^a, gcd(a, conductor) = 1

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
    Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
    Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }
    Cyclotomic operator/(const Rational& r) const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.conductor_ == b.conductor_ && a.coeffs_ == b.coeffs_;
    }

    // Total order: lexicographic on (conductor, coefficient vector). Any fixed
    // deterministic order works; this one is cheap on the canonical form.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

    std::string str() const;

private:
    Cyclotomic(int conductor, std::vector<Rational> coeffs)
        : conductor_(conductor), coeffs_(std::move(coeffs)) {}

    // Rewrite in Q(zeta_m) for the given divisor chain and minimize conductor.
    void canonicalize();

    int conductor_;
    std::vector<Rational> coeffs_;  // length phi(conductor_)
};

}  // namespace hopfchrom
