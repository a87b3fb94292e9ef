#pragma once

#include <map>
#include <string>
#include <vector>

#include "hopfchrom/rational.hpp"

namespace hopfchrom {

using IntPartition = std::vector<int>;    // weakly decreasing, parts >= 1
using IntComposition = std::vector<int>;  // ordered, parts >= 1

bool is_partition(const IntPartition& p);
int weight(const std::vector<int>& parts);
IntPartition sorted_partition(std::vector<int> parts);

// Descending-lex canonical order, (n) first, (1,...,1) last.
std::vector<IntPartition> enumerate_partitions(int n);
std::vector<IntComposition> enumerate_compositions(int n);

// Distinct rearrangements of a partition, descending-lex.
std::vector<IntComposition> rearrangements(const IntPartition& p);

// A symmetric function with integer coefficients on the monomial basis.
class SymFunc {
public:
    SymFunc() = default;

    static SymFunc monomial(const IntPartition& p, long long coeff = 1);
    static SymFunc one() { return monomial({}, 1); }

    long long coeff(const IntPartition& p) const;
    const std::map<IntPartition, long long>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const IntPartition& p, long long coeff);

    SymFunc& operator+=(const SymFunc& o);
    SymFunc& operator-=(const SymFunc& o);
    SymFunc scaled(long long c) const;
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend bool operator==(const SymFunc& a, const SymFunc& b) { return a.terms_ == b.terms_; }

    // "4*m[2,2,1] + 24*m[2,1,1,1]"; terms by ascending degree, then
    // descending-lex partition order.
    std::string str() const;

private:
    std::map<IntPartition, long long> terms_;  // no zero coefficients stored
};

// Collate per-composition quasisymmetric coefficients into a symmetric
// function, verifying constancy on rearrangement classes. The check is a
// theorem check for the Psi maps: failing it means the image left Sym.
SymFunc assemble_from_quasi(const std::map<IntComposition, long long>& coeff_by_composition);

// Product in Sym_Z by expanding in enough variables and re-collecting.
SymFunc multiply(const SymFunc& a, const SymFunc& b, int degree_cap = 0);

// Schur function via semistandard-tableau (Kostka) enumeration.
SymFunc schur(const IntPartition& lambda, int degree_cap = 0);

// f(1^m): each m_lambda contributes fallfact(m, len) / prod (mult_j!).
long long specialize_ones(const SymFunc& f, long long m);

// Univariate polynomial with exact rational coefficients; chromatic-type
// specializations are integer-valued but need not have integer coefficients
// (the orbital polynomial of two isolated vertices is m(m+1)/2).
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Rational> coeffs);  // ascending powers

    static IntPolynomial zero() { return IntPolynomial(); }

    int degree() const { return (int)coeffs_.size() - 1; }  // -1 for zero
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    Rational eval(long long m) const;
    long long eval_integer(long long m) const;

    IntPolynomial& operator+=(const IntPolynomial& o);
    IntPolynomial scaled(const Rational& r) const;
    friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

    std::string str() const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// The unique polynomial p with p(m) = specialize_ones(f, m) for all m >= 0,
// assembled from the exact falling-factorial closed form per m_lambda.
IntPolynomial specialize_polynomial(const SymFunc& f);

}  // namespace hopfchrom
