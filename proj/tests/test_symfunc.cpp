#include <doctest.h>

#include <random>

#include "hopfchrom/symfunc.hpp"

using namespace hopfchrom;

TEST_CASE("partition and composition enumeration") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_compositions(0).size() == 1);
    CHECK(enumerate_partitions(3).size() == 3);
    CHECK(enumerate_compositions(3).size() == 4);
    CHECK(enumerate_partitions(5).size() == 7);    // p(5) = 7
    CHECK(enumerate_compositions(5).size() == 16); // 2^(5-1)
    // Descending-lex canonical order, no duplicates.
    auto parts = enumerate_partitions(4);
    CHECK(parts.front() == IntPartition{4});
    CHECK(parts.back() == IntPartition{1, 1, 1, 1});
    for (size_t i = 1; i < parts.size(); ++i) CHECK(parts[i - 1] > parts[i]);
}

TEST_CASE("assemble from quasisymmetric coefficients") {
    std::map<IntComposition, long long> ok{{{2, 1}, 5}, {{1, 2}, 5}};
    CHECK(assemble_from_quasi(ok) == SymFunc::monomial({2, 1}, 5));
    CHECK(assemble_from_quasi({{{1}, 1}}) == SymFunc::monomial({1}));
    // The butterfly psi output, frozen from the displayed expansion.
    std::map<IntComposition, long long> bf;
    auto set_all = [&](const IntPartition& p, long long c) {
        for (const auto& comp : rearrangements(p)) bf[comp] = c;
    };
    set_all({2, 2, 1}, 4);
    set_all({2, 1, 1, 1}, 24);
    set_all({1, 1, 1, 1, 1}, 120);
    SymFunc x = assemble_from_quasi(bf);
    CHECK(x.coeff({2, 2, 1}) == 4);
    CHECK(x.coeff({2, 1, 1, 1}) == 24);
    CHECK(x.coeff({1, 1, 1, 1, 1}) == 120);
    CHECK(x.str() == "4*m[2,2,1] + 24*m[2,1,1,1] + 120*m[1,1,1,1,1]");
    // Symmetry violations are hard errors.
    std::map<IntComposition, long long> bad{{{2, 1}, 5}, {{1, 2}, 4}};
    CHECK_THROWS_AS(assemble_from_quasi(bad), consistency_error);
    std::map<IntComposition, long long> missing{{{2, 1}, 5}};
    CHECK_THROWS_AS(assemble_from_quasi(missing), consistency_error);
}

TEST_CASE("multiplication") {
    SymFunc m1 = SymFunc::monomial({1});
    SymFunc sq = multiply(m1, m1);
    CHECK(sq == SymFunc::monomial({2}) + SymFunc::monomial({1, 1}, 2));
    CHECK(multiply(SymFunc::one(), sq) == sq);
    // m_1^5 contains 120 m_(1,1,1,1,1).
    SymFunc p = m1;
    for (int i = 0; i < 4; ++i) p = multiply(p, m1);
    CHECK(p.coeff({1, 1, 1, 1, 1}) == 120);
    CHECK(p.coeff({5}) == 1);
    CHECK_THROWS_AS(multiply(SymFunc::monomial({7}), SymFunc::monomial({6})), resource_error);
}

TEST_CASE("multiplication is commutative and associative on random inputs") {
    std::mt19937_64 rng(5);
    auto random_symfunc = [&](int maxdeg) {
        SymFunc f;
        std::uniform_int_distribution<int> coeff(-3, 3), deg(0, maxdeg);
        for (int t = 0; t < 3; ++t) {
            auto parts = enumerate_partitions(deg(rng));
            std::uniform_int_distribution<size_t> pick(0, parts.size() - 1);
            f += SymFunc::monomial(parts[pick(rng)], coeff(rng));
        }
        return f;
    };
    for (int trial = 0; trial < 6; ++trial) {
        SymFunc a = random_symfunc(2), b = random_symfunc(2), c = random_symfunc(2);
        CHECK(multiply(a, b) == multiply(b, a));
        CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    }
}

TEST_CASE("schur functions by tableau enumeration") {
    CHECK(schur({1, 1}) == SymFunc::monomial({1, 1}));
    CHECK(schur({2, 1}) == SymFunc::monomial({2, 1}) + SymFunc::monomial({1, 1, 1}, 2));
    for (int n = 1; n <= 5; ++n) {
        SymFunc row = schur({n});
        for (const auto& mu : enumerate_partitions(n)) CHECK(row.coeff(mu) == 1);
    }
    // Kostka numbers for weight 4: s_(2,2) = m_(2,2) + m_(2,1,1) + 2 m_(1^4).
    SymFunc s22 = schur({2, 2});
    CHECK(s22.coeff({2, 2}) == 1);
    CHECK(s22.coeff({2, 1, 1}) == 1);
    CHECK(s22.coeff({1, 1, 1, 1}) == 2);
    CHECK(s22.coeff({3, 1}) == 0);
}

TEST_CASE("specialization at 1^m") {
    // Elementary case: m_(1^n)(1^m) = C(m, n).
    SymFunc e3 = SymFunc::monomial({1, 1, 1});
    CHECK(specialize_ones(e3, 5) == 10);
    CHECK(specialize_ones(e3, 2) == 0);
    // Butterfly values: X at 1^3 = 12, X_triv at 1^3 = 3.
    SymFunc x = SymFunc::monomial({2, 2, 1}, 4) + SymFunc::monomial({2, 1, 1, 1}, 24) +
                SymFunc::monomial({1, 1, 1, 1, 1}, 120);
    CHECK(specialize_ones(x, 3) == 12);
    SymFunc xt = SymFunc::monomial({2, 2, 1}) + SymFunc::monomial({2, 1, 1, 1}, 3) +
                 SymFunc::monomial({1, 1, 1, 1, 1}, 15);
    CHECK(specialize_ones(xt, 3) == 3);
}

TEST_CASE("specialization is multiplicative") {
    SymFunc a = SymFunc::monomial({2, 1}, 3) + SymFunc::monomial({1}, -1);
    SymFunc b = SymFunc::monomial({1, 1}, 2) + SymFunc::one();
    for (long long m = 0; m <= 6; ++m)
        CHECK(specialize_ones(multiply(a, b), m) ==
              specialize_ones(a, m) * specialize_ones(b, m));
}

TEST_CASE("polynomial reconstruction") {
    CHECK(specialize_polynomial(SymFunc::monomial({1})) ==
          IntPolynomial({Rational(0), Rational(1)}));
    // m_(1,1) -> m(m-1)/2.
    CHECK(specialize_polynomial(SymFunc::monomial({1, 1})) ==
          IntPolynomial({Rational(0), Rational(-1, 2), Rational(1, 2)}));
    // Butterfly: the chromatic polynomial evaluates to 12 at 3.
    SymFunc x = SymFunc::monomial({2, 2, 1}, 4) + SymFunc::monomial({2, 1, 1, 1}, 24) +
                SymFunc::monomial({1, 1, 1, 1, 1}, 120);
    IntPolynomial chi = specialize_polynomial(x);
    CHECK(chi.eval_integer(3) == 12);
    // Polynomial values match direct specialization well past the degree.
    for (long long m = 0; m <= 7; ++m) CHECK(chi.eval_integer(m) == specialize_ones(x, m));
    CHECK(specialize_polynomial(SymFunc()) == IntPolynomial::zero());
}

TEST_CASE("polynomial printing and evaluation") {
    IntPolynomial p({Rational(0), Rational(-1, 2), Rational(1, 2)});
    CHECK(p.str() == "1/2*m^2 - 1/2*m");
    CHECK(p.eval(5) == Rational(10));
    CHECK(p.degree() == 2);
}

TEST_CASE("schur respects the degree bound") {
    CHECK_THROWS_AS(schur({7, 6}), resource_error);
    CHECK_THROWS_AS(schur({2, 3}), consistency_error);  // not weakly decreasing
    CHECK(schur({}) == SymFunc::one());
}
