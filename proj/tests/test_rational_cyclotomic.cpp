#include <doctest.h>

#include "hopfchrom/cyclotomic.hpp"

using namespace hopfchrom;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(1, 2) + Rational(1, 3) == Rational(5, 6));
    CHECK(Rational(1, 2) * Rational(2, 3) == Rational(1, 3));
    CHECK(Rational(7, 3) / Rational(7, 3) == Rational(1));
    CHECK(Rational(-1, 2) < Rational(1, 3));
    CHECK(Rational(6, 3).is_integer());
    CHECK(Rational(6, 3).as_integer() == 2);
    CHECK_THROWS_AS(Rational(1, 0), consistency_error);
    CHECK_THROWS_AS(Rational(1, 3).as_integer(), consistency_error);
}

TEST_CASE("rational overflow aborts instead of wrapping") {
    Rational big(INT64_MAX / 2);
    CHECK_THROWS_AS(big * big, consistency_error);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
    CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(840) == 192);
}

TEST_CASE("roots of unity reduce and canonicalize") {
    Cyclotomic z3 = Cyclotomic::root_of_unity(3, 1);
    CHECK((Cyclotomic(1) + z3 + z3 * z3).is_zero());
    // zeta_6 lives in Q(zeta_3): zeta_6 = 1 + zeta_3.
    Cyclotomic z6 = Cyclotomic::root_of_unity(6, 1);
    CHECK(z6.conductor() == 3);
    CHECK(z6 == Cyclotomic(1) + z3);
    // zeta_4 in Q(zeta_8) canonicalizes down to conductor 4.
    Cyclotomic i_via8 = Cyclotomic::root_of_unity(8, 2);
    CHECK(i_via8.conductor() == 4);
    CHECK(i_via8 == Cyclotomic::root_of_unity(4, 1));
    // zeta_n^n = 1 collapses to a rational.
    CHECK(Cyclotomic::root_of_unity(5, 5) == Cyclotomic(1));
    CHECK(Cyclotomic::root_of_unity(7, 3).conductor() == 7);
}

TEST_CASE("conjugation and norms") {
    Cyclotomic z5 = Cyclotomic::root_of_unity(5, 1);
    CHECK(z5.conj() == Cyclotomic::root_of_unity(5, 4));
    CHECK(z5 * z5.conj() == Cyclotomic(1));
    Cyclotomic sum = z5 + z5.conj();  // 2 cos(2 pi / 5), real
    CHECK(sum.conj() == sum);
    CHECK(Cyclotomic(Rational(3, 2)).conj() == Cyclotomic(Rational(3, 2)));
}

TEST_CASE("galois substitution is a field automorphism on samples") {
    Cyclotomic a = Cyclotomic::root_of_unity(12, 1) + Cyclotomic(2);
    Cyclotomic b = Cyclotomic::root_of_unity(12, 7) - Cyclotomic(Rational(1, 3));
    for (long long t : {5, 7, 11}) {
        CHECK((a + b).galois(t) == a.galois(t) + b.galois(t));
        CHECK((a * b).galois(t) == a.galois(t) * b.galois(t));
    }
}

TEST_CASE("cyclotomic total order is a strict weak order on samples") {
    std::vector<Cyclotomic> vals = {Cyclotomic(0), Cyclotomic(1), Cyclotomic(-1),
                                    Cyclotomic::root_of_unity(3, 1),
                                    Cyclotomic::root_of_unity(3, 2),
                                    Cyclotomic::root_of_unity(4, 1), Cyclotomic(Rational(1, 2))};
    for (const auto& x : vals)
        for (const auto& y : vals) {
            bool lt = x < y, gt = y < x, eq = x == y;
            CHECK((lt ? 1 : 0) + (gt ? 1 : 0) + (eq ? 1 : 0) == 1);
        }
}
