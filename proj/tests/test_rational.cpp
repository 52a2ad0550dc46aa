#include "fatcantor/rational.hpp"

#include <doctest.h>

#include <random>

using fc::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-1000000, 1000000);
    std::uniform_int_distribution<long> den(1, 1000000);
    return Rational(num(rng), den(rng));
}

bool canonical(const Rational& r) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), r.numerator().get_mpz_t(), r.denominator().get_mpz_t());
    return r.denominator() > 0 && (g == 1 || (r.numerator() == 0 && r.denominator() == 1));
}

}  // namespace

TEST_CASE("parse and format round-trip") {
    CHECK(Rational::parse("13/96").str() == "13/96");
    CHECK(Rational::parse("-3/9").str() == "-1/3");
    CHECK(Rational::parse("42").str() == "42");
    CHECK(Rational::parse("0").str() == "0");
    CHECK(Rational(6, 4).str() == "3/2");
    CHECK(Rational(2, -4).str() == "-1/2");
}

TEST_CASE("parse rejects non-rational input") {
    CHECK_THROWS_AS(Rational::parse("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1/-2"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("a/b"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("1e-3"), std::invalid_argument);
}

TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        Rational p = random_rational(rng), q = random_rational(rng), r = random_rational(rng);
        CHECK((p + q) + r == p + (q + r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(canonical(p + q));
        CHECK(canonical(p * q));
        CHECK(canonical(p - q));
        if (q != Rational(0)) CHECK(canonical(p / q));
    }
}

TEST_CASE("comparison agrees with cross-multiplication") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 200; ++i) {
        Rational p = random_rational(rng), q = random_rational(rng);
        mpz_class lhs = p.numerator() * q.denominator();
        mpz_class rhs = q.numerator() * p.denominator();
        CHECK((p < q) == (lhs < rhs));
        CHECK((p == q) == (lhs == rhs));
    }
}

TEST_CASE("integer powers") {
    CHECK(Rational(2).pow(10) == Rational(1024));
    CHECK(Rational(2).pow(-3) == Rational(1, 8));
    CHECK(Rational(3, 4).pow(2) == Rational(9, 16));
    CHECK(fc::pow2(-5) == Rational(1, 32));
    CHECK_THROWS_AS(Rational(0).pow(-1), std::domain_error);
}

TEST_CASE("decimal display") {
    CHECK(Rational(1, 3).decimal(12) == "0.333333333333");
    CHECK(Rational(2, 3).decimal(12) == "0.666666666667");
    CHECK(Rational(-1, 8).decimal(3) == "-0.125");
    CHECK(Rational(5).decimal(2) == "5.00");
    CHECK(Rational(0).decimal(4) == "0.0000");
}

TEST_CASE("min max abs") {
    Rational a(-1, 2), b(1, 3);
    CHECK(fc::min(a, b) == a);
    CHECK(fc::max(a, b) == b);
    CHECK(a.abs() == Rational(1, 2));
}
