#include "doctest.h"

#include <random>

#include "cqg/scalar.hpp"

using namespace cqg;

namespace {

Exponent lam() { return Exponent::sym("lambda"); }
Exponent mu() { return Exponent::sym("mu"); }

Scalar random_scalar(std::mt19937& rng) {
    std::uniform_int_distribution<int> nterms(0, 3), coeff(-4, 4), num(-3, 3);
    std::uniform_int_distribution<int> den(1, 2);
    Scalar a;
    int n = nterms(rng);
    for (int i = 0; i < n; ++i) {
        Exponent e = Exponent::constant(Rational(num(rng), den(rng))) +
                     lam() * Rational(num(rng)) + mu() * Rational(num(rng));
        a += Scalar::monomial(coeff(rng), e);
    }
    return a;
}

}  // namespace

TEST_CASE("monomial arithmetic") {
    Scalar half = Scalar::q_power(Exponent::constant(Rational(1, 2)));
    CHECK(half * half == Scalar::q());

    CHECK(q_minus_qinv() * (Scalar::q() + Scalar::q_int(-1)) ==
          Scalar::q_int(2) - Scalar::q_int(-2));

    Scalar m = Scalar::q_power(lam() + mu());
    CHECK(m * Scalar::q_power(-(lam() + mu())) == Scalar::one());
}

TEST_CASE("invert") {
    CHECK(Scalar::q_power(lam()).inverse() == Scalar::q_power(-lam()));

    Scalar a = Scalar::monomial(2, Exponent::constant(1) - lam());
    CHECK(a.inverse() == Scalar::monomial(Rational(1, 2), lam() - Exponent::constant(1)));
    CHECK(a * a.inverse() == Scalar::one());

    CHECK_THROWS_AS(q_minus_qinv().inverse(), NotAUnit);
    CHECK_THROWS_AS(Scalar::zero().inverse(), NotAUnit);
}

TEST_CASE("specialize") {
    std::map<std::string, Rational> cols{{"lambda", 1}, {"mu", 2}};
    CHECK(Scalar::q_power(lam() + mu()).specialize(3, cols) == 27);
    CHECK(q_minus_qinv().specialize(2, {}) == Rational(3, 2));
    // half-integer exponent needs q supplied as a square
    Scalar half = Scalar::q_power(Exponent::constant(Rational(1, 2)));
    CHECK(half.specialize(4, {}, Rational(2)) == 2);
    CHECK_THROWS_AS(half.specialize(4, {}), NonIntegralExponent);
}

TEST_CASE("colour substitution") {
    std::map<std::string, Exponent> to_zero{{"lambda", Exponent()}, {"mu", Exponent()}};
    Scalar a = Scalar::q_power(Exponent::constant(1) - (lam() - mu()));
    CHECK(a.substitute(to_zero) == Scalar::q());

    std::map<std::string, Exponent> mono{{"lambda", Exponent::sym("c")},
                                         {"mu", Exponent::sym("c")}};
    CHECK(Scalar::q_power(lam() + mu()).substitute(mono) ==
          Scalar::q_power(Exponent::sym("c", 2)));
    CHECK(Scalar::q_power((mu() - lam()) * 2).substitute(mono) == Scalar::one());
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(20260823);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng), c = random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
    }
}

TEST_CASE("specialize is a ring homomorphism") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> qs(2, 9), cs(-3, 3);
    for (int i = 0; i < 200; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        for (int k = 0; k < 5; ++k) {
            Rational t(qs(rng));
            Rational q = t * t;  // square so half-integer exponents evaluate
            std::map<std::string, Rational> cols{{"lambda", cs(rng)}, {"mu", cs(rng)}};
            CHECK((a * b).specialize(q, cols, t) ==
                  a.specialize(q, cols, t) * b.specialize(q, cols, t));
            CHECK((a + b).specialize(q, cols, t) ==
                  a.specialize(q, cols, t) + b.specialize(q, cols, t));
        }
    }
}

TEST_CASE("substitution commutes with multiplication") {
    std::mt19937 rng(11);
    std::map<std::string, Exponent> subst{
        {"lambda", Exponent::sym("c") * Rational(2) + Exponent::constant(1)},
        {"mu", Exponent::sym("c", -1)}};
    for (int i = 0; i < 100; ++i) {
        Scalar a = random_scalar(rng), b = random_scalar(rng);
        CHECK((a * b).substitute(subst) == a.substitute(subst) * b.substitute(subst));
    }
}

TEST_CASE("monomial corpus inverts") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> coeff(1, 9), num(-3, 3);
    for (int i = 0; i < 50; ++i) {
        Exponent e = Exponent::constant(num(rng)) + lam() * Rational(num(rng));
        Scalar m = Scalar::monomial(coeff(rng), e) * Scalar::s_power(num(rng));
        if (m.is_zero()) continue;
        CHECK(m * m.inverse() == Scalar::one());
    }
}

TEST_CASE("text round trip") {
    const char* cases[] = {
        "q^(1 - lambda + mu) - q^(-1)",
        "2*q^(lambda)",
        "1",
        "-3/2*q^(2) + s",
        "s^(2)*q^(1/2)",
        "c+^(-1)*q - c-",
        "q - q^(-1)",
    };
    for (const char* c : cases) {
        Scalar a = Scalar::parse(c);
        CHECK(Scalar::parse(a.str()) == a);
    }
    CHECK(Scalar::parse("q^(lambda+mu)") == Scalar::q_power(lam() + mu()));
    CHECK(Scalar::parse("s") == Scalar::s_power(1));
    CHECK_THROWS_AS(Scalar::parse("q^(lambda*mu)"), ScalarParseError);
    CHECK_THROWS_AS(Scalar::parse(""), ScalarParseError);
}
