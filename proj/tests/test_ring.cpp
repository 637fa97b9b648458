#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cyclochar/cyclotomic.hpp"
#include "cyclochar/laurent.hpp"

using namespace cyclochar;

namespace {

LaurentPoly Q(int nv, int k) { return LaurentPoly::q_power(nv, k); }
LaurentPoly U(int nv, int i, int e = 1) { return LaurentPoly::u_var(nv, i, e); }

LaurentPoly random_poly(std::mt19937& rng, int nvars) {
    std::uniform_int_distribution<int> nterms(0, 4), qexp(-3, 3), uexp(0, 2), coeff(-5, 5);
    LaurentPoly p(nvars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> u(nvars);
        for (int i = 0; i < nvars; ++i) u[i] = uexp(rng);
        p += LaurentPoly::monomial(nvars, coeff(rng), qexp(rng), u);
    }
    return p;
}

}  // namespace

TEST_CASE("basic arithmetic identities") {
    int nv = 1;
    CHECK((qq_factor(nv) * Q(nv, -1)) == (LaurentPoly::one(nv) - Q(nv, -2)));
    CHECK(one_minus_t(nv).pow(0) == LaurentPoly::one(nv));
    // (1 - q^-2) * (-q^-2) * u1^2
    LaurentPoly lhs = one_minus_t(nv) * minus_t(nv) * U(nv, 1, 2);
    LaurentPoly expected =
        LaurentPoly::monomial(nv, -1, -2, {2}) + LaurentPoly::monomial(nv, 1, -4, {2});
    CHECK(lhs == expected);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 200; ++trial) {
        int nv = 1 + trial % 3;
        LaurentPoly a = random_poly(rng, nv), b = random_poly(rng, nv), c = random_poly(rng, nv);
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
    }
}

TEST_CASE("exact division by q - q^-1") {
    int nv = 2;
    CHECK(exact_div_qfactor(one_minus_t(nv), 1) == Q(nv, -1));
    LaurentPoly square = Q(nv, 2) - LaurentPoly::constant(nv, 2) + Q(nv, -2);
    CHECK(exact_div_qfactor(square, 2) == LaurentPoly::one(nv));
    LaurentPoly bad = qq_factor(nv) * U(nv, 2) + LaurentPoly::one(nv);
    CHECK_THROWS_AS(exact_div_qfactor(bad, 1), NonzeroRemainder);
}

TEST_CASE("exact division inverts multiplication") {
    std::mt19937 rng(999);
    for (int trial = 0; trial < 100; ++trial) {
        int nv = 1 + trial % 2;
        LaurentPoly p = random_poly(rng, nv);
        for (int d = 0; d <= 4; ++d)
            CHECK(exact_div_qfactor(p * qq_factor(nv).pow(d), d) == p);
    }
}

TEST_CASE("substitution") {
    int nv = 1;
    LaurentPoly p = U(nv, 1, 2) * one_minus_t(nv);
    CHECK(substitute_u(p, 1, LaurentPoly::constant(nv, -1)) == one_minus_t(nv));

    int nv3 = 3;
    LaurentPoly mono = Q(nv3, 4) * U(nv3, 1, 2);
    CHECK(substitute_u(mono, 1, LaurentPoly::one(nv3)) == Q(nv3, 4));

    LaurentPoly x = U(nv3, 1, 2) * U(nv3, 3, 5);
    CHECK(substitute_u(x, 1, U(nv3, 3)) == U(nv3, 3, 7));

    CHECK_THROWS_AS(substitute_u(x, 1, U(nv3, 1) + LaurentPoly::one(nv3)), CyclicBinding);

    Substitution s;
    s.q = LaurentPoly::constant(nv3, 2);
    CHECK(substitute(Q(nv3, -2), s) == LaurentPoly::constant(nv3, make_rational(1, 4)));

    Substitution cyc;
    cyc.q = Q(nv3, 1) * Rational(2);
    CHECK_THROWS_AS(substitute(Q(nv3, 1), cyc), CyclicBinding);
}

TEST_CASE("specialization at roots of unity") {
    // u2 at m = 4 is zeta
    CHECK(specialize_unity(U(4, 2), 4) == CyclotomicNumber::zeta_power(4, 1));
    CHECK(CyclotomicNumber::zeta_power(4, 1).coeffs() ==
          std::vector<Rational>{Rational(0), Rational(1)});
    // 1 + zeta + zeta^2 vanishes at m = 3
    LaurentPoly sum3 = U(3, 1) + U(3, 2) + U(3, 3);
    CHECK(specialize_unity(sum3, 3).is_zero());
    // q^3 u1 at m = 2
    CHECK(specialize_unity(Q(2, 3) * U(2, 1), 2) == CyclotomicNumber::from_rational(2, 1));
}

TEST_CASE("specialization is a ring homomorphism") {
    std::mt19937 rng(777);
    for (int m : {2, 3, 4}) {
        for (int trial = 0; trial < 60; ++trial) {
            LaurentPoly a = random_poly(rng, m), b = random_poly(rng, m);
            CHECK(specialize_unity(a + b, m) == specialize_unity(a, m) + specialize_unity(b, m));
            CHECK(specialize_unity(a * b, m) == specialize_unity(a, m) * specialize_unity(b, m));
        }
    }
}

TEST_CASE("conjugation") {
    CHECK(conj(CyclotomicNumber::zeta_power(4, 1)) == -CyclotomicNumber::zeta_power(4, 1));
    CHECK(conj(CyclotomicNumber::from_rational(5, make_rational(3, 7))) ==
          CyclotomicNumber::from_rational(5, make_rational(3, 7)));
    CyclotomicNumber x = CyclotomicNumber::from_rational(5, 2) +
                         CyclotomicNumber::zeta_power(5, 1) * CyclotomicNumber::from_rational(5, 3);
    CHECK(conj(conj(x)) == x);
}

TEST_CASE("conjugation is a ring automorphism") {
    std::mt19937 rng(4242);
    std::uniform_int_distribution<int> coeff(-4, 4);
    for (int m : {3, 4, 5, 6}) {
        int phi = euler_phi(m);
        auto random_cyc = [&]() {
            CyclotomicNumber x(m);
            for (int i = 0; i < phi; ++i)
                x += CyclotomicNumber::zeta_power(m, i) * CyclotomicNumber::from_rational(m, coeff(rng));
            return x;
        };
        for (int trial = 0; trial < 40; ++trial) {
            CyclotomicNumber a = random_cyc(), b = random_cyc();
            CHECK(conj(a + b) == conj(a) + conj(b));
            CHECK(conj(a * b) == conj(a) * conj(b));
            CHECK(conj(conj(a)) == a);
        }
    }
}

TEST_CASE("rational invariants") {
    Rational r = make_rational(6, -4);
    CHECK(rat_num(r) == -3);
    CHECK(rat_den(r) == 2);
    CHECK(gcd(BigInt(abs(rat_num(r))), rat_den(r)) == 1);
    CHECK(rat_den(Rational(0)) == 1);
}

TEST_CASE("canonical printing and parsing") {
    int nv = 2;
    LaurentPoly p = Q(nv, 3) * U(nv, 1, 2) - Q(nv, 1) * Rational(2) + Q(nv, -1);
    CHECK(to_string(p) == "q^3*u1^2 - 2*q + q^-1");
    CHECK(parse_laurent(to_string(p), nv) == p);
    CHECK(to_string(LaurentPoly::zero(nv)) == "0");

    std::mt19937 rng(2024);
    for (int trial = 0; trial < 100; ++trial) {
        LaurentPoly x = random_poly(rng, 2);
        CHECK(parse_laurent(to_string(x), 2) == x);
    }
}

TEST_CASE("term order is canonical") {
    int nv = 2;
    // same polynomial assembled in two different orders prints identically
    LaurentPoly a = U(nv, 2) + Q(nv, 2) + U(nv, 1);
    LaurentPoly b = Q(nv, 2) + U(nv, 1) + U(nv, 2);
    CHECK(to_string(a) == to_string(b));
    CHECK(to_string(a) == "q^2 + u1 + u2");
}
