#pragma once

#include <string>
#include <vector>

#include "cyclochar/laurent.hpp"
#include "cyclochar/rational.hpp"

namespace cyclochar {

int euler_phi(int m);

// Coefficients of the m-th cyclotomic polynomial, index = power, monic of
// degree phi(m).  Computed by exact division of x^m - 1 by the product of the
// cyclotomic polynomials of the proper divisors of m.
const std::vector<BigInt>& cyclotomic_polynomial(int m);

// Exact element of Q(zeta_m) in the power basis 1, zeta, ..., zeta^{phi(m)-1}.
// Every product is reduced modulo the m-th cyclotomic polynomial; no floating
// point root of unity ever appears.
class CyclotomicNumber {
public:
    explicit CyclotomicNumber(int m);
    static CyclotomicNumber from_rational(int m, const Rational& c);
    static CyclotomicNumber zeta_power(int m, long long k);

    int modulus() const { return m_; }
    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const;
    bool is_rational() const;
    Rational rational_value() const;  // requires is_rational()

    CyclotomicNumber operator-() const;
    friend CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b);
    friend CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b);
    CyclotomicNumber& operator+=(const CyclotomicNumber& o) { return *this = *this + o; }
    CyclotomicNumber& operator*=(const CyclotomicNumber& o) { return *this = *this * o; }
    friend bool operator==(const CyclotomicNumber&, const CyclotomicNumber&) = default;

    std::string to_string() const;

private:
    int m_;
    std::vector<Rational> c_;  // size phi(m)

    // Reduces an arbitrary-degree coefficient vector modulo Phi_m.
    static std::vector<Rational> reduce(int m, std::vector<Rational> poly);
    friend CyclotomicNumber conj(const CyclotomicNumber&);
    friend CyclotomicNumber specialize_unity(const LaurentPoly&, int);
};

// Evaluates q -> 1 and u_i -> zeta^{i-1} in Q(zeta_m).
CyclotomicNumber specialize_unity(const LaurentPoly& p, int m);

// Complex conjugation zeta -> zeta^{m-1}; an involutive ring automorphism.
CyclotomicNumber conj(const CyclotomicNumber& c);

}  // namespace cyclochar
