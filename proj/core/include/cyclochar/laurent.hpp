#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cyclochar/errors.hpp"
#include "cyclochar/rational.hpp"

namespace cyclochar {

// One monomial q^{qexp} * u_1^{uexp[0]} * ... * u_m^{uexp[m-1]}.
// The q exponent may be negative; u exponents are always >= 0.
struct Monomial {
    int q = 0;
    std::vector<int> u;

    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Canonical term order: q exponent descending, then u exponents
// lexicographic descending.  Iterating a term map in this order fixes the
// printed and serialized form.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        if (a.q != b.q) return a.q > b.q;
        return a.u > b.u;
    }
};

// Exact sparse Laurent polynomial in q and u_1..u_m over the rationals.
// Values are immutable in spirit: every operation returns a fresh polynomial
// in canonical form (no zero coefficients), so sharing across threads is safe.
class LaurentPoly {
public:
    using TermMap = std::map<Monomial, Rational, MonomialOrder>;

    LaurentPoly() = default;  // zero polynomial in zero variables
    explicit LaurentPoly(int nvars) : nvars_(nvars) {}

    static LaurentPoly zero(int nvars) { return LaurentPoly(nvars); }
    static LaurentPoly constant(int nvars, const Rational& c);
    static LaurentPoly one(int nvars) { return constant(nvars, 1); }
    static LaurentPoly monomial(int nvars, const Rational& c, int qexp, std::vector<int> uexp);
    static LaurentPoly q_power(int nvars, int k);
    // 1-based variable index i in [1, nvars].
    static LaurentPoly u_var(int nvars, int i, int e = 1);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool is_constant() const;
    // Requires is_constant(); returns the constant (0 for the zero polynomial).
    Rational constant_value() const;
    bool integer_coefficients() const;

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly operator*(const Rational& c) const;
    LaurentPoly pow(int k) const;  // k >= 0

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.terms_ == b.terms_;
    }

    void add_term(const Monomial& mono, const Rational& c);

private:
    int nvars_ = 0;
    TermMap terms_;

    friend LaurentPoly exact_div_qfactor(const LaurentPoly&, int);
};

// Convenience builders used all over the character formulas.
LaurentPoly qq_factor(int nvars);       // q - q^-1
LaurentPoly one_minus_t(int nvars);     // 1 - q^-2
LaurentPoly minus_t(int nvars);         // -q^-2

// Exact division by (q - q^-1)^d.  Each u-monomial slice is divided
// independently; a nonzero remainder in any round throws NonzeroRemainder.
LaurentPoly exact_div_qfactor(const LaurentPoly& p, int d);

// Partial substitution.  Unbound variables pass through.  Binding a variable
// to an image containing that same variable throws CyclicBinding.  The image
// of q must be a single monomial invertible for the exponents present.
struct Substitution {
    std::optional<LaurentPoly> q;
    // u[i] is the image of u_{i+1} when set.
    std::vector<std::optional<LaurentPoly>> u;
};

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s);
LaurentPoly substitute_u(const LaurentPoly& p, int i, const LaurentPoly& image);

// Canonical text form, e.g. "q^3*u1^2 - 2*q + q^-1".  Optional variable names
// replace the default u1..um (used by the type B view where u2 prints as "u").
std::string to_string(const LaurentPoly& p, const std::vector<std::string>* u_names = nullptr);
std::string to_latex(const LaurentPoly& p, const std::vector<std::string>* u_names = nullptr);

// Parses the canonical text form back; inverse of to_string with default names.
LaurentPoly parse_laurent(const std::string& text, int nvars);

}  // namespace cyclochar
