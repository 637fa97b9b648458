#include "cyclochar/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cyclochar {

int euler_phi(int m) {
    if (m < 1) throw std::invalid_argument("euler_phi: m must be positive");
    int result = m;
    int n = m;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

namespace {

// Exact division of integer polynomials, used only where divisibility holds.
std::vector<BigInt> poly_div_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
    std::vector<BigInt> quo(num.size() - den.size() + 1, BigInt(0));
    for (int k = static_cast<int>(quo.size()) - 1; k >= 0; --k) {
        BigInt c = num[k + den.size() - 1] / den.back();
        quo[k] = c;
        if (c != 0)
            for (std::size_t i = 0; i < den.size(); ++i) num[k + i] -= c * den[i];
    }
    for (const BigInt& c : num)
        if (c != 0) throw std::logic_error("poly_div_exact: nonzero remainder");
    return quo;
}

std::vector<BigInt> compute_cyclotomic(int m) {
    // x^m - 1
    std::vector<BigInt> num(m + 1, BigInt(0));
    num[0] = -1;
    num[m] = 1;
    for (int d = 1; d < m; ++d) {
        if (m % d != 0) continue;
        num = poly_div_exact(std::move(num), cyclotomic_polynomial(d));
    }
    return num;
}

}  // namespace

const std::vector<BigInt>& cyclotomic_polynomial(int m) {
    static std::mutex mu;
    static std::map<int, std::vector<BigInt>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(m);
        if (it != cache.end()) return it->second;
    }
    std::vector<BigInt> phi = compute_cyclotomic(m);
    std::lock_guard lock(mu);
    return cache.emplace(m, std::move(phi)).first->second;
}

CyclotomicNumber::CyclotomicNumber(int m) : m_(m), c_(euler_phi(m), Rational(0)) {
    if (m < 1) throw std::invalid_argument("CyclotomicNumber: modulus must be >= 1");
}

CyclotomicNumber CyclotomicNumber::from_rational(int m, const Rational& c) {
    CyclotomicNumber r(m);
    r.c_[0] = c;
    return r;
}

CyclotomicNumber CyclotomicNumber::zeta_power(int m, long long k) {
    long long e = ((k % m) + m) % m;
    std::vector<Rational> poly(static_cast<std::size_t>(e) + 1, Rational(0));
    poly.back() = 1;
    CyclotomicNumber r(m);
    r.c_ = reduce(m, std::move(poly));
    return r;
}

bool CyclotomicNumber::is_zero() const {
    for (const Rational& v : c_)
        if (v != 0) return false;
    return true;
}

bool CyclotomicNumber::is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
        if (c_[i] != 0) return false;
    return true;
}

Rational CyclotomicNumber::rational_value() const {
    if (!is_rational()) throw std::logic_error("CyclotomicNumber: not rational");
    return c_[0];
}

std::vector<Rational> CyclotomicNumber::reduce(int m, std::vector<Rational> poly) {
    const std::vector<BigInt>& phi = cyclotomic_polynomial(m);
    int deg = static_cast<int>(phi.size()) - 1;  // phi is monic of this degree
    for (int k = static_cast<int>(poly.size()) - 1; k >= deg; --k) {
        if (poly[k] == 0) continue;
        Rational c = poly[k];
        for (int i = 0; i <= deg; ++i) poly[k - deg + i] -= c * Rational(phi[i]);
    }
    poly.resize(static_cast<std::size_t>(deg), Rational(0));
    return poly;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
    CyclotomicNumber r(m_);
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
    return r;
}

CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.m_ != b.m_) throw std::logic_error("CyclotomicNumber: modulus mismatch");
    CyclotomicNumber r(a.m_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
    return r;
}

CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.m_ != b.m_) throw std::logic_error("CyclotomicNumber: modulus mismatch");
    CyclotomicNumber r(a.m_);
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
    return r;
}

CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
    if (a.m_ != b.m_) throw std::logic_error("CyclotomicNumber: modulus mismatch");
    std::vector<Rational> prod(a.c_.size() + b.c_.size(), Rational(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            prod[i + j] += a.c_[i] * b.c_[j];
        }
    }
    CyclotomicNumber r(a.m_);
    r.c_ = CyclotomicNumber::reduce(a.m_, std::move(prod));
    return r;
}

std::string CyclotomicNumber::to_string() const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        bool neg = c_[i] < 0;
        Rational a = neg ? Rational(-c_[i]) : c_[i];
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        std::string power;
        if (i == 1) power = "zeta";
        if (i > 1) power = "zeta^" + std::to_string(i);
        if (power.empty()) {
            out += cyclochar::to_string(a);
        } else if (a == 1) {
            out += power;
        } else {
            out += cyclochar::to_string(a) + "*" + power;
        }
    }
    return out;
}

CyclotomicNumber specialize_unity(const LaurentPoly& p, int m) {
    if (m < 1) throw std::invalid_argument("specialize_unity: m must be >= 1");
    if (!p.is_zero() && p.nvars() > m)
        throw std::logic_error("specialize_unity: polynomial has more u variables than the modulus");
    // q -> 1, u_i -> zeta^{i-1}; collect coefficients on zeta powers first.
    std::vector<Rational> acc(static_cast<std::size_t>(m), Rational(0));
    for (const auto& [mono, c] : p.terms()) {
        long long e = 0;
        for (std::size_t i = 0; i < mono.u.size(); ++i) e += static_cast<long long>(i) * mono.u[i];
        acc[static_cast<std::size_t>(e % m)] += c;
    }
    CyclotomicNumber r(m);
    r.c_ = CyclotomicNumber::reduce(m, std::move(acc));
    return r;
}

CyclotomicNumber conj(const CyclotomicNumber& c) {
    int m = c.m_;
    std::vector<Rational> poly(static_cast<std::size_t>(m), Rational(0));
    for (std::size_t i = 0; i < c.c_.size(); ++i) {
        if (c.c_[i] == 0) continue;
        std::size_t target = (i == 0) ? 0 : static_cast<std::size_t>(m) - i;
        poly[target % m] += c.c_[i];
    }
    CyclotomicNumber r(m);
    r.c_ = CyclotomicNumber::reduce(m, std::move(poly));
    return r;
}

}  // namespace cyclochar
