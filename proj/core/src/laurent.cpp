#include "cyclochar/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cyclochar {

namespace {

int merged_nvars(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.nvars() == b.nvars()) return a.nvars();
    // The zero polynomial acts as a neutral element in any variable count.
    if (a.is_zero() || b.is_zero()) return std::max(a.nvars(), b.nvars());
    throw std::logic_error("LaurentPoly: mixing different variable counts");
}

Monomial widen(const Monomial& m, int nvars) {
    Monomial r = m;
    r.u.resize(static_cast<std::size_t>(nvars), 0);
    return r;
}

}  // namespace

LaurentPoly LaurentPoly::constant(int nvars, const Rational& c) {
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial{0, std::vector<int>(nvars, 0)}, c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int nvars, const Rational& c, int qexp, std::vector<int> uexp) {
    if (static_cast<int>(uexp.size()) != nvars)
        throw std::logic_error("LaurentPoly::monomial: u exponent size mismatch");
    for (int e : uexp)
        if (e < 0) throw std::logic_error("LaurentPoly::monomial: negative u exponent");
    LaurentPoly p(nvars);
    if (c != 0) p.terms_.emplace(Monomial{qexp, std::move(uexp)}, c);
    return p;
}

LaurentPoly LaurentPoly::q_power(int nvars, int k) {
    return monomial(nvars, 1, k, std::vector<int>(nvars, 0));
}

LaurentPoly LaurentPoly::u_var(int nvars, int i, int e) {
    if (i < 1 || i > nvars) throw std::logic_error("LaurentPoly::u_var: index out of range");
    std::vector<int> u(nvars, 0);
    u[i - 1] = e;
    return monomial(nvars, 1, 0, std::move(u));
}

bool LaurentPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const Monomial& m = terms_.begin()->first;
    if (m.q != 0) return false;
    return std::all_of(m.u.begin(), m.u.end(), [](int e) { return e == 0; });
}

Rational LaurentPoly::constant_value() const {
    if (terms_.empty()) return 0;
    if (!is_constant()) throw std::logic_error("LaurentPoly::constant_value: not constant");
    return terms_.begin()->second;
}

bool LaurentPoly::integer_coefficients() const {
    for (const auto& [mono, c] : terms_)
        if (!is_integer(c)) return false;
    return true;
}

void LaurentPoly::add_term(const Monomial& mono, const Rational& c) {
    if (c == 0) return;
    auto it = terms_.find(mono);
    if (it == terms_.end()) {
        terms_.emplace(mono, c);
    } else {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(nvars_);
    for (const auto& [mono, c] : terms_) r.terms_.emplace(mono, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    int nv = merged_nvars(*this, o);
    if (nv != nvars_) nvars_ = nv;  // only reachable when *this is zero
    for (const auto& [mono, c] : o.terms_) add_term(widen(mono, nv), c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (o.is_zero()) return *this;
    int nv = merged_nvars(*this, o);
    if (nv != nvars_) nvars_ = nv;
    for (const auto& [mono, c] : o.terms_) add_term(widen(mono, nv), -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    int nv = merged_nvars(a, b);
    LaurentPoly r(nv);
    for (const auto& [ma, ca] : a.terms()) {
        for (const auto& [mb, cb] : b.terms()) {
            Monomial m;
            m.q = ma.q + mb.q;
            m.u.resize(static_cast<std::size_t>(nv), 0);
            for (std::size_t i = 0; i < ma.u.size(); ++i) m.u[i] += ma.u[i];
            for (std::size_t i = 0; i < mb.u.size(); ++i) m.u[i] += mb.u[i];
            r.add_term(m, ca * cb);
        }
    }
    return r;
}

LaurentPoly LaurentPoly::operator*(const Rational& c) const {
    LaurentPoly r(nvars_);
    if (c == 0) return r;
    for (const auto& [mono, coeff] : terms_) r.terms_.emplace(mono, coeff * c);
    return r;
}

LaurentPoly LaurentPoly::pow(int k) const {
    if (k < 0) throw std::logic_error("LaurentPoly::pow: negative exponent");
    LaurentPoly r = one(nvars_);
    LaurentPoly base = *this;
    while (k > 0) {
        if (k & 1) r = r * base;
        base = base * base;
        k >>= 1;
    }
    return r;
}

LaurentPoly qq_factor(int nvars) {
    return LaurentPoly::q_power(nvars, 1) - LaurentPoly::q_power(nvars, -1);
}

LaurentPoly one_minus_t(int nvars) {
    return LaurentPoly::one(nvars) - LaurentPoly::q_power(nvars, -2);
}

LaurentPoly minus_t(int nvars) {
    return -LaurentPoly::q_power(nvars, -2);
}

LaurentPoly exact_div_qfactor(const LaurentPoly& p, int d) {
    if (d < 0) throw std::logic_error("exact_div_qfactor: negative power");
    if (d == 0) return p;
    // p / (q - q^-1)^d  =  p * q^d / (q^2 - 1)^d.  Work per u-monomial slice:
    // each slice is a plain Laurent polynomial in q.
    std::map<std::vector<int>, std::map<int, Rational>> slices;
    for (const auto& [mono, c] : p.terms()) slices[mono.u][mono.q + d] = c;

    LaurentPoly out(p.nvars());
    for (auto& [uexp, slice] : slices) {
        std::map<int, Rational> cur = std::move(slice);
        for (int round = 0; round < d; ++round) {
            if (cur.empty()) break;
            int lo = cur.begin()->first;
            // shift to an ordinary polynomial in q
            std::vector<Rational> g;
            for (const auto& [e, c] : cur) {
                int idx = e - lo;
                if (static_cast<int>(g.size()) <= idx) g.resize(idx + 1);
                g[idx] = c;
            }
            // long division by q^2 - 1, highest degree first
            std::vector<Rational> h(g.size() >= 2 ? g.size() - 2 : 0);
            for (int k = static_cast<int>(g.size()) - 1; k >= 2; --k) {
                if (g[k] == 0) continue;
                Rational c = g[k];
                h[k - 2] = c;
                g[k] = 0;
                g[k - 2] += c;
            }
            if ((g.size() > 0 && g[0] != 0) || (g.size() > 1 && g[1] != 0))
                throw NonzeroRemainder("exact_div_qfactor: not divisible by (q - q^-1)");
            cur.clear();
            for (int k = 0; k < static_cast<int>(h.size()); ++k)
                if (h[k] != 0) cur[k + lo] = h[k];
        }
        for (const auto& [e, c] : cur) out.add_term(Monomial{e, uexp}, c);
    }
    return out;
}

namespace {

// Raises a single-term polynomial to an integer power, allowing negatives.
LaurentPoly monomial_power(const LaurentPoly& img, int e, int nvars) {
    if (e >= 0) return img.pow(e);
    if (img.term_count() != 1)
        throw InvalidSubstitution("substitute: q bound to a non-monomial but negative exponents occur");
    const auto& [mono, c] = *img.terms().begin();
    Monomial inv;
    inv.q = -mono.q;
    inv.u.resize(mono.u.size());
    for (std::size_t i = 0; i < mono.u.size(); ++i) {
        if (mono.u[i] != 0)
            throw InvalidSubstitution("substitute: image of q is not invertible in the Laurent ring");
        inv.u[i] = 0;
    }
    inv.u.resize(static_cast<std::size_t>(nvars), 0);
    LaurentPoly base = LaurentPoly::monomial(nvars, make_rational(rat_den(c), rat_num(c)), inv.q, inv.u);
    return base.pow(-e);
}

bool contains_var(const LaurentPoly& p, int var /*0 = q, i>0 = u_i*/) {
    for (const auto& [mono, c] : p.terms()) {
        if (var == 0) {
            if (mono.q != 0) return true;
        } else if (static_cast<int>(mono.u.size()) >= var && mono.u[var - 1] != 0) {
            return true;
        }
    }
    return false;
}

}  // namespace

LaurentPoly substitute(const LaurentPoly& p, const Substitution& s) {
    int nv = p.nvars();
    if (s.q && contains_var(*s.q, 0)) throw CyclicBinding("substitute: q appears in its own image");
    for (std::size_t i = 0; i < s.u.size(); ++i) {
        if (s.u[i]) {
            if (contains_var(*s.u[i], static_cast<int>(i) + 1))
                throw CyclicBinding("substitute: u" + std::to_string(i + 1) + " appears in its own image");
            nv = std::max(nv, s.u[i]->nvars());
        }
    }
    if (s.q) nv = std::max(nv, s.q->nvars());
    if (s.q && s.q->term_count() != 1 && s.q->term_count() != 0)
        throw InvalidSubstitution("substitute: image of q must be a Laurent monomial");

    LaurentPoly out(nv);
    for (const auto& [mono, c] : p.terms()) {
        LaurentPoly term = LaurentPoly::constant(nv, c);
        if (mono.q != 0) {
            if (s.q) {
                term = term * monomial_power(*s.q, mono.q, nv);
            } else {
                term = term * LaurentPoly::q_power(nv, mono.q);
            }
        }
        for (std::size_t i = 0; i < mono.u.size(); ++i) {
            int e = mono.u[i];
            if (e == 0) continue;
            if (i < s.u.size() && s.u[i]) {
                term = term * s.u[i]->pow(e);
            } else {
                term = term * LaurentPoly::u_var(nv, static_cast<int>(i) + 1, e);
            }
        }
        out += term;
    }
    return out;
}

LaurentPoly substitute_u(const LaurentPoly& p, int i, const LaurentPoly& image) {
    Substitution s;
    s.u.resize(static_cast<std::size_t>(i));
    s.u[i - 1] = image;
    return substitute(p, s);
}

namespace {

std::string var_name(int i, const std::vector<std::string>* u_names) {
    if (u_names && i - 1 < static_cast<int>(u_names->size())) return (*u_names)[i - 1];
    return "u" + std::to_string(i);
}

std::string term_body(const Monomial& m, const Rational& abs_coeff,
                      const std::vector<std::string>* u_names, bool latex) {
    std::vector<std::string> factors;
    if (m.q != 0) {
        if (latex) {
            factors.push_back(m.q == 1 ? "q" : "q^{" + std::to_string(m.q) + "}");
        } else {
            factors.push_back(m.q == 1 ? "q" : "q^" + std::to_string(m.q));
        }
    }
    for (std::size_t i = 0; i < m.u.size(); ++i) {
        if (m.u[i] == 0) continue;
        std::string v = var_name(static_cast<int>(i) + 1, u_names);
        if (latex && !u_names) v = "u_{" + std::to_string(i + 1) + "}";
        if (m.u[i] == 1) {
            factors.push_back(v);
        } else if (latex) {
            factors.push_back(v + "^{" + std::to_string(m.u[i]) + "}");
        } else {
            factors.push_back(v + "^" + std::to_string(m.u[i]));
        }
    }
    std::string body;
    if (factors.empty()) {
        body = to_string(abs_coeff);
    } else {
        if (abs_coeff != 1) body = to_string(abs_coeff) + (latex ? "" : "*");
        for (std::size_t i = 0; i < factors.size(); ++i) {
            if (i > 0 && !latex) body += "*";
            body += factors[i];
        }
    }
    return body;
}

std::string render(const LaurentPoly& p, const std::vector<std::string>* u_names, bool latex) {
    if (p.is_zero()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [mono, c] : p.terms()) {
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        if (first) {
            if (neg) out += "-";
            first = false;
        } else {
            out += neg ? " - " : " + ";
        }
        out += term_body(mono, a, u_names, latex);
    }
    return out;
}

}  // namespace

std::string to_string(const LaurentPoly& p, const std::vector<std::string>* u_names) {
    return render(p, u_names, false);
}

std::string to_latex(const LaurentPoly& p, const std::vector<std::string>* u_names) {
    return render(p, u_names, true);
}

namespace {

struct Cursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eof() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
};

BigInt parse_int(Cursor& c) {
    c.skip_ws();
    std::size_t start = c.pos;
    if (c.pos < c.s.size() && (c.s[c.pos] == '-' || c.s[c.pos] == '+')) ++c.pos;
    std::size_t digits = 0;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
        ++c.pos;
        ++digits;
    }
    if (digits == 0) throw ParseError("expected integer", start);
    return BigInt(c.s.substr(start, c.pos - start));
}

int parse_exponent(Cursor& c) {
    if (c.peek() == '^') {
        ++c.pos;
        BigInt e = parse_int(c);
        return static_cast<int>(e.convert_to<long long>());
    }
    return 1;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, int nvars) {
    Cursor c{text};
    LaurentPoly out(nvars);
    if (c.eof()) throw ParseError("empty polynomial", 0);
    bool first = true;
    while (!c.eof()) {
        int sign = 1;
        char ch = c.peek();
        if (ch == '+' || ch == '-') {
            sign = (ch == '-') ? -1 : 1;
            ++c.pos;
        } else if (!first) {
            throw ParseError("expected '+' or '-' between terms", c.pos);
        }
        first = false;

        Rational coeff = sign;
        int qexp = 0;
        std::vector<int> uexp(nvars, 0);
        bool saw_factor = false;
        for (;;) {
            char f = c.peek();
            if (std::isdigit(static_cast<unsigned char>(f))) {
                BigInt num = parse_int(c);
                BigInt den = 1;
                if (c.peek() == '/') {
                    ++c.pos;
                    den = parse_int(c);
                }
                coeff *= make_rational(num, den);
                saw_factor = true;
            } else if (f == 'q') {
                ++c.pos;
                qexp += parse_exponent(c);
                saw_factor = true;
            } else if (f == 'u') {
                std::size_t at = c.pos;
                ++c.pos;
                BigInt idx = parse_int(c);
                int i = static_cast<int>(idx.convert_to<long long>());
                if (i < 1 || i > nvars) throw ParseError("u index out of range", at);
                int e = parse_exponent(c);
                if (e < 0) throw ParseError("negative u exponent", at);
                uexp[i - 1] += e;
                saw_factor = true;
            } else {
                break;
            }
            if (c.peek() == '*') {
                ++c.pos;
                continue;
            }
            break;
        }
        if (!saw_factor) throw ParseError("expected term", c.pos);
        out.add_term(Monomial{qexp, uexp}, coeff);
    }
    return out;
}

}  // namespace cyclochar
