#include "cyclochar/oracle.hpp"

#include <algorithm>
#include <mutex>
#include <unordered_map>

#include "cyclochar/errors.hpp"
#include "cyclochar/skew.hpp"

namespace cyclochar {

std::map<Partition, LaurentPoly> hl_in_p(int r, int nvars) {
    std::map<Partition, LaurentPoly> out;
    for (const Partition& lam : partitions_of(r)) {
        LaurentPoly c = LaurentPoly::one(nvars);
        for (int part : lam.parts())
            c = c * (LaurentPoly::one(nvars) - LaurentPoly::q_power(nvars, -2 * part));
        c = c * make_rational(1, z_value(lam));
        out.emplace(lam, std::move(c));
    }
    return out;
}

PSymElem psym_mul(const PSymElem& a, const PSymElem& b) {
    PSymElem r;
    r.m = a.m;
    r.denom_pow = a.denom_pow + b.denom_pow;
    for (const auto& [ka, ca] : a.terms) {
        for (const auto& [kb, cb] : b.terms) {
            std::vector<Partition> key(static_cast<std::size_t>(a.m));
            for (int i = 0; i < a.m; ++i) {
                std::vector<int> parts = ka[static_cast<std::size_t>(i)].parts();
                const auto& more = kb[static_cast<std::size_t>(i)].parts();
                parts.insert(parts.end(), more.begin(), more.end());
                key[static_cast<std::size_t>(i)] = Partition::from_unsorted(std::move(parts));
            }
            LaurentPoly c = ca * cb;
            auto it = r.terms.find(key);
            if (it == r.terms.end()) {
                r.terms.emplace(std::move(key), std::move(c));
            } else {
                it->second += c;
                if (it->second.is_zero()) r.terms.erase(it);
            }
        }
    }
    return r;
}

namespace {

// q^k sum over size vectors c of u_{top(c)}^i  x  (tensor product of one-row
// expansions), with one deferred (q - q^-1)^{-1}.
PSymElem q_part_elem(int i, int k, int m) {
    PSymElem out;
    out.m = m;
    out.denom_pow = 1;
    for (const Composition& c : compositions_of(k, m)) {
        int top = 0;
        for (int j = m - 1; j >= 0; --j)
            if (c[static_cast<std::size_t>(j)] > 0) {
                top = j + 1;
                break;
            }
        // tensor product over the m alphabets
        std::vector<std::map<Partition, LaurentPoly>> factors;
        factors.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) factors.push_back(hl_in_p(c[static_cast<std::size_t>(j)], m));

        std::vector<std::map<Partition, LaurentPoly>::const_iterator> its;
        for (const auto& f : factors) its.push_back(f.begin());
        for (;;) {
            std::vector<Partition> key;
            key.reserve(static_cast<std::size_t>(m));
            LaurentPoly coeff = LaurentPoly::q_power(m, k);
            if (top > 0) coeff = coeff * LaurentPoly::u_var(m, top, i);
            for (int j = 0; j < m; ++j) {
                key.push_back(its[static_cast<std::size_t>(j)]->first);
                coeff = coeff * its[static_cast<std::size_t>(j)]->second;
            }
            auto it = out.terms.find(key);
            if (it == out.terms.end()) {
                out.terms.emplace(std::move(key), std::move(coeff));
            } else {
                it->second += coeff;
                if (it->second.is_zero()) out.terms.erase(it);
            }
            int j = m - 1;
            while (j >= 0) {
                if (++its[static_cast<std::size_t>(j)] != factors[static_cast<std::size_t>(j)].end()) break;
                its[static_cast<std::size_t>(j)] = factors[static_cast<std::size_t>(j)].begin();
                --j;
            }
            if (j < 0) break;
        }
    }
    return out;
}

}  // namespace

PSymElem q_mu_in_p(const MultiPartition& mu) {
    int m = mu.components();
    PSymElem acc;
    acc.m = m;
    acc.terms.emplace(std::vector<Partition>(static_cast<std::size_t>(m)), LaurentPoly::one(m));
    for (int i = 0; i < m; ++i)
        for (int part : mu.comp(i).parts()) acc = psym_mul(acc, q_part_elem(i + 1, part, m));
    return acc;
}

long long sn_character(const Partition& lam, const Partition& rho) {
    if (lam.size() != rho.size()) throw SizeMismatch("sn_character: |lambda| != |rho|");
    static std::mutex mu;
    static std::unordered_map<std::string, long long> memo;

    if (rho.empty()) return 1;
    std::string key = to_string(lam) + "#" + to_string(rho);
    {
        std::lock_guard lock(mu);
        auto it = memo.find(key);
        if (it != memo.end()) return it->second;
    }
    int k = rho.parts()[0];
    Partition rest = rho.remove_part(0);
    long long total = 0;
    for (const Partition& nu : subpartitions_with_size(lam, lam.size() - k)) {
        auto analysis = analyze_skew(lam, nu);
        if (!analysis || !analysis->is_generalized_ribbon || analysis->cc != 1) continue;
        long long sub = sn_character(nu, rest);
        total += (analysis->ht % 2 == 0) ? sub : -sub;
    }
    std::lock_guard lock(mu);
    memo.emplace(key, total);
    return total;
}

LaurentPoly OracleEngine::oracle_chi(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.size() != mu.size()) throw SizeMismatch("oracle_chi: |lambda| != |mu|");
    auto it = cache_.find(mu);
    if (it == cache_.end()) it = cache_.emplace(mu, q_mu_in_p(mu)).first;
    const PSymElem& elem = it->second;

    LaurentPoly total(m_);
    for (const auto& [rho, coeff] : elem.terms) {
        long long prod = 1;
        bool zero = false;
        for (int i = 0; i < m_ && !zero; ++i) {
            if (rho[static_cast<std::size_t>(i)].size() != lam.comp(i).size()) {
                zero = true;
                break;
            }
            prod *= sn_character(lam.comp(i), rho[static_cast<std::size_t>(i)]);
            if (prod == 0) zero = true;
        }
        if (zero) continue;
        total += coeff * Rational(prod);
    }
    LaurentPoly result = exact_div_qfactor(total, elem.denom_pow);
    if (!result.integer_coefficients())
        throw NonIntegerCoefficient("oracle_chi: non-integer coefficient after discharge");
    return result;
}

LaurentPoly hl_inner_product(const Composition& tau, const Composition& rho, int nvars) {
    auto expand = [&](const Composition& comp) {
        std::map<Partition, LaurentPoly> acc;
        acc.emplace(Partition(), LaurentPoly::one(nvars));
        for (int part : comp) {
            std::map<Partition, LaurentPoly> factor = hl_in_p(part, nvars);
            std::map<Partition, LaurentPoly> next;
            for (const auto& [pa, ca] : acc) {
                for (const auto& [pb, cb] : factor) {
                    std::vector<int> parts = pa.parts();
                    parts.insert(parts.end(), pb.parts().begin(), pb.parts().end());
                    Partition key = Partition::from_unsorted(std::move(parts));
                    LaurentPoly c = ca * cb;
                    auto it = next.find(key);
                    if (it == next.end()) {
                        next.emplace(std::move(key), std::move(c));
                    } else {
                        it->second += c;
                    }
                }
            }
            acc = std::move(next);
        }
        return acc;
    };
    std::map<Partition, LaurentPoly> a = expand(tau), b = expand(rho);
    LaurentPoly total(nvars);
    for (const auto& [p, ca] : a) {
        auto it = b.find(p);
        if (it == b.end()) continue;
        total += ca * it->second * Rational(z_value(p));
    }
    return total;
}

}  // namespace cyclochar
