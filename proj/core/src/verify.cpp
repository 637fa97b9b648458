#include "cyclochar/verify.hpp"

#include "cyclochar/cyclotomic.hpp"
#include "cyclochar/formulas.hpp"
#include "cyclochar/oracle.hpp"

namespace cyclochar {

namespace {

std::string pair_key(const MultiPartition& lam, const MultiPartition& mu) {
    return to_string(lam) + " / " + to_string(mu);
}

}  // namespace

VerifyResult verify_oracle(int m, int n) {
    CharEngine engine(m);
    OracleEngine oracle(m);
    for (const MultiPartition& mu : multipartitions(n, m))
        for (const MultiPartition& lam : multipartitions(n, m))
            if (engine.chi(lam, mu) != oracle.oracle_chi(lam, mu))
                return {false, pair_key(lam, mu)};
    return {true, {}};
}

VerifyResult verify_dual(int m, int n) {
    CharEngine engine(m);
    for (const MultiPartition& lam : multipartitions(n, m))
        for (const MultiPartition& mu : multipartitions(n, m))
            if (engine.chi(lam, mu) != engine.chi_dual(lam, mu))
                return {false, pair_key(lam, mu)};
    return {true, {}};
}

VerifyResult verify_tableau(int m, int n) {
    CharEngine engine(m);
    for (const MultiPartition& lam : multipartitions(n, m))
        for (const MultiPartition& mu : multipartitions(n, m))
            if (engine.chi(lam, mu) != engine.chi_tableau_sum(lam, mu))
                return {false, pair_key(lam, mu)};
    return {true, {}};
}

VerifyResult verify_pivot(int m, int n) {
    CharEngine engine(m);
    for (const MultiPartition& lam : multipartitions(n, m)) {
        for (const MultiPartition& mu : multipartitions(n, m)) {
            if (mu.size() == 0) continue;
            LaurentPoly reference = engine.chi(lam, mu);
            for (int r = 0; r < m; ++r)
                for (int j = 0; j < mu.comp(r).length(); ++j)
                    if (engine.chi_with_pivot(lam, mu, r, j) != reference)
                        return {false, pair_key(lam, mu) + " pivot (" + std::to_string(r + 1) +
                                           "," + std::to_string(j + 1) + ")"};
        }
    }
    return {true, {}};
}

VerifyResult verify_regev(int m, int n) {
    CharEngine engine(m);
    std::vector<int> ones(static_cast<std::size_t>(m), 1);
    for (const MultiPartition& mu : multipartitions(n, m)) {
        LaurentPoly super = regev_value(ones, ones, mu);
        LaurentPoly lhs = hook_sum_lhs(mu, engine);
        if (super != lhs) return {false, to_string(mu) + " (super vs hook lhs)"};
        if (lhs != hook_sum_rhs(mu)) return {false, to_string(mu) + " (hook lhs vs rhs)"};
    }
    return {true, {}};
}

VerifyResult verify_hooksum(int m, int n) {
    CharEngine engine(m);
    for (const MultiPartition& mu : multipartitions(n, m))
        if (hook_sum_lhs(mu, engine) != hook_sum_rhs(mu)) return {false, to_string(mu)};
    return {true, {}};
}

VerifyResult verify_lpar(int m, int n) {
    CharEngine engine(m);
    for (const MultiPartition& lam : multipartitions(n, m))
        for (const MultiPartition& mu : multipartitions(n, m))
            if (lpar_chi(lam, mu) != engine.chi(lam, mu)) return {false, pair_key(lam, mu)};
    return {true, {}};
}

VerifyResult verify_bitrace(int m, int n) {
    CharEngine engine(m);
    std::vector<MultiPartition> all = multipartitions(n, m);
    for (const MultiPartition& mu : all)
        for (const MultiPartition& nu : all)
            if (mbtr_combinatorial(mu, nu) != mbtr_via_characters(mu, nu, engine))
                return {false, pair_key(mu, nu)};
    return {true, {}};
}

VerifyResult verify_orthogonality(int m, int n) {
    CycTable table = reflection_table(chi_table(m, n));
    std::size_t dim = table.order.size();
    for (std::size_t a = 0; a < dim; ++a) {
        for (std::size_t b = 0; b < dim; ++b) {
            CyclotomicNumber sum(m);
            for (std::size_t l = 0; l < dim; ++l)
                sum += table.values[l][a] * conj(table.values[l][b]);
            CyclotomicNumber expected(m);
            if (a == b) {
                const MultiPartition& mu = table.order[a];
                BigInt v = 1;
                for (int i = 0; i < m; ++i) v *= z_value(mu.comp(i));
                for (int i = 0; i < mu.length(); ++i) v *= m;
                expected = CyclotomicNumber::from_rational(m, Rational(v));
            }
            if (sum != expected)
                return {false, pair_key(table.order[a], table.order[b])};
        }
    }
    return {true, {}};
}

VerifyResult verify_all(int m, int n) {
    struct Named {
        const char* name;
        VerifyResult (*fn)(int, int);
    };
    static const Named suites[] = {
        {"oracle", verify_oracle},       {"dual", verify_dual},
        {"tableau", verify_tableau},     {"pivot", verify_pivot},
        {"regev", verify_regev},         {"hooksum", verify_hooksum},
        {"lpar", verify_lpar},           {"bitrace", verify_bitrace},
        {"orthogonality", verify_orthogonality},
    };
    for (const Named& s : suites) {
        VerifyResult r = s.fn(m, n);
        if (!r.ok) return {false, std::string(s.name) + ": " + r.detail};
    }
    return {true, {}};
}

}  // namespace cyclochar
