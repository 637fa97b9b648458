#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "cyclochar/characters.hpp"
#include "cyclochar/formulas.hpp"
#include "cyclochar/oracle.hpp"
#include "cyclochar/table.hpp"

using namespace cyclochar;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }
MultiPartition MP(std::vector<Partition> comps) { return MultiPartition(std::move(comps)); }

MultiPartition eps_col(int m, int j, int n) {  // (1^n) in slot j (1-based)
    MultiPartition mp = MultiPartition::empty(m);
    return mp.with_comp(j - 1, P(std::vector<int>(n, 1)));
}

MultiPartition eps_row(int m, int j, int n) {  // (n) in slot j (1-based)
    MultiPartition mp = MultiPartition::empty(m);
    return mp.with_comp(j - 1, P({n}));
}

}  // namespace

TEST_CASE("weight of skew tuples") {
    int m = 5;
    LaurentPoly t = LaurentPoly::q_power(m, -2);
    std::vector<std::pair<Partition, Partition>> pairs = {
        {P({3, 2, 1}), P({2, 1, 1})}, {P({3, 3, 1, 1}), P({2, 1, 1})}, {P({}), P({})},
        {P({2, 2, 2}), P({2, 1})},    {P({4}), P({2})},
    };
    std::vector<SkewAnalysis> skews;
    for (const auto& [lam, mu] : pairs) skews.push_back(*analyze_skew(lam, mu));
    for (int r : {1, 2}) {
        LaurentPoly expected = LaurentPoly::u_var(m, 5, r) * minus_t(m).pow(2).pow(1);
        expected = LaurentPoly::u_var(m, 5, r) * LaurentPoly::q_power(m, -4) *
                   one_minus_t(m).pow(6);
        CHECK(wt_skew(skews, 5, r, t) == expected);
    }

    std::vector<SkewAnalysis> empty(3, SkewAnalysis{true, 0, 0});
    CHECK(wt_skew(empty, 0, 2, LaurentPoly::q_power(3, -2)) == LaurentPoly::one(3));

    std::vector<SkewAnalysis> cell = {*analyze_skew(P({1}), P({}))};
    CHECK(wt_skew(cell, 1, 1, LaurentPoly::q_power(1, -2)) ==
          LaurentPoly::u_var(1, 1) * one_minus_t(1));

    std::vector<SkewAnalysis> bad = {SkewAnalysis{false, 0, 0}};
    CHECK_THROWS_AS(wt_skew(bad, 1, 1, LaurentPoly::q_power(1, -2)), NotRibbon);
}

TEST_CASE("two-cell removals of ((2,2),(4))") {
    CharEngine engine(2);
    MultiPartition lam = MP({P({2, 2}), P({4})});
    auto steps = engine.removals_multi(lam, 2);
    REQUIRE(steps.size() == 4);

    // expected (target, cc, ht, s) quadruples of the worked example
    std::map<std::string, std::tuple<int, int, int>> expected = {
        {"((1,1),(4))", {1, 1, 1}},
        {"((2),(4))", {1, 0, 1}},
        {"((2,2),(2))", {1, 0, 2}},
        {"((2,1),(3))", {2, 0, 2}},
    };
    std::set<std::string> seen;
    for (const RemovalStep& s : steps) {
        auto it = expected.find(to_string(s.target));
        REQUIRE(it != expected.end());
        auto [cc, ht, rm] = it->second;
        CHECK(s.cc == cc);
        CHECK(s.ht == ht);
        CHECK(s.s == rm);
        seen.insert(to_string(s.target));
    }
    CHECK(seen.size() == 4);
}

TEST_CASE("removal edge cases") {
    CharEngine engine2(2);
    auto one = engine2.removals_multi(MP({P({1}), P({})}), 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].target.all_empty());
    CHECK(one[0].cc == 1);
    CHECK(one[0].ht == 0);
    CHECK(one[0].s == 1);

    CharEngine engine1(1);
    CHECK(engine1.removals_multi(MP({P({2, 2})}), 4).empty());
}

TEST_CASE("worked character value of ((2,2),(4)) at ((2,1),(3,2))") {
    CharEngine engine(2);
    int m = 2;
    MultiPartition lam = MP({P({2, 2}), P({4})});
    MultiPartition mu = MP({P({2, 1}), P({3, 2})});
    MultiPartition rest = MP({P({2, 1}), P({3})});

    LaurentPoly t = LaurentPoly::q_power(m, -2);
    auto u = [&](int i, int e) { return LaurentPoly::u_var(m, i, e); };
    // q^2/(q-q^-1) times the four weighted sub-characters, assembled with the
    // folded Laurent coefficients
    LaurentPoly expected =
        (u(1, 2) * minus_t(m) * engine.chi(MP({P({1, 1}), P({4})}), rest) +
         u(1, 2) * engine.chi(MP({P({2}), P({4})}), rest) +
         u(2, 2) * engine.chi(MP({P({2, 2}), P({2})}), rest) +
         u(2, 2) * one_minus_t(m) * engine.chi(MP({P({2, 1}), P({3})}), rest)) *
        LaurentPoly::q_power(m, 1);
    CHECK(engine.chi(lam, mu) == expected);
}

TEST_CASE("base case and one-row characters") {
    CharEngine engine(3);
    CHECK(engine.chi(MultiPartition::empty(3), MultiPartition::empty(3)) ==
          LaurentPoly::one(3));

    for (const MultiPartition& mu : multipartitions(4, 3)) {
        if (mu.size() == 0) continue;
        LaurentPoly expected = LaurentPoly::q_power(3, 4 - mu.length()) *
                               LaurentPoly::u_var(3, 1, static_cast<int>(l_statistic(mu)));
        CHECK(engine.chi(eps_row(3, 1, 4), mu) == expected);
    }
}

TEST_CASE("one-column and one-row closed forms") {
    for (int m = 1; m <= 3; ++m) {
        CharEngine engine(m);
        for (int n = 1; n <= 4; ++n) {
            for (const MultiPartition& lam : multipartitions(n, m)) {
                for (int j = 1; j <= m; ++j) {
                    // chi(lam, eps^1_j): standard multitableau count times the
                    // forced u-monomial
                    BigInt count = factorial(n);
                    LaurentPoly mono = LaurentPoly::one(m);
                    for (int i = 0; i < m; ++i) {
                        count = count * syt_count(lam.comp(i)) / factorial(lam.comp(i).size());
                        if (lam.comp(i).size() > 0)
                            mono = mono * LaurentPoly::u_var(m, i + 1, j * lam.comp(i).size());
                    }
                    CHECK(engine.chi(lam, eps_col(m, j, n)) == mono * Rational(count));

                    // chi(lam, eps^n_j): hook formula
                    bool all_hooks = true;
                    int heights = 0;
                    for (int i = 0; i < m; ++i) {
                        if (!lam.comp(i).is_hook()) all_hooks = false;
                        heights += std::max(0, lam.comp(i).length() - 1);
                    }
                    LaurentPoly expected(m);
                    if (all_hooks) {
                        int L = lam.nonempty_count();
                        int s = lam.last_nonempty() + 1;
                        expected = LaurentPoly::q_power(m, n - 1) *
                                   LaurentPoly::u_var(m, s, j) * one_minus_t(m).pow(L - 1) *
                                   minus_t(m).pow(heights);
                    }
                    CHECK(engine.chi(lam, eps_row(m, j, n)) == expected);
                }
            }
        }
    }
}

TEST_CASE("upper one-column character") {
    int m = 2;
    CharEngine engine(m);
    for (int n = 1; n <= 4; ++n) {
        for (const MultiPartition& mu : multipartitions(n, m)) {
            if (mu.size() == 0) continue;
            for (int j = 1; j <= m; ++j) {
                LaurentPoly v = engine.chi(eps_col(m, j, n), mu);
                LaurentPoly expected =
                    LaurentPoly::q_power(m, mu.length() - n) *
                    LaurentPoly::u_var(m, j, static_cast<int>(l_statistic(mu)));
                if ((n - mu.length()) % 2 != 0) expected = -expected;
                CHECK(v == expected);
            }
        }
    }
}

TEST_CASE("pivot independence") {
    for (int m = 1; m <= 2; ++m) {
        CharEngine engine(m);
        for (int n = 1; n <= 4; ++n) {
            for (const MultiPartition& lam : multipartitions(n, m)) {
                for (const MultiPartition& mu : multipartitions(n, m)) {
                    LaurentPoly ref = engine.chi(lam, mu);
                    for (int r = 0; r < m; ++r)
                        for (int j = 0; j < mu.comp(r).length(); ++j)
                            CHECK(engine.chi_with_pivot(lam, mu, r, j) == ref);
                }
            }
        }
    }
}

TEST_CASE("tableau chain of shape ((4,3),(2),(1,1))") {
    int m = 3;
    LaurentPoly t = LaurentPoly::q_power(m, -2);
    // the four strips of the worked chain, bottom label first
    struct Strip {
        std::vector<std::pair<Partition, Partition>> skews;
        int s;
        int label_component;  // 1-based content component
    };
    std::vector<Strip> strips = {
        {{{P({2, 1}), P({})}, {P({}), P({})}, {P({}), P({})}}, 1, 1},
        {{{P({3, 2}), P({2, 1})}, {P({}), P({})}, {P({}), P({})}}, 1, 1},
        {{{P({4, 3}), P({3, 2})}, {P({1}), P({})}, {P({1}), P({})}}, 3, 2},
        {{{P({4, 3}), P({4, 3})}, {P({2}), P({1})}, {P({1, 1}), P({1})}}, 3, 3},
    };
    LaurentPoly weight = LaurentPoly::one(m);
    for (const Strip& strip : strips) {
        std::vector<SkewAnalysis> skews;
        for (const auto& [lam, mu] : strip.skews) skews.push_back(*analyze_skew(lam, mu));
        weight = weight * wt_skew(skews, strip.s, strip.label_component, t);
    }
    LaurentPoly expected = LaurentPoly::u_var(m, 1, 2) * LaurentPoly::u_var(m, 3, 5) *
                           minus_t(m) * one_minus_t(m).pow(9);
    CHECK(weight == expected);
}

TEST_CASE("tableau sum equals the recursion") {
    CharEngine engine(2);
    MultiPartition lam = MP({P({2}), P({1})});
    MultiPartition mu = MP({P({1}), P({2})});
    CHECK(engine.chi_tableau_sum(lam, mu) == engine.chi(lam, mu));
    CHECK(engine.chi_tableau_sum(eps_col(2, 1, 1), eps_col(2, 1, 1)) ==
          LaurentPoly::u_var(2, 1));
    for (const MultiPartition& a : multipartitions(3, 2))
        for (const MultiPartition& b : multipartitions(3, 2))
            CHECK(engine.chi_tableau_sum(a, b) == engine.chi(a, b));
}

TEST_CASE("dual recursion") {
    CharEngine engine(2);
    CHECK(engine.chi_dual(MultiPartition::empty(2), MultiPartition::empty(2)) ==
          LaurentPoly::one(2));

    for (int n = 1; n <= 4; ++n)
        for (const MultiPartition& mu : multipartitions(n, 2)) {
            if (mu.size() == 0) continue;
            CHECK(engine.chi_dual(eps_row(2, 1, n), mu) ==
                  LaurentPoly::q_power(2, n - mu.length()) *
                      LaurentPoly::u_var(2, 1, static_cast<int>(l_statistic(mu))));
        }

    MultiPartition lam = MP({P({1, 1}), P({1})});
    MultiPartition mu = MP({P({1}), P({1, 1})});
    CHECK(engine.chi_dual(lam, mu) == engine.chi(lam, mu));

    for (const MultiPartition& a : multipartitions(3, 2))
        for (const MultiPartition& b : multipartitions(3, 2))
            CHECK(engine.chi_dual(a, b) == engine.chi(a, b));
}

TEST_CASE("component moving identity") {
    CharEngine engine2(2);
    CHECK(engine2.move_components_check(MP({P({}), P({2})}), 2, MP({P({1}), P({1})})));
    CharEngine engine3(3);
    CHECK(engine3.move_components_check(MP({P({}), P({}), P({1, 1})}), 3,
                                        MP({P({1}), P({}), P({1})})));
    for (const MultiPartition& mu : multipartitions(3, 3)) {
        CHECK(engine3.move_components_check(MP({P({}), P({2, 1}), P({})}), 2, mu));
        CHECK(engine3.move_components_check(MP({P({}), P({}), P({3})}), 3, mu));
    }
}

TEST_CASE("integrality and degree bounds") {
    CharEngine engine(2);
    for (int n = 1; n <= 3; ++n) {
        for (const MultiPartition& lam : multipartitions(n, 2)) {
            for (const MultiPartition& mu : multipartitions(n, 2)) {
                LaurentPoly v = engine.chi(lam, mu);
                CHECK(v.integer_coefficients());
                long long usum_expected = l_statistic(mu);
                int bound = n - mu.length();
                for (const auto& [mono, c] : v.terms()) {
                    CHECK(mono.q <= bound);
                    CHECK(mono.q >= -bound);
                    long long usum = 0;
                    for (int i = 0; i < 2; ++i) usum += mono.u[static_cast<std::size_t>(i)];
                    CHECK(usum == usum_expected);
                }
            }
        }
    }
}

TEST_CASE("type A structure after u -> 1") {
    // the m = 1 recursion with u1 -> 1 must match a direct single-partition
    // recursion with coefficients q^{k-1} (1-q^-2)^{d-1} (-q^-2)^{ht}
    CharEngine engine(1);
    std::map<std::pair<Partition, Partition>, LaurentPoly> memo;
    std::function<LaurentPoly(const Partition&, const Partition&)> psi =
        [&](const Partition& lam, const Partition& mu) {
            if (mu.empty()) return LaurentPoly::one(1);
            auto key = std::make_pair(lam, mu);
            auto it = memo.find(key);
            if (it != memo.end()) return it->second;
            int k = mu.parts().back();
            Partition rest = mu.remove_part(mu.length() - 1);
            LaurentPoly total(1);
            for (const RibbonRemoval& rem : generalized_ribbon_removals(lam, k)) {
                LaurentPoly coeff = LaurentPoly::q_power(1, k - 1) *
                                    one_minus_t(1).pow(rem.cc - 1) * minus_t(1).pow(rem.ht);
                total += coeff * psi(rem.target, rest);
            }
            return memo.emplace(key, std::move(total)).first->second;
        };
    for (int n = 1; n <= 5; ++n)
        for (const Partition& lam : partitions_of(n))
            for (const Partition& mu : partitions_of(n))
                CHECK(specialize_typeA(engine.chi(MP({lam}), MP({mu}))) == psi(lam, mu));

    // frozen values: chi^{(2)}_{(2)} = q and chi^{(1,1)}_{(2)} = -q^-1
    CHECK(specialize_typeA(engine.chi(MP({P({2})}), MP({P({2})}))) == LaurentPoly::q_power(1, 1));
    CHECK(specialize_typeA(engine.chi(MP({P({1, 1})}), MP({P({2})}))) ==
          -LaurentPoly::q_power(1, -1));
}

TEST_CASE("table generation is deterministic") {
    CharTable t0 = chi_table(1, 0);
    REQUIRE(t0.order.size() == 1);
    CHECK(t0.values[0][0] == LaurentPoly::one(1));

    CharTable a = chi_table(2, 2, 1);
    CharTable b = chi_table(2, 2, 4);
    REQUIRE(a.order.size() == 5);
    CHECK(table_to_json(a) == table_to_json(b));

    OracleEngine oracle(2);
    for (std::size_t i = 0; i < a.order.size(); ++i)
        for (std::size_t j = 0; j < a.order.size(); ++j)
            CHECK(a.values[i][j] == oracle.oracle_chi(a.order[i], a.order[j]));
}
