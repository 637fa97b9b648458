#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cyclochar/boundary.hpp"
#include "cyclochar/partition.hpp"
#include "cyclochar/skew.hpp"

using namespace cyclochar;

namespace {

Partition P(std::vector<int> parts) { return Partition(std::move(parts)); }

// Independent flood-fill model of a skew shape, used as the oracle for the
// interval-based analyzer.
struct BruteSkew {
    bool contained = false;
    bool ribbon = false;
    int cc = 0, ht = 0;
};

BruteSkew brute_skew(const Partition& lam, const Partition& mu) {
    BruteSkew r;
    if (!lam.contains(mu)) return r;
    r.contained = true;
    std::set<std::pair<int, int>> cells;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = mu.part(i) + 1; j <= lam.part(i); ++j) cells.insert({i, j});
    r.ribbon = true;
    for (const auto& [i, j] : cells)
        if (cells.count({i + 1, j}) && cells.count({i, j + 1}) && cells.count({i + 1, j + 1})) {
            r.ribbon = false;
            return r;
        }
    std::set<std::pair<int, int>> seen;
    for (const auto& c : cells) {
        if (seen.count(c)) continue;
        ++r.cc;
        std::set<int> rows;
        std::vector<std::pair<int, int>> stack{c};
        seen.insert(c);
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            rows.insert(i);
            for (auto [di, dj] : {std::pair{1, 0}, {-1, 0}, {0, 1}, {0, -1}}) {
                std::pair<int, int> nb{i + di, j + dj};
                if (cells.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
            }
        }
        r.ht += static_cast<int>(rows.size()) - 1;
    }
    return r;
}

std::string word_str(const Word& w) {
    std::string s;
    for (auto b : w) s += b ? '1' : '0';
    return s;
}

Word word_from_str(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(c == '1' ? 1 : 0);
    return w;
}

}  // namespace

TEST_CASE("skew analysis basics") {
    auto a = analyze_skew(P({2, 2}), P({2, 1}));
    REQUIRE(a.has_value());
    CHECK(a->is_generalized_ribbon);
    CHECK(a->cc == 1);
    CHECK(a->ht == 0);

    auto block = analyze_skew(P({2, 2}), P({}));
    REQUIRE(block.has_value());
    CHECK_FALSE(block->is_generalized_ribbon);

    CHECK_FALSE(analyze_skew(P({1}), P({2})).has_value());
}

TEST_CASE("five-component skew aggregates to cc 6, ht 2") {
    std::vector<std::pair<Partition, Partition>> pairs = {
        {P({3, 2, 1}), P({2, 1, 1})}, {P({3, 3, 1, 1}), P({2, 1, 1})}, {P({}), P({})},
        {P({2, 2, 2}), P({2, 1})},    {P({4}), P({2})},
    };
    int cc = 0, ht = 0;
    for (const auto& [lam, mu] : pairs) {
        auto a = analyze_skew(lam, mu);
        REQUIRE(a.has_value());
        CHECK(a->is_generalized_ribbon);
        cc += a->cc;
        ht += a->ht;
    }
    CHECK(cc == 6);
    CHECK(ht == 2);
}

TEST_CASE("analyzer agrees with the flood-fill oracle inside (5,5,5,5)") {
    Partition box = P({5, 5, 5, 5});
    std::vector<Partition> all;
    for (int s = 0; s <= box.size(); ++s)
        for (const Partition& p : subpartitions_with_size(box, s)) all.push_back(p);
    for (const Partition& lam : all) {
        for (int s = 0; s <= lam.size(); ++s) {
            for (const Partition& mu : subpartitions_with_size(lam, s)) {
                BruteSkew want = brute_skew(lam, mu);
                auto got = analyze_skew(lam, mu);
                REQUIRE(got.has_value());
                CHECK(got->is_generalized_ribbon == want.ribbon);
                if (want.ribbon) {
                    CHECK(got->cc == want.cc);
                    CHECK(got->ht == want.ht);
                }
            }
        }
    }
}

TEST_CASE("subpartition streams") {
    auto s4 = subpartitions_with_size(P({2, 2}), 4);
    REQUIRE(s4.size() == 1);
    CHECK(s4[0] == P({2, 2}));

    auto s2 = subpartitions_with_size(P({2, 2}), 2);
    CHECK(s2 == std::vector<Partition>{P({2}), P({1, 1})});

    auto t2 = subpartitions_with_size(P({3, 1}), 2);
    CHECK(t2 == std::vector<Partition>{P({2}), P({1, 1})});
}

TEST_CASE("multipartition enumeration") {
    auto zero = multipartitions(0, 3);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].all_empty());

    auto m1 = multipartitions(2, 1);
    REQUIRE(m1.size() == 2);
    CHECK(m1[0].comp(0) == P({2}));
    CHECK(m1[1].comp(0) == P({1, 1}));

    CHECK(multipartitions(2, 2).size() == 5);

    // each element exactly once
    auto m23 = multipartitions(3, 2);
    std::set<MultiPartition> dedup(m23.begin(), m23.end());
    CHECK(dedup.size() == m23.size());
}

TEST_CASE("boundary sequence of (7,7,7,6,3,3,2,1)") {
    Partition lam = P({7, 7, 7, 6, 3, 3, 2, 1});
    BoundarySeq seq = boundary_sequence(lam);
    CHECK(word_str(seq.bits) == "101010011101000");
    CHECK(seq.anchor == 8);
    CHECK(partition_from_boundary(seq) == lam);

    BoundarySeq empty = boundary_sequence(P({}));
    CHECK(empty.bits.empty());
    CHECK(empty.anchor == 0);

    BoundarySeq bad = seq;
    bad.anchor = 5;
    CHECK_THROWS_AS(partition_from_boundary(bad), MalformedSequence);
}

TEST_CASE("boundary round trip with padding") {
    std::mt19937 rng(31337);
    std::uniform_int_distribution<int> piece(0, 4), pads(0, 3);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> parts;
        int budget = 20;
        while (budget > 0) {
            int p = std::min(piece(rng), budget);
            if (p == 0) break;
            parts.push_back(p);
            budget -= p;
        }
        Partition lam = Partition::from_unsorted(parts);
        BoundarySeq seq = boundary_sequence(lam, pads(rng), pads(rng));
        CHECK(partition_from_boundary(seq) == lam);
    }
}

TEST_CASE("quotient composition matches the worked example") {
    MultiPartition quot(std::vector<Partition>{P({3, 1}), P({2, 1, 1}), P({2, 2})});
    Partition glued = quotient_compose(quot);
    CHECK(glued == P({7, 7, 7, 6, 3, 3, 2, 1}));
    CHECK(word_str(quotient_compose_word(quot)) == "010101001110100011");

    auto back = quotient_decompose(glued, 3);
    REQUIRE(back.has_value());
    CHECK(*back == quot);

    CHECK(quotient_compose(MultiPartition::empty(4)) == P({}));
}

TEST_CASE("quotient bijection over P_{n,m}") {
    for (int m = 1; m <= 3; ++m) {
        for (int n = 0; n <= 4; ++n) {
            for (const MultiPartition& quot : multipartitions(n, m)) {
                Partition glued = quotient_compose(quot);
                CHECK(glued.size() == m * n);
                auto back = quotient_decompose(glued, m);
                REQUIRE(back.has_value());
                CHECK(*back == quot);
            }
        }
    }
    // a nonempty core is detected: the 2-core of (2,1) is (2,1) itself
    CHECK_FALSE(quotient_decompose(P({2, 1}), 2).has_value());
}

TEST_CASE("row colors") {
    CHECK(row_color(P({7, 7, 7, 6, 3, 3, 2, 1}), 8, 3, 9) ==
          std::vector<int>{1, 3, 2, 3, 2, 1, 2, 3});
    CHECK(row_color(P({}), 5, 1, 0) == std::vector<int>(5, 1));
    // direct congruence a_i = lam_i + k - i + 1 mod m mapped into {1..m}
    CHECK(row_color(P({2, 1}), 2, 2, 2) == std::vector<int>{2, 2});
    // padding-independence mod m of the zero count
    Partition lam = P({4, 2, 1});
    Word w = padded_word(lam, 3);
    int zeros = static_cast<int>(std::count(w.begin(), w.end(), 0));
    CHECK(row_color(lam, 4, 3, zeros) == row_color(lam, 4, 3, zeros + 3));
}

TEST_CASE("inversions and minimal crossings") {
    CHECK(inv_count({3, 1, 2}) == 2);
    std::vector<int> a = {1, 2, 5, 1, 3, 2, 7};
    std::vector<int> b = {2, 5, 1, 3, 2, 7, 1};
    CHECK(min_cross(a, b) == 5);
    CHECK(min_cross(a, a) == 0);
    CHECK_THROWS_AS(min_cross(a, std::vector<int>{1, 1, 1, 1, 1, 1, 1}), NotPermutation);
}

TEST_CASE("colored removals match quotient removals") {
    for (int m : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (const MultiPartition& quot : multipartitions(n, m)) {
                Partition glued = quotient_compose(quot);
                for (int i = 1; i <= m; ++i) {
                    for (int k = 1; k <= quot.comp(i - 1).size(); ++k) {
                        auto quotient_side = generalized_ribbon_removals(quot.comp(i - 1), k);
                        auto partition_side = colored_removals(glued, k * m, i, m);
                        REQUIRE(quotient_side.size() == partition_side.size());
                        // compare as multisets of (target quotient, cc, ht)
                        std::multiset<std::string> want, got;
                        for (const auto& r : quotient_side)
                            want.insert(to_string(r.target) + "#" + std::to_string(r.cc) + "#" +
                                        std::to_string(r.ht));
                        for (const auto& r : partition_side) {
                            auto dec = quotient_decompose(r.target, m);
                            REQUIRE(dec.has_value());
                            got.insert(to_string(dec->comp(i - 1)) + "#" + std::to_string(r.cc) +
                                       "#" + std::to_string(r.ht - r.icross));
                        }
                        CHECK(want == got);
                    }
                }
            }
        }
    }
}

TEST_CASE("ribbon removal parity law") {
    // over every colored removal at desk scale, the change of the inversion
    // number of the row colors has the parity of the crossing statistic
    for (int m : {2, 3}) {
        for (int n = 1; n <= 3; ++n) {
            for (const MultiPartition& quot : multipartitions(n, m)) {
                Word w = quotient_compose_word(quot);
                int zeros = static_cast<int>(std::count(w.begin(), w.end(), 0));
                Partition lam = partition_from_word(w);
                std::vector<int> before = row_color(lam, zeros, m, zeros);
                for (int i = 1; i <= m; ++i) {
                    for (int k = 1; k <= n; ++k) {
                        for (const ColoredRemoval& r : colored_removals_word(w, k * m, i, m)) {
                            Partition after = partition_from_word(r.word);
                            std::vector<int> colors_after = row_color(after, zeros, m, zeros);
                            long long delta = inv_count(before) - inv_count(colors_after);
                            CHECK(((delta - r.icross) % 2) == 0);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("partition text round trip") {
    CHECK(parse_partition("3,1") == P({3, 1}));
    CHECK(parse_partition("") == P({}));
    CHECK(to_string(P({3, 1})) == "3,1");
    MultiPartition mp = parse_multipartition("((3,1),(2,1,1),(2,2))");
    CHECK(mp.components() == 3);
    CHECK(to_string(mp) == "((3,1),(2,1,1),(2,2))");
    CHECK(parse_multipartition("((),())").all_empty());
    CHECK_THROWS_AS(parse_multipartition("((1,2))"), ParseError);
    std::mt19937 rng(5150);
    std::uniform_int_distribution<int> small(0, 3);
    for (int trial = 0; trial < 50; ++trial) {
        auto all = multipartitions(small(rng) + small(rng), small(rng) + 1);
        for (const MultiPartition& x : all) CHECK(parse_multipartition(to_string(x)) == x);
    }
}
