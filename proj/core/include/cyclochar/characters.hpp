#pragma once

#include <functional>
#include <mutex>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cyclochar/laurent.hpp"
#include "cyclochar/partition.hpp"
#include "cyclochar/skew.hpp"

namespace cyclochar {

// One summand of the recursion: lam shrinks to `target` by a k-generalized
// multi-ribbon with `cc` components, height `ht`, and rightmost nonempty skew
// entry `s` (1-based; 0 encodes the all-empty skew).
struct RemovalStep {
    MultiPartition target;
    int cc = 0;
    int ht = 0;
    int s = 0;
};

// Weight u_s^r (1-t)^cc (-t)^ht of a tuple of generalized-ribbon skews; the
// all-empty tuple has weight 1.  Throws NotRibbon when a component fails the
// no-2x2 condition.
LaurentPoly wt_skew(const std::vector<SkewAnalysis>& skews, int s, int r, const LaurentPoly& t);

// Picks the part of mu to strip next: (component r, part index j), 0-based.
using PivotStrategy = std::function<std::pair<int, int>(const MultiPartition&)>;
std::pair<int, int> default_pivot(const MultiPartition& mu);  // last component, last part

// Character engine for H_{m,n}(q, u_1..u_m) on the standard elements.  All
// values are exact Laurent polynomials; every public method is safe to call
// from several threads at once (the memo tables allow idempotent concurrent
// insertion).
class CharEngine {
public:
    explicit CharEngine(int m, PivotStrategy pivot = nullptr);

    int components() const { return m_; }

    // Irreducible character value by the lowering recursion; memoized.
    LaurentPoly chi(const MultiPartition& lam, const MultiPartition& mu);
    // Expands the top step at the given pivot (r, j), recursing normally.
    LaurentPoly chi_with_pivot(const MultiPartition& lam, const MultiPartition& mu, int r, int j);
    // Sum over removal chains in the fixed part order; no memoization.
    LaurentPoly chi_tableau_sum(const MultiPartition& lam, const MultiPartition& mu);
    // The raising recursion on the upper multipartition.
    LaurentPoly chi_dual(const MultiPartition& lam, const MultiPartition& mu);

    // All targets nu with |lam/nu| = k and every component skew a generalized
    // ribbon, in a fixed order; memoized per (lam, k).
    std::vector<RemovalStep> removals_multi(const MultiPartition& lam, int k);

    // Left-pads lam with j empty components against the substitution
    // u_1 -> u_j applied to the fronted arrangement.
    bool move_components_check(const MultiPartition& lam, int j, const MultiPartition& mu);

private:
    int m_;
    PivotStrategy pivot_;

    std::mutex mu_;
    std::unordered_map<std::string, LaurentPoly> chi_memo_;
    std::unordered_map<std::string, LaurentPoly> dual_memo_;
    std::unordered_map<std::string, std::vector<RemovalStep>> removal_memo_;
    std::unordered_map<std::string, std::vector<std::tuple<Partition, int, int>>> single_memo_;

    std::vector<std::tuple<Partition, int, int>> removals_single(const Partition& lam, int k);
    LaurentPoly chi_step(const MultiPartition& lam, const MultiPartition& mu, int r, int j);
    LaurentPoly tableau_rec(const MultiPartition& lam,
                            const std::vector<std::pair<int, int>>& parts, std::size_t idx);
    LaurentPoly dual_numerator(const MultiPartition& lam, const std::vector<Composition>& slots);
};

// Complete character table over the canonical enumeration of P_{n,m}.
struct CharTable {
    int m = 1;
    int n = 0;
    std::vector<MultiPartition> order;
    std::vector<std::vector<LaurentPoly>> values;  // values[i][j] = chi(order[i], order[j])
};

// Fills all |P_{n,m}|^2 entries through a shared memo; the result does not
// depend on the worker count.
CharTable chi_table(int m, int n, int jobs = 1);

}  // namespace cyclochar
