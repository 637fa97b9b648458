#include "cyclochar/skew.hpp"

#include <algorithm>

namespace cyclochar {

// Each skew row is the contiguous column interval (mu_i, lam_i].  Two
// consecutive rows belong to one component iff their intervals share exactly
// one column; sharing two or more columns forms a 2x2 block.
std::optional<SkewAnalysis> analyze_skew(const Partition& lam, const Partition& mu) {
    if (!lam.contains(mu)) return std::nullopt;

    SkewAnalysis res;
    res.is_generalized_ribbon = true;

    bool prev_nonempty = false;
    int component_rows = 0;
    for (int i = 0; i < lam.length(); ++i) {
        int lo = mu.part(i) + 1, hi = lam.part(i);  // 1-based columns of row i
        if (lo > hi) {
            if (prev_nonempty) res.ht += component_rows - 1;
            prev_nonempty = false;
            continue;
        }
        if (prev_nonempty) {
            int plo = mu.part(i - 1) + 1, phi = lam.part(i - 1);
            int overlap = std::min(hi, phi) - std::max(lo, plo) + 1;
            if (overlap >= 2) return SkewAnalysis{false, 0, 0};
            if (overlap == 1) {
                ++component_rows;
            } else {
                res.ht += component_rows - 1;
                ++res.cc;
                component_rows = 1;
            }
        } else {
            ++res.cc;
            component_rows = 1;
        }
        prev_nonempty = true;
    }
    if (prev_nonempty) res.ht += component_rows - 1;
    return res;
}

std::vector<RibbonRemoval> generalized_ribbon_removals(const Partition& lam, int k) {
    std::vector<RibbonRemoval> out;
    if (k < 0 || k > lam.size()) return out;
    if (k == 0) {
        out.push_back(RibbonRemoval{lam, 0, 0});
        return out;
    }
    for (const Partition& nu : subpartitions_with_size(lam, lam.size() - k)) {
        auto analysis = analyze_skew(lam, nu);
        if (analysis && analysis->is_generalized_ribbon)
            out.push_back(RibbonRemoval{nu, analysis->cc, analysis->ht});
    }
    return out;
}

}  // namespace cyclochar
