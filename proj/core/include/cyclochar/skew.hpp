#pragma once

#include <optional>

#include "cyclochar/partition.hpp"

namespace cyclochar {

// Verdict for a skew shape lam/mu.  When the shape is a generalized ribbon
// (no 2x2 block), cc counts edge-connected components and ht sums
// (rows spanned - 1) over the components; the empty shape has cc = ht = 0.
struct SkewAnalysis {
    bool is_generalized_ribbon = false;
    int cc = 0;
    int ht = 0;

    friend bool operator==(const SkewAnalysis&, const SkewAnalysis&) = default;
};

// nullopt when mu is not contained in lam.
std::optional<SkewAnalysis> analyze_skew(const Partition& lam, const Partition& mu);

// All ways to strip k cells from lam leaving a partition nu with lam/nu a
// generalized ribbon; k == 0 yields lam itself with cc = ht = 0.
struct RibbonRemoval {
    Partition target;
    int cc = 0;
    int ht = 0;
};
std::vector<RibbonRemoval> generalized_ribbon_removals(const Partition& lam, int k);

}  // namespace cyclochar
