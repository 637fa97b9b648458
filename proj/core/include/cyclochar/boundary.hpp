#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclochar/errors.hpp"
#include "cyclochar/partition.hpp"

namespace cyclochar {

// 0/1 encoding of the southeast boundary of a partition, read from the
// southwest vertex to the northeast vertex: 1 = horizontal step, 0 = vertical
// step.  The anchor splits the word so that the number of 1s before it equals
// the number of 0s after it; for any valid word that position is exactly the
// total number of 0s.
struct BoundarySeq {
    std::vector<std::uint8_t> bits;
    int anchor = 0;

    friend bool operator==(const BoundarySeq&, const BoundarySeq&) = default;
};

BoundarySeq boundary_sequence(const Partition& lam, int pad_leading_zeros = 0,
                              int pad_trailing_ones = 0);
// Validates the anchor and rebuilds the partition; MalformedSequence when the
// anchor does not match the bits.
Partition partition_from_boundary(const BoundarySeq& seq);

// Raw word helpers shared by the quotient bijection and the colored-removal
// machinery.  A word is just the bits of a BoundarySeq.
using Word = std::vector<std::uint8_t>;

Word word_of(const Partition& lam, int pad_leading_zeros = 0, int pad_trailing_ones = 0);
Partition partition_from_word(const Word& w);
// Row lengths top row first, one entry per 0 in the word (zero rows kept).
std::vector<int> padded_parts_from_word(const Word& w);
// Canonical padding: leading zeros then trailing ones so that both the zero
// count and the total length are divisible by m.
Word padded_word(const Partition& lam, int m);

// Interleaves the component boundary words; the result is the unique
// partition with empty m-core whose m-quotient is `quot`.
Partition quotient_compose(const MultiPartition& quot);
Word quotient_compose_word(const MultiPartition& quot);
// nullopt when lam has a nonempty m-core.
std::optional<MultiPartition> quotient_decompose(const Partition& lam, int m);

// Row colors in {1..m}: color(i) == lam_i + k - i + 1 (mod m) for rows
// 1..L of the zero-padded partition, where k is the zero count of the padded
// boundary word the caller chose.
std::vector<int> row_color(const Partition& lam, int L, int m, int k);

long long inv_count(const std::vector<int>& a);
// Minimum number of crossings over all matchings of equal values; realized by
// matching the r-th occurrence in `a` to the r-th occurrence in `b`.
long long min_cross(const std::vector<int>& a, const std::vector<int>& b);

// One generalized-ribbon removal whose components all carry the same color.
// `icross` is the crossing statistic between the row-color sequences before
// and after the removal, at the fixed padded length of the word.
struct ColoredRemoval {
    Word word;
    int cc = 0;
    int ht = 0;
    long long icross = 0;
};

// All removals of `size` cells colored `color` (1-based) from the partition
// encoded by `w`; swap pairs live at word positions congruent to the color
// mod m.  size == 0 yields the single empty removal.
std::vector<ColoredRemoval> colored_removals_word(const Word& w, int size, int color, int m);

struct ColoredRemovalResult {
    Partition target;
    int cc = 0;
    int ht = 0;
    long long icross = 0;
};

std::vector<ColoredRemovalResult> colored_removals(const Partition& lam, int size, int color,
                                                   int m);

}  // namespace cyclochar
