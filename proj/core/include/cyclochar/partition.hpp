#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cyclochar/rational.hpp"

namespace cyclochar {

// Integer partition in canonical form: weakly decreasing positive parts.
// Fixed-length zero-padded views are produced on demand where an algorithm
// needs them (boundary words, row colors).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);       // must be weakly decreasing; zeros stripped
    static Partition from_unsorted(std::vector<int> parts);  // sorts descending

    int size() const { return size_; }    // |lambda|
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    const std::vector<int>& parts() const { return parts_; }
    // part(i) is 0-based and reads 0 beyond the length
    int part(int i) const { return i < length() ? parts_[i] : 0; }

    bool contains(const Partition& mu) const;
    Partition remove_part(int j) const;  // drop the 0-based j-th part
    bool is_hook() const;                // shape (a, 1^b) or empty

    friend auto operator<=>(const Partition& a, const Partition& b) {
        return a.parts_ <=> b.parts_;
    }
    friend bool operator==(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
    int size_ = 0;
};

// m-tuple of partitions.
class MultiPartition {
public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> comps);
    static MultiPartition empty(int m);

    int components() const { return static_cast<int>(comps_.size()); }
    int size() const;    // sum of component sizes
    int length() const;  // sum of component lengths
    bool all_empty() const;
    const Partition& comp(int i) const { return comps_[i]; }
    const std::vector<Partition>& comps() const { return comps_; }
    MultiPartition with_comp(int i, Partition p) const;
    bool contains(const MultiPartition& mu) const;
    // #{i : comp(i) nonempty} and the largest such index (0-based, -1 if none)
    int nonempty_count() const;
    int last_nonempty() const;

    friend auto operator<=>(const MultiPartition& a, const MultiPartition& b) {
        return a.comps_ <=> b.comps_;
    }
    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;

private:
    std::vector<Partition> comps_;
};

// Compositions are plain vectors of nonnegative entries; l(.) counts the
// strictly positive ones.
using Composition = std::vector<int>;
int positive_length(const Composition& c);
int composition_weight(const Composition& c);

// Enumerations.  All orders are fixed: partitions descending-lexicographic,
// compositions descending-lexicographic, multipartitions by size vector then
// componentwise partitions (the "canonical-v1" order of the table files).
std::vector<Partition> partitions_of(int n);
std::vector<Partition> partitions_of_max_length(int n, int max_len);
std::vector<Composition> compositions_of(int n, int m);
std::vector<MultiPartition> multipartitions(int n, int m);
std::vector<Partition> subpartitions_with_size(const Partition& lam, int s);
std::vector<MultiPartition> hook_multipartitions(int n, int m);

// Number of standard Young tableaux via the hook length formula.
BigInt syt_count(const Partition& lam);
// Centralizer order statistic z_lambda = prod_i i^{m_i} m_i!.
BigInt z_value(const Partition& lam);

// Text forms: "3,1" for partitions ("" is empty), "((3,1),(2,1,1),(2,2))"
// for multipartitions with "()" for an empty component.
std::string to_string(const Partition& p);
std::string to_string(const MultiPartition& mp);
Partition parse_partition(const std::string& text);
MultiPartition parse_multipartition(const std::string& text);

// Stable 64-bit digest of the canonical enumeration, embedded in table files.
std::uint64_t canonical_order_hash(int m, int n);

}  // namespace cyclochar
