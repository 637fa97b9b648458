#include "cyclochar/boundary.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclochar/errors.hpp"

namespace cyclochar {

Word word_of(const Partition& lam, int pad_leading_zeros, int pad_trailing_ones) {
    Word w;
    w.reserve(static_cast<std::size_t>(lam.size() + lam.length() + pad_leading_zeros + pad_trailing_ones));
    for (int i = 0; i < pad_leading_zeros; ++i) w.push_back(0);
    // walk rows bottom-up: horizontal run up to the row length, then one
    // vertical step per row
    int prev = 0;
    for (int i = lam.length() - 1; i >= 0; --i) {
        int run = lam.parts()[i] - prev;
        for (int k = 0; k < run; ++k) w.push_back(1);
        w.push_back(0);
        prev = lam.parts()[i];
    }
    for (int i = 0; i < pad_trailing_ones; ++i) w.push_back(1);
    return w;
}

BoundarySeq boundary_sequence(const Partition& lam, int pad_leading_zeros, int pad_trailing_ones) {
    BoundarySeq seq;
    seq.bits = word_of(lam, pad_leading_zeros, pad_trailing_ones);
    seq.anchor = static_cast<int>(std::count(seq.bits.begin(), seq.bits.end(), 0));
    return seq;
}

std::vector<int> padded_parts_from_word(const Word& w) {
    std::vector<int> rows;  // built bottom-up
    int ones = 0;
    for (std::uint8_t b : w) {
        if (b)
            ++ones;
        else
            rows.push_back(ones);
    }
    std::reverse(rows.begin(), rows.end());
    return rows;
}

Partition partition_from_word(const Word& w) {
    return Partition(padded_parts_from_word(w));
}

Partition partition_from_boundary(const BoundarySeq& seq) {
    int zeros = static_cast<int>(std::count(seq.bits.begin(), seq.bits.end(), 0));
    if (seq.anchor != zeros)
        throw MalformedSequence("boundary sequence anchor does not balance the word");
    return partition_from_word(seq.bits);
}

Word padded_word(const Partition& lam, int m) {
    Word w = word_of(lam);
    int zeros = static_cast<int>(std::count(w.begin(), w.end(), 0));
    int lead = (m - zeros % m) % m;
    int trail = (m - static_cast<int>(w.size() + lead) % m) % m;
    Word out;
    out.reserve(w.size() + static_cast<std::size_t>(lead + trail));
    out.insert(out.end(), static_cast<std::size_t>(lead), 0);
    out.insert(out.end(), w.begin(), w.end());
    out.insert(out.end(), static_cast<std::size_t>(trail), 1);
    return out;
}

Word quotient_compose_word(const MultiPartition& quot) {
    int m = quot.components();
    int rows = 0, width = 0;
    for (int i = 0; i < m; ++i) {
        rows = std::max(rows, quot.comp(i).length());
        width = std::max(width, quot.comp(i).part(0));
    }
    std::vector<Word> words;
    words.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        const Partition& p = quot.comp(i);
        words.push_back(word_of(p, rows - p.length(), width - p.part(0)));
    }
    Word out;
    out.reserve(static_cast<std::size_t>(m * (rows + width)));
    for (int pos = 0; pos < rows + width; ++pos)
        for (int i = 0; i < m; ++i) out.push_back(words[static_cast<std::size_t>(i)][static_cast<std::size_t>(pos)]);
    return out;
}

Partition quotient_compose(const MultiPartition& quot) {
    return partition_from_word(quotient_compose_word(quot));
}

std::optional<MultiPartition> quotient_decompose(const Partition& lam, int m) {
    Word w = padded_word(lam, m);
    std::vector<Partition> comps;
    comps.reserve(static_cast<std::size_t>(m));
    int total = 0;
    for (int i = 0; i < m; ++i) {
        Word sub;
        for (std::size_t p = static_cast<std::size_t>(i); p < w.size(); p += static_cast<std::size_t>(m))
            sub.push_back(w[p]);
        Partition comp = partition_from_word(sub);
        total += comp.size();
        comps.push_back(std::move(comp));
    }
    if (lam.size() != m * total) return std::nullopt;  // nonempty m-core
    return MultiPartition(std::move(comps));
}

std::vector<int> row_color(const Partition& lam, int L, int m, int k) {
    if (L < lam.length()) throw std::invalid_argument("row_color: L shorter than the partition");
    std::vector<int> colors(static_cast<std::size_t>(L));
    for (int i = 1; i <= L; ++i) {
        long long v = static_cast<long long>(lam.part(i - 1)) + k - i + 1;
        colors[static_cast<std::size_t>(i - 1)] = static_cast<int>(((v - 1) % m + m) % m) + 1;
    }
    return colors;
}

long long inv_count(const std::vector<int>& a) {
    long long inv = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = i + 1; j < a.size(); ++j)
            if (a[i] > a[j]) ++inv;
    return inv;
}

long long min_cross(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) throw NotPermutation("min_cross: length mismatch");
    // stable matching: r-th occurrence of each value in a pairs with the r-th
    // occurrence in b; that matching has the minimal crossing number
    std::map<int, std::vector<int>> positions;
    for (int i = static_cast<int>(b.size()) - 1; i >= 0; --i)
        positions[b[static_cast<std::size_t>(i)]].push_back(i);
    std::vector<int> sigma;
    sigma.reserve(a.size());
    for (int v : a) {
        auto it = positions.find(v);
        if (it == positions.end() || it->second.empty())
            throw NotPermutation("min_cross: b is not a rearrangement of a");
        sigma.push_back(it->second.back());
        it->second.pop_back();
    }
    return inv_count(sigma);
}

namespace {

struct SwapPair {
    int u, v;  // 0-based positions in the word, word[u] == 1, word[v] == 0
};

void enumerate_swap_sets(const Word& w, const std::vector<int>& zero_prefix,
                         const std::vector<int>& class_positions, std::size_t start,
                         int remaining, std::vector<SwapPair>& acc,
                         std::vector<std::vector<SwapPair>>& out) {
    if (remaining == 0) {
        if (!acc.empty()) out.push_back(acc);
        return;
    }
    for (std::size_t ui = start; ui < class_positions.size(); ++ui) {
        int u = class_positions[ui];
        if (w[static_cast<std::size_t>(u)] != 1) continue;
        for (std::size_t vi = ui + 1; vi < class_positions.size(); ++vi) {
            int v = class_positions[vi];
            if (w[static_cast<std::size_t>(v)] != 0) continue;
            int dist = v - u;
            if (dist > remaining) break;
            acc.push_back(SwapPair{u, v});
            enumerate_swap_sets(w, zero_prefix, class_positions, vi + 1, remaining - dist, acc, out);
            acc.pop_back();
        }
    }
}

}  // namespace

std::vector<ColoredRemoval> colored_removals_word(const Word& w, int size, int color, int m) {
    std::vector<ColoredRemoval> out;
    if (size == 0) {
        out.push_back(ColoredRemoval{w, 0, 0, 0});
        return out;
    }
    if (size % m != 0) throw std::invalid_argument("colored_removals: size must be divisible by m");

    // zero_prefix[p] = number of 0s strictly before position p
    std::vector<int> zero_prefix(w.size() + 1, 0);
    for (std::size_t p = 0; p < w.size(); ++p)
        zero_prefix[p + 1] = zero_prefix[p] + (w[p] == 0 ? 1 : 0);

    std::vector<int> class_positions;  // 0-based positions congruent to color mod m
    for (std::size_t p = static_cast<std::size_t>(color - 1); p < w.size(); p += static_cast<std::size_t>(m))
        class_positions.push_back(static_cast<int>(p));

    std::vector<std::vector<SwapPair>> sets;
    std::vector<SwapPair> acc;
    enumerate_swap_sets(w, zero_prefix, class_positions, 0, size, acc, sets);

    int k_shift = zero_prefix[w.size()];
    Partition before = partition_from_word(w);
    std::vector<int> colors_before = row_color(before, k_shift, m, k_shift);

    for (const auto& set : sets) {
        ColoredRemoval r;
        r.word = w;
        r.cc = static_cast<int>(set.size());
        for (const SwapPair& sp : set) {
            r.ht += zero_prefix[sp.v] - zero_prefix[sp.u + 1];  // zeros strictly inside (u, v)
            r.word[static_cast<std::size_t>(sp.u)] = 0;
            r.word[static_cast<std::size_t>(sp.v)] = 1;
        }
        Partition after = partition_from_word(r.word);
        r.icross = min_cross(colors_before, row_color(after, k_shift, m, k_shift));
        out.push_back(std::move(r));
    }
    return out;
}

std::vector<ColoredRemovalResult> colored_removals(const Partition& lam, int size, int color, int m) {
    Word w = padded_word(lam, m);
    std::vector<ColoredRemovalResult> out;
    for (ColoredRemoval& r : colored_removals_word(w, size, color, m))
        out.push_back(ColoredRemovalResult{partition_from_word(r.word), r.cc, r.ht, r.icross});
    return out;
}

}  // namespace cyclochar
