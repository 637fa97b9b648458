#include "cyclochar/partition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "cyclochar/errors.hpp"

namespace cyclochar {

Partition::Partition(std::vector<int> parts) {
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    while (!parts.empty() && parts.back() == 0) parts.pop_back();
    for (int p : parts)
        if (p < 0) throw std::invalid_argument("Partition: negative part");
    parts_ = std::move(parts);
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::from_unsorted(std::vector<int> parts) {
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Partition(std::move(parts));
}

bool Partition::contains(const Partition& mu) const {
    if (mu.length() > length()) return false;
    for (int i = 0; i < mu.length(); ++i)
        if (mu.parts_[i] > parts_[i]) return false;
    return true;
}

Partition Partition::remove_part(int j) const {
    if (j < 0 || j >= length()) throw std::out_of_range("Partition::remove_part");
    std::vector<int> parts = parts_;
    parts.erase(parts.begin() + j);
    return Partition(std::move(parts));
}

bool Partition::is_hook() const {
    if (parts_.empty()) return true;
    for (std::size_t i = 1; i < parts_.size(); ++i)
        if (parts_[i] != 1) return false;
    return true;
}

MultiPartition::MultiPartition(std::vector<Partition> comps) : comps_(std::move(comps)) {}

MultiPartition MultiPartition::empty(int m) {
    return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(m)));
}

int MultiPartition::size() const {
    int s = 0;
    for (const Partition& p : comps_) s += p.size();
    return s;
}

int MultiPartition::length() const {
    int l = 0;
    for (const Partition& p : comps_) l += p.length();
    return l;
}

bool MultiPartition::all_empty() const {
    for (const Partition& p : comps_)
        if (!p.empty()) return false;
    return true;
}

MultiPartition MultiPartition::with_comp(int i, Partition p) const {
    std::vector<Partition> comps = comps_;
    comps[static_cast<std::size_t>(i)] = std::move(p);
    return MultiPartition(std::move(comps));
}

bool MultiPartition::contains(const MultiPartition& mu) const {
    if (mu.components() != components()) return false;
    for (int i = 0; i < components(); ++i)
        if (!comps_[i].contains(mu.comps_[i])) return false;
    return true;
}

int MultiPartition::nonempty_count() const {
    int c = 0;
    for (const Partition& p : comps_)
        if (!p.empty()) ++c;
    return c;
}

int MultiPartition::last_nonempty() const {
    for (int i = components() - 1; i >= 0; --i)
        if (!comps_[i].empty()) return i;
    return -1;
}

int positive_length(const Composition& c) {
    int l = 0;
    for (int x : c)
        if (x > 0) ++l;
    return l;
}

int composition_weight(const Composition& c) {
    return std::accumulate(c.begin(), c.end(), 0);
}

namespace {

void gen_partitions(int n, int max_part, int max_len, std::vector<int>& acc,
                    std::vector<Partition>& out) {
    if (n == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (max_len == 0) return;
    for (int p = std::min(n, max_part); p >= 1; --p) {
        acc.push_back(p);
        gen_partitions(n - p, p, max_len - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
    return partitions_of_max_length(n, n);
}

std::vector<Partition> partitions_of_max_length(int n, int max_len) {
    std::vector<Partition> out;
    std::vector<int> acc;
    if (n >= 0) gen_partitions(n, n, max_len, acc, out);
    return out;
}

std::vector<Composition> compositions_of(int n, int m) {
    std::vector<Composition> out;
    Composition acc(static_cast<std::size_t>(m), 0);
    // descending lexicographic: first coordinate from n down to 0
    auto rec = [&](auto&& self, int pos, int rest) -> void {
        if (pos == m - 1) {
            acc[static_cast<std::size_t>(pos)] = rest;
            out.push_back(acc);
            return;
        }
        for (int v = rest; v >= 0; --v) {
            acc[static_cast<std::size_t>(pos)] = v;
            self(self, pos + 1, rest - v);
        }
    };
    if (m >= 1) rec(rec, 0, n);
    return out;
}

std::vector<MultiPartition> multipartitions(int n, int m) {
    std::vector<MultiPartition> out;
    for (const Composition& sizes : compositions_of(n, m)) {
        std::vector<std::vector<Partition>> lists;
        lists.reserve(static_cast<std::size_t>(m));
        for (int i = 0; i < m; ++i) lists.push_back(partitions_of(sizes[static_cast<std::size_t>(i)]));
        std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
        for (;;) {
            std::vector<Partition> comps;
            comps.reserve(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) comps.push_back(lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]]);
            out.push_back(MultiPartition(std::move(comps)));
            int i = m - 1;
            while (i >= 0) {
                if (++idx[static_cast<std::size_t>(i)] < lists[static_cast<std::size_t>(i)].size()) break;
                idx[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    return out;
}

namespace {

void gen_subpartitions(const std::vector<int>& lam, std::size_t i, int prev, int target,
                       std::vector<int>& acc, std::vector<Partition>& out) {
    if (target == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (i == lam.size()) return;
    // upper bound on what the remaining rows can still contribute
    int rest = 0;
    int cap = prev;
    for (std::size_t j = i; j < lam.size(); ++j) {
        cap = std::min(cap, lam[j]);
        rest += cap;
    }
    if (rest < target) return;
    int up = std::min(prev, lam[i]);
    for (int x = std::min(up, target); x >= 0; --x) {
        acc.push_back(x);
        gen_subpartitions(lam, i + 1, x, target - x, acc, out);
        acc.pop_back();
        if (x == 0) break;  // trailing zeros only shrink to the same partition
    }
}

}  // namespace

std::vector<Partition> subpartitions_with_size(const Partition& lam, int s) {
    std::vector<Partition> out;
    if (s < 0 || s > lam.size()) return out;
    std::vector<int> acc;
    gen_subpartitions(lam.parts(), 0, s == 0 ? 0 : lam.part(0), s, acc, out);
    return out;
}

std::vector<MultiPartition> hook_multipartitions(int n, int m) {
    std::vector<MultiPartition> out;
    for (const MultiPartition& mp : multipartitions(n, m)) {
        bool ok = true;
        for (int i = 0; i < m; ++i)
            if (!mp.comp(i).is_hook()) {
                ok = false;
                break;
            }
        if (ok) out.push_back(mp);
    }
    return out;
}

BigInt syt_count(const Partition& lam) {
    if (lam.empty()) return 1;
    // conjugate column lengths
    std::vector<int> cols(static_cast<std::size_t>(lam.part(0)), 0);
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j) ++cols[static_cast<std::size_t>(j)];
    BigInt hooks = 1;
    for (int i = 0; i < lam.length(); ++i)
        for (int j = 0; j < lam.parts()[i]; ++j)
            hooks *= (lam.parts()[i] - j) + (cols[static_cast<std::size_t>(j)] - i) - 1;
    return factorial(lam.size()) / hooks;
}

BigInt z_value(const Partition& lam) {
    BigInt z = 1;
    int i = 0;
    while (i < lam.length()) {
        int j = i;
        while (j < lam.length() && lam.parts()[j] == lam.parts()[i]) ++j;
        int mult = j - i;
        for (int k = 0; k < mult; ++k) z *= lam.parts()[i];
        z *= factorial(mult);
        i = j;
    }
    return z;
}

std::string to_string(const Partition& p) {
    std::string out;
    for (int i = 0; i < p.length(); ++i) {
        if (i) out += ",";
        out += std::to_string(p.parts()[i]);
    }
    return out;
}

std::string to_string(const MultiPartition& mp) {
    std::string out = "(";
    for (int i = 0; i < mp.components(); ++i) {
        if (i) out += ",";
        out += "(" + to_string(mp.comp(i)) + ")";
    }
    out += ")";
    return out;
}

namespace {

struct TextCursor {
    const std::string& s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }
    void expect(char c) {
        if (peek() != c)
            throw ParseError(std::string("expected '") + c + "'", pos);
        ++pos;
    }
    int read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) throw ParseError("expected integer", start);
        return std::stoi(s.substr(start, pos - start));
    }
};

Partition read_component(TextCursor& c) {
    c.expect('(');
    std::vector<int> parts;
    if (c.peek() != ')') {
        parts.push_back(c.read_int());
        while (c.peek() == ',') {
            ++c.pos;
            parts.push_back(c.read_int());
        }
    }
    std::size_t at = c.pos;
    c.expect(')');
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw ParseError("parts must weakly decrease", at);
    return Partition(std::move(parts));
}

}  // namespace

Partition parse_partition(const std::string& text) {
    TextCursor c{text};
    std::vector<int> parts;
    if (c.peek() != '\0') {
        parts.push_back(c.read_int());
        while (c.peek() == ',') {
            ++c.pos;
            parts.push_back(c.read_int());
        }
    }
    if (c.peek() != '\0') throw ParseError("trailing characters", c.pos);
    for (std::size_t i = 0; i + 1 < parts.size(); ++i)
        if (parts[i] < parts[i + 1]) throw ParseError("parts must weakly decrease", 0);
    return Partition(std::move(parts));
}

MultiPartition parse_multipartition(const std::string& text) {
    TextCursor c{text};
    c.expect('(');
    std::vector<Partition> comps;
    comps.push_back(read_component(c));
    while (c.peek() == ',') {
        ++c.pos;
        comps.push_back(read_component(c));
    }
    c.expect(')');
    if (c.peek() != '\0') throw ParseError("trailing characters", c.pos);
    return MultiPartition(std::move(comps));
}

std::uint64_t canonical_order_hash(int m, int n) {
    std::string blob;
    for (const MultiPartition& mp : multipartitions(n, m)) {
        blob += to_string(mp);
        blob += ";";
    }
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : blob) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace cyclochar
