#include "cyclochar/formulas.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "cyclochar/errors.hpp"
#include "cyclochar/skew.hpp"

namespace cyclochar {

int MultiMatrix::total_rows() const {
    int r = 0;
    for (const Matrix& mat : mats) r += static_cast<int>(mat.size());
    return r;
}

int MultiMatrix::nonzero_entries() const {
    int c = 0;
    for (const Matrix& mat : mats)
        for (const auto& row : mat)
            for (int e : row)
                if (e != 0) ++c;
    return c;
}

Composition MultiMatrix::column_profile(int i) const {
    Composition out;
    for (const Matrix& mat : mats)
        for (const auto& row : mat) out.push_back(row[static_cast<std::size_t>(i)]);
    return out;
}

LaurentPoly u_weight(const MultiMatrix& M, int nvars) {
    LaurentPoly w = LaurentPoly::one(nvars);
    for (std::size_t r = 0; r < M.mats.size(); ++r) {
        for (const auto& row : M.mats[r]) {
            int f = 0;
            for (int j = static_cast<int>(row.size()) - 1; j >= 0; --j)
                if (row[static_cast<std::size_t>(j)] != 0) {
                    f = j + 1;
                    break;
                }
            if (f == 0) throw ZeroRow("u_weight: all-zero row");
            w = w * LaurentPoly::u_var(nvars, f, static_cast<int>(r) + 1);
        }
    }
    return w;
}

std::vector<MultiMatrix> multimatrices_for(const MultiPartition& mu) {
    int m = mu.components();
    // one composition list per row of each matrix
    std::vector<std::vector<Composition>> row_choices;
    std::vector<int> owner;  // which matrix the row belongs to
    for (int r = 0; r < m; ++r)
        for (int part : mu.comp(r).parts()) {
            row_choices.push_back(compositions_of(part, m));
            owner.push_back(r);
        }

    std::vector<MultiMatrix> out;
    std::vector<std::size_t> idx(row_choices.size(), 0);
    for (;;) {
        MultiMatrix M;
        M.mats.assign(static_cast<std::size_t>(m), Matrix{});
        for (std::size_t t = 0; t < row_choices.size(); ++t)
            M.mats[static_cast<std::size_t>(owner[t])].push_back(row_choices[t][idx[t]]);
        out.push_back(std::move(M));
        std::size_t t = row_choices.size();
        while (t > 0) {
            --t;
            if (++idx[t] < row_choices[t].size()) break;
            idx[t] = 0;
            if (t == 0) return out;
        }
        if (row_choices.empty()) return out;
    }
}

std::vector<Matrix> margin_matrices(const Composition& row_sums, const Composition& col_sums) {
    if (composition_weight(row_sums) != composition_weight(col_sums))
        throw MarginMismatch("margin_matrices: totals differ");
    std::vector<Matrix> out;
    Matrix acc;
    Composition budget = col_sums;

    std::function<void(std::size_t)> fill_row = [&](std::size_t r) {
        if (r == row_sums.size()) {
            for (int b : budget)
                if (b != 0) return;
            out.push_back(acc);
            return;
        }
        std::vector<int> row(col_sums.size(), 0);
        std::function<void(std::size_t, int)> fill_cell = [&](std::size_t c, int rest) {
            if (c == col_sums.size()) {
                if (rest != 0) return;
                acc.push_back(row);
                fill_row(r + 1);
                acc.pop_back();
                return;
            }
            int cap = std::min(rest, budget[c]);
            for (int v = cap; v >= 0; --v) {
                row[c] = v;
                budget[c] -= v;
                fill_cell(c + 1, rest - v);
                budget[c] += v;
                row[c] = 0;
            }
        };
        fill_cell(0, row_sums[r]);
    };
    fill_row(0);
    return out;
}

LaurentPoly qint(int k, const LaurentPoly& base) {
    if (k < 0) throw std::invalid_argument("qint: negative k");
    int nv = base.nvars();
    if (k == 0) return LaurentPoly::one(nv);
    LaurentPoly sum(nv);
    LaurentPoly p = LaurentPoly::one(nv);
    for (int i = 0; i < k; ++i) {
        sum += p;
        p = p * base;
    }
    return sum;
}

LaurentPoly wt_q_matrix(const Matrix& A, const LaurentPoly& base) {
    int nv = base.nvars();
    LaurentPoly w = LaurentPoly::one(nv);
    LaurentPoly square = (base - LaurentPoly::one(nv)).pow(2);
    LaurentPoly base2 = base * base;
    for (const auto& row : A)
        for (int e : row) {
            if (e < 0) throw std::invalid_argument("wt_q_matrix: negative entry");
            if (e > 0) w = w * square * qint(e, base2);
        }
    return w;
}

namespace {

// Inner factor of the super-representation character for one stripped part.
LaurentPoly regev_inner(int k, int r, const std::vector<int>& kvec, const std::vector<int>& lvec,
                        int m) {
    LaurentPoly total(m);
    LaurentPoly omt = one_minus_t(m);
    LaurentPoly mt = minus_t(m);

    // DFS over components; per component choose the size and the number of
    // positive parts on the horizontal and the vertical side.  The number of
    // compositions of a into t positive parts is C(a-1, t-1) and the rows /
    // columns used can be chosen in C(bound, t) ways.
    std::function<void(int, int, int, int, long long, long long, BigInt)> rec =
        [&](int i, int rest, int lensum, int arrow, long long beta_size, long long beta_len,
            BigInt mult) {
            if (i == m) {
                if (rest != 0 || arrow == 0) return;
                LaurentPoly term = LaurentPoly::u_var(m, arrow, r);
                term = term * omt.pow(lensum - 1);
                term = term * mt.pow(static_cast<int>(beta_size - beta_len));
                total += term * Rational(mult);
                return;
            }
            for (int a = 0; a <= rest; ++a) {
                int ta_max = (a == 0) ? 0 : std::min(a, kvec[static_cast<std::size_t>(i)]);
                int ta_min = (a == 0) ? 0 : 1;
                for (int ta = ta_min; ta <= ta_max || (a == 0 && ta == 0); ++ta) {
                    BigInt ma = (a == 0) ? BigInt(1)
                                         : binomial(a - 1, ta - 1) *
                                               binomial(kvec[static_cast<std::size_t>(i)], ta);
                    if (ma == 0) {
                        if (a == 0) break;
                        continue;
                    }
                    for (int b = 0; b <= rest - a; ++b) {
                        int tb_max = (b == 0) ? 0 : std::min(b, lvec[static_cast<std::size_t>(i)]);
                        int tb_min = (b == 0) ? 0 : 1;
                        for (int tb = tb_min; tb <= tb_max || (b == 0 && tb == 0); ++tb) {
                            BigInt mb = (b == 0) ? BigInt(1)
                                                 : binomial(b - 1, tb - 1) *
                                                       binomial(lvec[static_cast<std::size_t>(i)], tb);
                            if (mb == 0) {
                                if (b == 0) break;
                                continue;
                            }
                            int next_arrow = (ta + tb > 0) ? i + 1 : arrow;
                            rec(i + 1, rest - a - b, lensum + ta + tb, next_arrow,
                                beta_size + b, beta_len + tb, mult * ma * mb);
                            if (b == 0) break;
                        }
                    }
                    if (a == 0) break;
                }
            }
        };
    rec(0, k, 0, 0, 0, 0, BigInt(1));
    return total;
}

}  // namespace

LaurentPoly regev_value(const std::vector<int>& kvec, const std::vector<int>& lvec,
                        const MultiPartition& mu) {
    int m = mu.components();
    if (static_cast<int>(kvec.size()) != m || static_cast<int>(lvec.size()) != m)
        throw std::invalid_argument("regev_value: dimension vectors must have m entries");
    LaurentPoly result = LaurentPoly::q_power(m, mu.size() - mu.length());
    std::map<std::pair<int, int>, LaurentPoly> cache;
    for (int r = 0; r < m; ++r)
        for (int part : mu.comp(r).parts()) {
            auto key = std::make_pair(part, r + 1);
            auto it = cache.find(key);
            if (it == cache.end())
                it = cache.emplace(key, regev_inner(part, r + 1, kvec, lvec, m)).first;
            result = result * it->second;
        }
    return result;
}

LaurentPoly hook_sum_lhs(const MultiPartition& mu, CharEngine& engine) {
    int m = mu.components();
    LaurentPoly total(m);
    for (const MultiPartition& lam : hook_multipartitions(mu.size(), m)) {
        BigInt w = BigInt(1) << lam.nonempty_count();
        total += engine.chi(lam, mu) * Rational(w);
    }
    return total;
}

LaurentPoly hook_sum_rhs(const MultiPartition& mu) {
    int m = mu.components();
    LaurentPoly total(m);
    LaurentPoly mt = minus_t(m);
    LaurentPoly qq = qq_factor(m);
    for (const MultiMatrix& M : multimatrices_for(mu)) {
        int nz = M.nonzero_entries();
        LaurentPoly term = u_weight(M, m) * Rational(BigInt(1) << nz);
        term = term * qq.pow(nz - mu.length());
        for (const Matrix& mat : M.mats)
            for (const auto& row : mat)
                for (int e : row)
                    if (e > 0) term = term * qint(e, mt);
        total += term;
    }
    return total;
}

LaurentPoly mbtr_combinatorial(const MultiPartition& mu, const MultiPartition& nu) {
    if (mu.size() != nu.size()) throw SizeMismatch("mbtr: |mu| != |nu|");
    int m = mu.components();
    LaurentPoly base = LaurentPoly::q_power(m, -2);

    std::map<std::pair<Composition, Composition>, LaurentPoly> margin_cache;
    auto margin_wt_sum = [&](const Composition& rows, const Composition& cols) {
        auto key = std::make_pair(rows, cols);
        auto it = margin_cache.find(key);
        if (it != margin_cache.end()) return it->second;
        LaurentPoly sum(m);
        for (const Matrix& A : margin_matrices(rows, cols)) sum += wt_q_matrix(A, base);
        return margin_cache.emplace(std::move(key), std::move(sum)).first->second;
    };

    std::vector<MultiMatrix> Ms = multimatrices_for(mu);
    std::vector<MultiMatrix> Ns = multimatrices_for(nu);
    LaurentPoly total(m);
    for (const MultiMatrix& M : Ms) {
        LaurentPoly uM = u_weight(M, m);
        for (const MultiMatrix& N : Ns) {
            LaurentPoly term = uM * u_weight(N, m);
            bool dead = false;
            for (int i = 0; i < m && !dead; ++i) {
                Composition rows = M.column_profile(i);
                Composition cols = N.column_profile(i);
                if (composition_weight(rows) != composition_weight(cols)) {
                    dead = true;
                    break;
                }
                term = term * margin_wt_sum(rows, cols);
                if (term.is_zero()) dead = true;
            }
            if (!dead) total += term;
        }
    }
    total = total * LaurentPoly::q_power(m, 2 * mu.size());
    return exact_div_qfactor(total, mu.length() + nu.length());
}

LaurentPoly mbtr_via_characters(const MultiPartition& mu, const MultiPartition& nu,
                                CharEngine& engine) {
    if (mu.size() != nu.size()) throw SizeMismatch("mbtr: |mu| != |nu|");
    int m = mu.components();
    LaurentPoly total(m);
    for (const MultiPartition& lam : multipartitions(mu.size(), m))
        total += engine.chi(lam, mu) * engine.chi(lam, nu);
    return total;
}

long long l_statistic(const MultiPartition& mu) {
    long long L = 0;
    for (int i = 0; i < mu.components(); ++i)
        L += static_cast<long long>(i + 1) * mu.comp(i).length();
    return L;
}

namespace {

// All distinct orderings of tau zero-padded to m entries.
std::vector<std::vector<int>> distinct_arrangements(const Partition& tau, int m) {
    if (tau.length() > m)
        throw std::invalid_argument("eta: tau has more than m parts");
    std::vector<int> v(static_cast<std::size_t>(m), 0);
    for (int i = 0; i < tau.length(); ++i) v[static_cast<std::size_t>(i)] = tau.parts()[static_cast<std::size_t>(i)];
    std::sort(v.begin(), v.end());
    std::vector<std::vector<int>> out;
    do {
        out.push_back(v);
    } while (std::next_permutation(v.begin(), v.end()));
    return out;
}

int max_nonzero_index(const std::vector<int>& sizes) {
    for (int j = static_cast<int>(sizes.size()) - 1; j >= 0; --j)
        if (sizes[static_cast<std::size_t>(j)] != 0) return j + 1;
    return 0;
}

// One application step on the multipartition side at fixed removal sizes.
void multi_step(const MultiPartition& lam, const std::vector<int>& sizes, int r,
                const std::function<void(const LaurentPoly&, const MultiPartition&)>& emit) {
    int m = lam.components();
    int mmax = max_nonzero_index(sizes);
    if (mmax == 0) throw std::invalid_argument("eta: empty removal step");

    std::vector<std::vector<RibbonRemoval>> lists;
    lists.reserve(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        lists.push_back(generalized_ribbon_removals(lam.comp(j), sizes[static_cast<std::size_t>(j)]));
        if (lists.back().empty()) return;
    }
    LaurentPoly omt = one_minus_t(m);
    LaurentPoly mt = minus_t(m);
    std::vector<std::size_t> idx(static_cast<std::size_t>(m), 0);
    for (;;) {
        int cc = 0, ht = 0;
        std::vector<Partition> comps;
        comps.reserve(static_cast<std::size_t>(m));
        for (int j = 0; j < m; ++j) {
            const RibbonRemoval& rem = lists[static_cast<std::size_t>(j)][idx[static_cast<std::size_t>(j)]];
            comps.push_back(rem.target);
            cc += rem.cc;
            ht += rem.ht;
        }
        LaurentPoly factor = LaurentPoly::u_var(m, mmax, r);
        factor = factor * omt.pow(cc - 1);
        factor = factor * mt.pow(ht);
        emit(factor, MultiPartition(std::move(comps)));
        int j = m - 1;
        while (j >= 0) {
            if (++idx[static_cast<std::size_t>(j)] < lists[static_cast<std::size_t>(j)].size()) break;
            idx[static_cast<std::size_t>(j)] = 0;
            --j;
        }
        if (j < 0) break;
    }
}

// One application step on the partition side: colors removed in order 1..m,
// each acting on the word left by the previous color.
void partition_step(const Word& word, const std::vector<int>& sizes, int r, int m,
                    const std::function<void(const LaurentPoly&, const Word&)>& emit) {
    int mmax = max_nonzero_index(sizes);
    if (mmax == 0) throw std::invalid_argument("eta: empty removal step");
    LaurentPoly omt = one_minus_t(m);
    LaurentPoly mt = minus_t(m);

    std::function<void(int, const Word&, int, long long)> dfs = [&](int j, const Word& cur,
                                                                    int cc, long long htI) {
        if (j == m) {
            LaurentPoly factor = LaurentPoly::u_var(m, mmax, r);
            factor = factor * omt.pow(cc - 1);
            factor = factor * mt.pow(static_cast<int>(htI));
            emit(factor, cur);
            return;
        }
        for (const ColoredRemoval& rem :
             colored_removals_word(cur, m * sizes[static_cast<std::size_t>(j)], j + 1, m))
            dfs(j + 1, rem.word, cc + rem.cc, htI + rem.ht - rem.icross);
    };
    dfs(0, word, 0, 0);
}

}  // namespace

LaurentPoly eta_multipartition(const MultiPartition& lam, const std::vector<Partition>& tau_list,
                               int r) {
    int m = lam.components();
    std::function<LaurentPoly(const MultiPartition&, int)> rec = [&](const MultiPartition& cur,
                                                                     int idx) {
        if (idx < 0) return LaurentPoly::one(m);
        LaurentPoly total(m);
        for (const std::vector<int>& sizes : distinct_arrangements(tau_list[static_cast<std::size_t>(idx)], m))
            multi_step(cur, sizes, r, [&](const LaurentPoly& factor, const MultiPartition& next) {
                total += factor * rec(next, idx - 1);
            });
        return total;
    };
    return rec(lam, static_cast<int>(tau_list.size()) - 1);
}

LaurentPoly eta_partition(const Partition& lam, const std::vector<Partition>& tau_list, int r,
                          int m) {
    Word start = padded_word(lam, m);
    std::function<LaurentPoly(const Word&, int)> rec = [&](const Word& cur, int idx) {
        if (idx < 0) return LaurentPoly::one(m);
        LaurentPoly total(m);
        for (const std::vector<int>& sizes : distinct_arrangements(tau_list[static_cast<std::size_t>(idx)], m))
            partition_step(cur, sizes, r, m, [&](const LaurentPoly& factor, const Word& next) {
                total += factor * rec(next, idx - 1);
            });
        return total;
    };
    return rec(start, static_cast<int>(tau_list.size()) - 1);
}

namespace {

// Parts of mu in processing order: last part of the last component first.
std::vector<std::pair<int, int>> eta_items(const MultiPartition& mu) {
    std::vector<std::pair<int, int>> items;  // (part size, 1-based component)
    for (int r = mu.components() - 1; r >= 0; --r)
        for (int j = mu.comp(r).length() - 1; j >= 0; --j)
            items.emplace_back(mu.comp(r).parts()[static_cast<std::size_t>(j)], r + 1);
    return items;
}

}  // namespace

LaurentPoly mn_via_eta(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.size() != mu.size()) throw SizeMismatch("mn_via_eta: |lambda| != |mu|");
    int m = lam.components();
    std::vector<std::pair<int, int>> items = eta_items(mu);
    std::function<LaurentPoly(const MultiPartition&, std::size_t)> rec =
        [&](const MultiPartition& cur, std::size_t idx) {
            if (idx == items.size()) return LaurentPoly::one(m);
            auto [size, r] = items[idx];
            LaurentPoly total(m);
            for (const Partition& tau : partitions_of_max_length(size, m))
                for (const std::vector<int>& sizes : distinct_arrangements(tau, m))
                    multi_step(cur, sizes, r,
                               [&](const LaurentPoly& factor, const MultiPartition& next) {
                                   total += factor * rec(next, idx + 1);
                               });
            return total;
        };
    return LaurentPoly::q_power(m, mu.size() - mu.length()) * rec(lam, 0);
}

LaurentPoly lpar_chi(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.size() != mu.size()) throw SizeMismatch("lpar_chi: |lambda| != |mu|");
    int m = lam.components();
    Word start = quotient_compose_word(lam);
    std::vector<std::pair<int, int>> items = eta_items(mu);
    std::function<LaurentPoly(const Word&, std::size_t)> rec = [&](const Word& cur,
                                                                   std::size_t idx) {
        if (idx == items.size()) return LaurentPoly::one(m);
        auto [size, r] = items[idx];
        LaurentPoly total(m);
        for (const Partition& tau : partitions_of_max_length(size, m))
            for (const std::vector<int>& sizes : distinct_arrangements(tau, m))
                partition_step(cur, sizes, r, m, [&](const LaurentPoly& factor, const Word& next) {
                    total += factor * rec(next, idx + 1);
                });
        return total;
    };
    return LaurentPoly::q_power(m, mu.size() - mu.length()) * rec(start, 0);
}

std::vector<LaurentPoly> eta_step_branches_multi(const MultiPartition& lam,
                                                 const std::vector<int>& sizes, int r) {
    std::vector<LaurentPoly> out;
    multi_step(lam, sizes, r, [&](const LaurentPoly& factor, const MultiPartition&) {
        out.push_back(factor);
    });
    return out;
}

std::vector<LaurentPoly> eta_step_branches_partition(const Partition& lam,
                                                     const std::vector<int>& sizes, int r,
                                                     int m) {
    std::vector<LaurentPoly> out;
    Word word = padded_word(lam, m);
    partition_step(word, sizes, r, m,
                   [&](const LaurentPoly& factor, const Word&) { out.push_back(factor); });
    return out;
}

CharTable typeA_table(const CharTable& table) {
    if (table.m != 1) throw ModeMismatch("typeA specialization requires m == 1");
    CharTable out = table;
    for (auto& row : out.values)
        for (LaurentPoly& v : row) v = specialize_typeA(v);
    return out;
}

CharTable typeB_table(const CharTable& table) {
    if (table.m != 2) throw ModeMismatch("typeB specialization requires m == 2");
    CharTable out = table;
    for (auto& row : out.values)
        for (LaurentPoly& v : row) v = specialize_typeB(v);
    return out;
}

CycTable reflection_table(const CharTable& table) {
    CycTable out;
    out.m = table.m;
    out.n = table.n;
    out.order = table.order;
    out.values.reserve(table.values.size());
    for (const auto& row : table.values) {
        std::vector<CyclotomicNumber> cyc_row;
        cyc_row.reserve(row.size());
        for (const LaurentPoly& v : row) cyc_row.push_back(specialize_unity(v, table.m));
        out.values.push_back(std::move(cyc_row));
    }
    return out;
}

LaurentPoly specialize_typeA(const LaurentPoly& value) {
    return substitute_u(value, 1, LaurentPoly::one(std::max(1, value.nvars())));
}

LaurentPoly specialize_typeB(const LaurentPoly& value) {
    int nv = std::max(2, value.nvars());
    return substitute_u(value, 1, LaurentPoly::constant(nv, -1));
}

}  // namespace cyclochar
