#include "cyclochar/characters.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "cyclochar/errors.hpp"

namespace cyclochar {

namespace {

std::string key_of(const MultiPartition& mp) {
    std::string k;
    for (int i = 0; i < mp.components(); ++i) {
        if (i) k += "|";
        k += to_string(mp.comp(i));
    }
    return k;
}

std::string key_of(const std::vector<Composition>& slots) {
    std::string k;
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (i) k += "|";
        for (std::size_t j = 0; j < slots[i].size(); ++j) {
            if (j) k += ",";
            k += std::to_string(slots[i][j]);
        }
    }
    return k;
}

}  // namespace

LaurentPoly wt_skew(const std::vector<SkewAnalysis>& skews, int s, int r, const LaurentPoly& t) {
    int nv = t.nvars();
    int cc = 0, ht = 0;
    for (const SkewAnalysis& a : skews) {
        if (!a.is_generalized_ribbon) throw NotRibbon("wt_skew: component contains a 2x2 block");
        cc += a.cc;
        ht += a.ht;
    }
    if (cc == 0) return LaurentPoly::one(nv);  // the all-empty skew has weight 1
    LaurentPoly w = LaurentPoly::u_var(nv, s, r);
    w = w * (LaurentPoly::one(nv) - t).pow(cc);
    w = w * (-t).pow(ht);
    return w;
}

std::pair<int, int> default_pivot(const MultiPartition& mu) {
    int r = mu.last_nonempty();
    if (r < 0) throw std::logic_error("default_pivot: empty multipartition");
    return {r, mu.comp(r).length() - 1};
}

CharEngine::CharEngine(int m, PivotStrategy pivot) : m_(m), pivot_(std::move(pivot)) {
    if (m < 1) throw std::invalid_argument("CharEngine: m must be >= 1");
    if (!pivot_) pivot_ = default_pivot;
}

std::vector<std::tuple<Partition, int, int>> CharEngine::removals_single(const Partition& lam,
                                                                         int k) {
    std::string key = to_string(lam) + "#" + std::to_string(k);
    {
        std::lock_guard lock(mu_);
        auto it = single_memo_.find(key);
        if (it != single_memo_.end()) return it->second;
    }
    std::vector<std::tuple<Partition, int, int>> out;
    for (const Partition& nu : subpartitions_with_size(lam, lam.size() - k)) {
        auto analysis = analyze_skew(lam, nu);
        if (analysis && analysis->is_generalized_ribbon)
            out.emplace_back(nu, analysis->cc, analysis->ht);
    }
    std::lock_guard lock(mu_);
    return single_memo_.emplace(key, std::move(out)).first->second;
}

std::vector<RemovalStep> CharEngine::removals_multi(const MultiPartition& lam, int k) {
    if (k < 1 || k > lam.size()) return {};
    std::string key = key_of(lam) + "#" + std::to_string(k);
    {
        std::lock_guard lock(mu_);
        auto it = removal_memo_.find(key);
        if (it != removal_memo_.end()) return it->second;
    }
    std::vector<RemovalStep> out;
    for (const Composition& c : compositions_of(k, m_)) {
        // per-component candidate lists for this size vector
        std::vector<std::vector<std::tuple<Partition, int, int>>> lists;
        lists.reserve(static_cast<std::size_t>(m_));
        bool feasible = true;
        for (int i = 0; i < m_ && feasible; ++i) {
            if (c[static_cast<std::size_t>(i)] == 0) {
                lists.push_back({{lam.comp(i), 0, 0}});
            } else {
                lists.push_back(removals_single(lam.comp(i), c[static_cast<std::size_t>(i)]));
                if (lists.back().empty()) feasible = false;
            }
        }
        if (!feasible) continue;
        int s = 0;
        for (int i = m_ - 1; i >= 0; --i)
            if (c[static_cast<std::size_t>(i)] > 0) {
                s = i + 1;
                break;
            }
        std::vector<std::size_t> idx(static_cast<std::size_t>(m_), 0);
        for (;;) {
            RemovalStep step;
            std::vector<Partition> comps;
            comps.reserve(static_cast<std::size_t>(m_));
            for (int i = 0; i < m_; ++i) {
                const auto& [nu, cc, ht] = lists[static_cast<std::size_t>(i)][idx[static_cast<std::size_t>(i)]];
                comps.push_back(nu);
                step.cc += cc;
                step.ht += ht;
            }
            step.target = MultiPartition(std::move(comps));
            step.s = s;
            out.push_back(std::move(step));
            int i = m_ - 1;
            while (i >= 0) {
                if (++idx[static_cast<std::size_t>(i)] < lists[static_cast<std::size_t>(i)].size()) break;
                idx[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
        }
    }
    std::lock_guard lock(mu_);
    return removal_memo_.emplace(key, std::move(out)).first->second;
}

// One recursion step stripping part j of component r.  The prefactor
// q^k/(q-q^-1) is folded with one (1-t) from the weight, so each summand
// carries the Laurent coefficient q^{k-1} (1-t)^{cc-1} (-t)^{ht} u_s^r.
LaurentPoly CharEngine::chi_step(const MultiPartition& lam, const MultiPartition& mu, int r,
                                 int j) {
    int k = mu.comp(r).parts()[static_cast<std::size_t>(j)];
    MultiPartition rest = mu.with_comp(r, mu.comp(r).remove_part(j));

    LaurentPoly total(m_);
    LaurentPoly omt = one_minus_t(m_);
    LaurentPoly mt = minus_t(m_);
    for (const RemovalStep& step : removals_multi(lam, k)) {
        LaurentPoly coeff = LaurentPoly::q_power(m_, k - 1);
        coeff = coeff * omt.pow(step.cc - 1);
        coeff = coeff * mt.pow(step.ht);
        coeff = coeff * LaurentPoly::u_var(m_, step.s, r + 1);
        total += coeff * chi(step.target, rest);
    }
    return total;
}

LaurentPoly CharEngine::chi(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.components() != m_ || mu.components() != m_)
        throw SizeMismatch("chi: component count mismatch");
    if (lam.size() != mu.size()) throw SizeMismatch("chi: |lambda| != |mu|");
    if (mu.size() == 0) return LaurentPoly::one(m_);

    std::string key = key_of(lam) + "#" + key_of(mu);
    {
        std::lock_guard lock(mu_);
        auto it = chi_memo_.find(key);
        if (it != chi_memo_.end()) return it->second;
    }
    auto [r, j] = pivot_(mu);
    LaurentPoly total = chi_step(lam, mu, r, j);
    std::lock_guard lock(mu_);
    return chi_memo_.emplace(key, std::move(total)).first->second;
}

LaurentPoly CharEngine::chi_with_pivot(const MultiPartition& lam, const MultiPartition& mu, int r,
                                       int j) {
    if (lam.size() != mu.size()) throw SizeMismatch("chi_with_pivot: |lambda| != |mu|");
    if (mu.size() == 0) return LaurentPoly::one(m_);
    if (r < 0 || r >= m_ || j < 0 || j >= mu.comp(r).length())
        throw std::invalid_argument("chi_with_pivot: illegal pivot");
    return chi_step(lam, mu, r, j);
}

LaurentPoly CharEngine::tableau_rec(const MultiPartition& lam,
                                    const std::vector<std::pair<int, int>>& parts,
                                    std::size_t idx) {
    if (idx == parts.size()) return LaurentPoly::one(m_);
    auto [r, k] = parts[idx];
    LaurentPoly total(m_);
    LaurentPoly omt = one_minus_t(m_);
    LaurentPoly mt = minus_t(m_);
    for (const RemovalStep& step : removals_multi(lam, k)) {
        LaurentPoly coeff = LaurentPoly::q_power(m_, k - 1);
        coeff = coeff * omt.pow(step.cc - 1);
        coeff = coeff * mt.pow(step.ht);
        coeff = coeff * LaurentPoly::u_var(m_, step.s, r + 1);
        total += coeff * tableau_rec(step.target, parts, idx + 1);
    }
    return total;
}

LaurentPoly CharEngine::chi_tableau_sum(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.size() != mu.size()) throw SizeMismatch("chi_tableau_sum: |lambda| != |mu|");
    // strip parts in reverse label order: the largest label (r, j) goes first
    std::vector<std::pair<int, int>> parts;  // (component, part size)
    for (int r = m_ - 1; r >= 0; --r)
        for (int j = mu.comp(r).length() - 1; j >= 0; --j)
            parts.emplace_back(r, mu.comp(r).parts()[static_cast<std::size_t>(j)]);
    return tableau_rec(lam, parts, 0);
}

// Numerator of the raising recursion: the true value times (q-q^-1)^S where
// S is the (constant) total slot count of the lower multicomposition.
LaurentPoly CharEngine::dual_numerator(const MultiPartition& lam,
                                       const std::vector<Composition>& slots) {
    int j = -1;
    for (int i = 0; i < m_; ++i)
        if (!lam.comp(i).empty()) {
            j = i;
            break;
        }
    if (j < 0) {
        for (const Composition& c : slots)
            for (int v : c)
                if (v != 0) return LaurentPoly(m_);
        return LaurentPoly::one(m_);
    }

    std::string key = key_of(lam) + "#" + key_of(slots);
    {
        std::lock_guard lock(mu_);
        auto it = dual_memo_.find(key);
        if (it != dual_memo_.end()) return it->second;
    }

    int k = lam.comp(j).parts()[0];
    std::vector<int> rest_parts(lam.comp(j).parts().begin() + 1, lam.comp(j).parts().end());
    Partition rest(rest_parts);

    // flatten the slot bounds for the tau odometer
    std::vector<std::pair<int, int>> flat;  // (component, slot index)
    for (int i = 0; i < m_; ++i)
        for (std::size_t a = 0; a < slots[static_cast<std::size_t>(i)].size(); ++a)
            flat.emplace_back(i, static_cast<int>(a));

    LaurentPoly total(m_);
    LaurentPoly omt = one_minus_t(m_);
    std::vector<int> tau(flat.size(), 0);
    for (;;) {
        int T = 0, ltau = 0;
        for (std::size_t t = 0; t < flat.size(); ++t) {
            T += tau[t];
            if (tau[t] > 0) ++ltau;
        }
        if (T >= k) {
            int strip = T - k;
            // vertical strips of the given size inside rest
            std::vector<std::vector<int>> drops;
            std::vector<int> eps(static_cast<std::size_t>(rest.length()), 0);
            auto rec = [&](auto&& self, int pos, int left) -> void {
                if (left == 0) {
                    std::vector<int> rho_parts = rest.parts();
                    bool ok = true;
                    for (int i = 0; i < rest.length(); ++i) {
                        rho_parts[static_cast<std::size_t>(i)] -= eps[static_cast<std::size_t>(i)];
                        if (rho_parts[static_cast<std::size_t>(i)] < 0) ok = false;
                        if (i > 0 && rho_parts[static_cast<std::size_t>(i)] > rho_parts[static_cast<std::size_t>(i - 1)]) ok = false;
                    }
                    if (ok) drops.push_back(rho_parts);
                    return;
                }
                if (pos >= rest.length()) return;
                eps[static_cast<std::size_t>(pos)] = 1;
                self(self, pos + 1, left - 1);
                eps[static_cast<std::size_t>(pos)] = 0;
                self(self, pos + 1, left);
            };
            rec(rec, 0, strip);

            if (!drops.empty()) {
                // L_{mu,tau} with lengths counting positive entries only
                long long L = 0;
                std::vector<Composition> next(slots);
                for (std::size_t t = 0; t < flat.size(); ++t)
                    next[static_cast<std::size_t>(flat[t].first)][static_cast<std::size_t>(flat[t].second)] -= tau[t];
                for (int i = 0; i < m_; ++i) {
                    L += static_cast<long long>(i + 1) *
                         (positive_length(slots[static_cast<std::size_t>(i)]) - positive_length(next[static_cast<std::size_t>(i)]));
                    std::sort(next[static_cast<std::size_t>(i)].begin(), next[static_cast<std::size_t>(i)].end(),
                              std::greater<int>());
                }
                LaurentPoly coeff = omt.pow(ltau) * LaurentPoly::q_power(m_, T);
                if ((T - k) % 2 != 0) coeff = -coeff;
                coeff = coeff * LaurentPoly::u_var(m_, j + 1, static_cast<int>(L));

                for (const std::vector<int>& rho_parts : drops) {
                    MultiPartition next_lam = lam.with_comp(j, Partition(std::vector<int>(rho_parts)));
                    for (int i = 0; i < j; ++i) next_lam = next_lam.with_comp(i, Partition());
                    total += coeff * dual_numerator(next_lam, next);
                }
            }
        }
        // odometer over tau bounded by the slot values
        std::size_t t = 0;
        for (; t < flat.size(); ++t) {
            int bound = slots[static_cast<std::size_t>(flat[t].first)][static_cast<std::size_t>(flat[t].second)];
            if (tau[t] < bound) {
                ++tau[t];
                std::fill(tau.begin(), tau.begin() + static_cast<std::ptrdiff_t>(t), 0);
                break;
            }
        }
        if (t == flat.size()) break;
    }

    std::lock_guard lock(mu_);
    return dual_memo_.emplace(key, std::move(total)).first->second;
}

LaurentPoly CharEngine::chi_dual(const MultiPartition& lam, const MultiPartition& mu) {
    if (lam.components() != m_ || mu.components() != m_)
        throw SizeMismatch("chi_dual: component count mismatch");
    if (lam.size() != mu.size()) throw SizeMismatch("chi_dual: |lambda| != |mu|");
    std::vector<Composition> slots;
    slots.reserve(static_cast<std::size_t>(m_));
    int total_slots = 0;
    for (int i = 0; i < m_; ++i) {
        slots.push_back(Composition(mu.comp(i).parts().begin(), mu.comp(i).parts().end()));
        total_slots += mu.comp(i).length();
    }
    LaurentPoly numer = dual_numerator(lam, slots);
    return exact_div_qfactor(numer, total_slots);
}

bool CharEngine::move_components_check(const MultiPartition& lam, int j, const MultiPartition& mu) {
    for (int i = 0; i < j - 1; ++i)
        if (!lam.comp(i).empty())
            throw std::invalid_argument("move_components_check: components before j must be empty");
    if (j == 1) return true;  // the fronted arrangement is lam itself
    std::vector<Partition> fronted(static_cast<std::size_t>(m_));
    fronted[0] = lam.comp(j - 1);
    for (int i = j; i < m_; ++i) fronted[static_cast<std::size_t>(i)] = lam.comp(i);
    LaurentPoly lhs = chi(lam, mu);
    LaurentPoly rhs = substitute_u(chi(MultiPartition(std::move(fronted)), mu), 1,
                                   LaurentPoly::u_var(m_, j));
    return lhs == rhs;
}

CharTable chi_table(int m, int n, int jobs) {
    CharTable table;
    table.m = m;
    table.n = n;
    table.order = multipartitions(n, m);
    std::size_t dim = table.order.size();
    table.values.assign(dim, std::vector<LaurentPoly>(dim));

    CharEngine engine(m);
    if (jobs < 1) jobs = 1;
    if (jobs == 1) {
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < dim; ++j)
                table.values[i][j] = engine.chi(table.order[i], table.order[j]);
        return table;
    }

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (;;) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= dim * dim) return;
            std::size_t i = idx / dim, j = idx % dim;
            table.values[i][j] = engine.chi(table.order[i], table.order[j]);
        }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (std::thread& t : threads) t.join();
    return table;
}

}  // namespace cyclochar
