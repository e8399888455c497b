#ifndef DNC_SOLVER_HPP
#define DNC_SOLVER_HPP

#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <unordered_map>

#include "dnc/faces.hpp"
#include "dnc/separators.hpp"

namespace dnc {

enum class SolveStatus { Optimal, Infeasible, Incomplete };

inline const char* status_name(SolveStatus s) {
    switch (s) {
        case SolveStatus::Optimal: return "optimal";
        case SolveStatus::Infeasible: return "infeasible";
        case SolveStatus::Incomplete: return "incomplete";
    }
    return "?";
}

struct SolveStats {
    long long separators_enumerated = 0;
    long long cache_hits = 0;
    long long recursive_calls = 0;
    int max_depth = 0;
    bool tripped = false;
};

struct SolveResult {
    SolveStatus status = SolveStatus::Infeasible;
    ExtValue value;
    std::vector<int> witness;  // global object ids, ascending
    SolveStats stats;
};

/// Subinstance of one component: same graph, restricted objects and clients.
struct SubInstance {
    std::vector<int> objs;  // local object indices, ascending
    std::vector<int> clis;  // local client indices, ascending
    int k = 0;
};

struct SolverConfig {
    bool memo = true;
    int threads = 1;
    long long max_separators = 0;  // per recursion level; 0 = unlimited
    double timeout_seconds = 0.0;  // 0 = unlimited
    int quad_cap = 64;
    /// Test hook: extra guarded-separator candidates joined into the max of
    /// every recursion level. Must return separators valid for the call.
    std::function<std::vector<GuardedSeparator>(int comp, const SubInstance&)>
        extra_separators;
};

// ── Revenue ──────────────────────────────────────────────────────

/// Revenue of a local family against a client subset: prizes of covered
/// clients minus member costs.
inline Int revenue_local(const PreparedComponent& c, const std::vector<int>& family,
                         const std::vector<int>& clis) {
    Int total = 0;
    for (int q : clis)
        for (int p : family)
            if (c.covers[p][q]) {
                total += c.prize[q];
                break;
            }
    for (int p : family) total -= c.cost[p];
    return total;
}

/// Revenue of a global family over the whole instance. Throws NotNormal on
/// non-normal input.
inline Int revenue(const PreparedInstance& prep, const std::vector<int>& family) {
    for (int p : family)
        if (p < 0 || p >= prep.object_count())
            throw Error(ErrorCode::UnknownObjectId, "object id " + std::to_string(p));
    if (!prep.family_normal(family))
        throw Error(ErrorCode::NotNormal, "revenue of a non-normal family");
    Int total = 0;
    for (std::size_t qi = 0; qi < prep.client_comp.size(); ++qi) {
        for (int p : family)
            if (prep.object_covers(p, static_cast<int>(qi))) {
                total += prep.raw.clients[qi].prize;
                break;
            }
    }
    for (int p : family) total -= prep.raw.objects[p].cost;
    return total;
}

// ── Knapsack combination ─────────────────────────────────────────

/// D[i][l] = best value picking l items across the first i component tables;
/// per-component budgets range over the table indices. -inf absorbs.
inline std::vector<std::vector<ExtValue>> knapsack_table(
    const std::vector<std::vector<ExtValue>>& per_component, int budget) {
    const int p = static_cast<int>(per_component.size());
    std::vector<std::vector<ExtValue>> d(p + 1,
                                         std::vector<ExtValue>(budget + 1, ExtValue::neg_inf()));
    d[0][0] = ExtValue(Int(0));
    for (int i = 1; i <= p; ++i) {
        const auto& table = per_component[i - 1];
        for (int l = 0; l <= budget; ++l) {
            int top = std::min<int>(l, static_cast<int>(table.size()) - 1);
            for (int lp = 0; lp <= top; ++lp) {
                ExtValue v = table[lp] + d[i - 1][l - lp];
                if (d[i][l] < v) d[i][l] = v;
            }
        }
    }
    return d;
}

inline ExtValue knapsack_combine(const std::vector<std::vector<ExtValue>>& per_component,
                                 int budget) {
    if (budget < 0) return ExtValue::neg_inf();
    return knapsack_table(per_component, budget).back()[budget];
}

// ── SolveDNC ─────────────────────────────────────────────────────

namespace detail {

struct MemoKey {
    int comp;
    std::vector<int> objs, clis;
    int k;
    friend bool operator==(const MemoKey&, const MemoKey&) = default;
};

struct MemoKeyHash {
    std::size_t operator()(const MemoKey& key) const {
        std::size_t h = std::hash<int>()(key.comp) * 31 + std::hash<int>()(key.k);
        for (int x : key.objs) h = h * 1000003 + static_cast<std::size_t>(x) + 1;
        h = h * 16777619 + 7;
        for (int x : key.clis) h = h * 1000003 + static_cast<std::size_t>(x) + 1;
        return h;
    }
};

/// Iterate ascending k-combinations of `pool`; visit returns false to stop.
inline void for_each_combination(const std::vector<int>& pool, int k,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
    const int n = static_cast<int>(pool.size());
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i) idx[i] = i;
    std::vector<int> combo(k);
    while (true) {
        for (int i = 0; i < k; ++i) combo[i] = pool[idx[i]];
        if (!visit(combo)) return;
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) i--;
        if (i < 0) return;
        idx[i]++;
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace detail

class Solver {
public:
    Solver(const PreparedInstance& prep, SolverConfig cfg = {})
        : prep_(prep), cfg_(cfg) {
        if (cfg_.timeout_seconds > 0)
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(cfg_.timeout_seconds));
    }

    SolveResult solve() {
        SolveResult result;
        const int k = prep_.k;
        const int ncomp = static_cast<int>(prep_.comps.size());

        std::vector<std::vector<ExtValue>> tables(ncomp);
        std::vector<SubInstance> full(ncomp);
        for (int c = 0; c < ncomp; ++c) {
            const PreparedComponent& pc = prep_.comps[c];
            for (int p = 0; p < pc.object_count(); ++p) full[c].objs.push_back(p);
            for (int q = 0; q < pc.client_count(); ++q) full[c].clis.push_back(q);
            tables[c].resize(k + 1, ExtValue::neg_inf());
            for (int i = 0; i <= k; ++i) {
                full[c].k = i;
                tables[c][i] = solve_dnc(c, full[c], 0);
            }
        }
        auto d = knapsack_table(tables, k);
        result.value = d[ncomp][k];
        result.stats = snapshot_stats();
        if (!result.value.finite()) {
            result.status = result.stats.tripped ? SolveStatus::Incomplete
                                                 : SolveStatus::Infeasible;
            return result;
        }
        // Witness: deterministic backtrack over components, then per-branch
        // reconstruction inside each.
        std::vector<int> budget_of(ncomp, 0);
        int l = k;
        for (int i = ncomp; i >= 1; --i) {
            for (int lp = 0; lp <= std::min<int>(l, k); ++lp) {
                if (static_cast<int>(tables[i - 1].size()) <= lp) break;
                if (d[i][l] == tables[i - 1][lp] + d[i - 1][l - lp]) {
                    budget_of[i - 1] = lp;
                    l -= lp;
                    break;
                }
            }
        }
        bool ok = true;
        for (int c = 0; c < ncomp && ok; ++c) {
            full[c].k = budget_of[c];
            auto w = reconstruct(c, full[c], tables[c][budget_of[c]], 0);
            if (!w) { ok = false; break; }
            for (int p : *w) result.witness.push_back(prep_.comps[c].objects[p]);
        }
        if (!ok) result.witness.clear();
        std::sort(result.witness.begin(), result.witness.end());
        result.stats = snapshot_stats();
        result.status =
            result.stats.tripped ? SolveStatus::Incomplete : SolveStatus::Optimal;
        return result;
    }

private:
    bool expired() const {
        return deadline_ && std::chrono::steady_clock::now() > *deadline_;
    }

    SolveStats snapshot_stats() const {
        SolveStats s;
        s.separators_enumerated = separators_.load();
        s.cache_hits = cache_hits_.load();
        s.recursive_calls = calls_.load();
        s.max_depth = max_depth_.load();
        s.tripped = tripped_.load();
        return s;
    }

    /// Brute force over exactly-k normal subfamilies (lex order over local
    /// indices); first maximizer is the lexicographically smallest.
    ExtValue brute_value(int comp, const SubInstance& sub) const {
        const PreparedComponent& c = prep_.comps[comp];
        ExtValue best = ExtValue::neg_inf();
        detail::for_each_combination(sub.objs, sub.k, [&](const std::vector<int>& fam) {
            if (is_normal_local(c, fam)) {
                ExtValue v{revenue_local(c, fam, sub.clis)};
                if (best < v) best = v;
            }
            return true;
        });
        if (sub.k == 0) best = ExtValue(Int(0));
        return best;
    }

    std::optional<std::vector<int>> brute_witness(int comp, const SubInstance& sub,
                                                  const ExtValue& target) const {
        if (sub.k == 0) return std::vector<int>{};
        const PreparedComponent& c = prep_.comps[comp];
        std::optional<std::vector<int>> out;
        detail::for_each_combination(sub.objs, sub.k, [&](const std::vector<int>& fam) {
            if (is_normal_local(c, fam) && ExtValue{revenue_local(c, fam, sub.clis)} == target) {
                out = fam;
                return false;
            }
            return true;
        });
        return out;
    }

    /// Candidate separators for one recursion level, in canonical stream
    /// order (truncated by the limit knobs), plus injected extras.
    std::vector<GuardedSeparator> collect_candidates(int comp, const SubInstance& sub) {
        const PreparedComponent& c = prep_.comps[comp];
        ImportantFaces imp = important_faces(c, sub.objs, cfg_.quad_cap);
        std::vector<GuardedSeparator> out;
        EnumerateOptions opt;
        opt.prune = true;
        opt.max_len = std::min(separator_length_bound(sub.k), sub.k);
        opt.emit = [&](const VoronoiSeparator&, const GuardedSeparator& x) {
            out.push_back(x);
            separators_.fetch_add(1);
            if (cfg_.max_separators > 0 &&
                static_cast<long long>(out.size()) >= cfg_.max_separators) {
                tripped_.store(true);
                return false;
            }
            if (out.size() % 64 == 0 && expired()) {
                tripped_.store(true);
                return false;
            }
            return true;
        };
        enumerate_guarded_separators(c, sub.objs, sub.k, imp.faces, opt);
        if (cfg_.extra_separators) {
            auto extra = cfg_.extra_separators(comp, sub);
            out.insert(out.end(), extra.begin(), extra.end());
        }
        return out;
    }

    /// Value of one candidate: Pri(Q) plus the knapsack over component
    /// optima at budgets 0..floor(2k/3).
    ExtValue candidate_value(int comp, const SubInstance& sub, const GuardedSeparator& x,
                             int depth) {
        const PreparedComponent& c = prep_.comps[comp];
        const int budget = sub.k - static_cast<int>(x.q.size());
        if (budget < 0) return ExtValue::neg_inf();
        GuardedAnalysis an = analyze_guarded(c, sub.objs, sub.clis, x);
        Int pri = 0;
        for (int q : an.cov) pri += c.prize[q];
        for (int p : x.q) pri -= c.cost[p];

        const int cap = 2 * sub.k / 3;
        std::vector<std::vector<ExtValue>> tables;
        for (const auto& component : an.components) {
            if (component.objects.empty()) {
                tables.push_back({ExtValue(Int(0))});
                continue;
            }
            std::vector<ExtValue> table;
            int top = std::min(cap, budget);
            for (int l = 0; l <= top; ++l) {
                SubInstance rec{component.objects, component.clients, l};
                table.push_back(solve_dnc(comp, rec, depth + 1));
            }
            tables.push_back(std::move(table));
        }
        return ExtValue(pri) + knapsack_combine(tables, budget);
    }

    ExtValue solve_dnc(int comp, const SubInstance& sub, int depth) {
        calls_.fetch_add(1);
        int prev = max_depth_.load();
        while (prev < depth && !max_depth_.compare_exchange_weak(prev, depth)) {}
        if (sub.k == 0) return ExtValue(Int(0));
        if (static_cast<int>(sub.objs.size()) < sub.k) return ExtValue::neg_inf();
        if (sub.k <= 3) return brute_value(comp, sub);

        detail::MemoKey key{comp, sub.objs, sub.clis, sub.k};
        if (cfg_.memo) {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            auto it = memo_.find(key);
            if (it != memo_.end()) {
                cache_hits_.fetch_add(1);
                return it->second;
            }
        }

        std::vector<GuardedSeparator> candidates = collect_candidates(comp, sub);
        ExtValue best = ExtValue::neg_inf();
        if (depth == 0 && cfg_.threads > 1 && candidates.size() > 1) {
            std::mutex best_mutex;
            std::atomic<std::size_t> next{0};
            auto worker = [&]() {
                ExtValue local = ExtValue::neg_inf();
                while (true) {
                    std::size_t i = next.fetch_add(1);
                    if (i >= candidates.size()) break;
                    if (expired()) { tripped_.store(true); break; }
                    ExtValue v = candidate_value(comp, sub, candidates[i], depth);
                    if (local < v) local = v;
                }
                std::lock_guard<std::mutex> lock(best_mutex);
                if (best < local) best = local;
            };
            std::vector<std::thread> pool;
            for (int t = 0; t < cfg_.threads; ++t) pool.emplace_back(worker);
            for (auto& th : pool) th.join();
        } else {
            for (const auto& x : candidates) {
                if (expired()) { tripped_.store(true); break; }
                ExtValue v = candidate_value(comp, sub, x, depth);
                if (best < v) best = v;
            }
        }

        if (cfg_.memo) {
            std::lock_guard<std::mutex> lock(memo_mutex_);
            memo_.emplace(key, best);
        }
        return best;
    }

    /// Re-descend the first maximizing branch (serial, deterministic).
    std::optional<std::vector<int>> reconstruct(int comp, const SubInstance& sub,
                                                const ExtValue& target, int depth) {
        if (!target.finite()) return std::nullopt;
        if (sub.k == 0) return std::vector<int>{};
        if (sub.k <= 3) return brute_witness(comp, sub, target);

        const PreparedComponent& c = prep_.comps[comp];
        std::vector<GuardedSeparator> candidates = collect_candidates(comp, sub);
        for (const auto& x : candidates) {
            const int budget = sub.k - static_cast<int>(x.q.size());
            if (budget < 0) continue;
            GuardedAnalysis an = analyze_guarded(c, sub.objs, sub.clis, x);
            Int pri = 0;
            for (int q : an.cov) pri += c.prize[q];
            for (int p : x.q) pri -= c.cost[p];

            const int cap = 2 * sub.k / 3;
            std::vector<std::vector<ExtValue>> tables;
            for (const auto& component : an.components) {
                if (component.objects.empty()) {
                    tables.push_back({ExtValue(Int(0))});
                    continue;
                }
                std::vector<ExtValue> table;
                int top = std::min(cap, budget);
                for (int l = 0; l <= top; ++l) {
                    SubInstance rec{component.objects, component.clients, l};
                    table.push_back(solve_dnc(comp, rec, depth + 1));
                }
                tables.push_back(std::move(table));
            }
            auto d = knapsack_table(tables, budget);
            if (!(ExtValue(pri) + d.back()[budget] == target)) continue;

            // Smallest-budget backtrack, then recurse per component.
            const int p = static_cast<int>(tables.size());
            std::vector<int> budget_of(p, 0);
            int l = budget;
            bool fine = true;
            for (int i = p; i >= 1 && fine; --i) {
                bool found = false;
                int top = std::min<int>(l, static_cast<int>(tables[i - 1].size()) - 1);
                for (int lp = 0; lp <= top; ++lp) {
                    if (d[i][l] == tables[i - 1][lp] + d[i - 1][l - lp]) {
                        budget_of[i - 1] = lp;
                        l -= lp;
                        found = true;
                        break;
                    }
                }
                fine = found;
            }
            if (!fine) continue;
            std::vector<int> witness(x.q.begin(), x.q.end());
            bool ok = true;
            for (int i = 0; i < p && ok; ++i) {
                if (budget_of[i] == 0) continue;
                SubInstance rec{an.components[i].objects, an.components[i].clients,
                                budget_of[i]};
                auto w = reconstruct(comp, rec, tables[i][budget_of[i]], depth + 1);
                if (!w) ok = false;
                else witness.insert(witness.end(), w->begin(), w->end());
            }
            if (!ok) continue;
            std::sort(witness.begin(), witness.end());
            return witness;
        }
        return std::nullopt;
    }

    const PreparedInstance& prep_;
    SolverConfig cfg_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;

    std::mutex memo_mutex_;
    std::unordered_map<detail::MemoKey, ExtValue, detail::MemoKeyHash> memo_;
    std::atomic<long long> separators_{0}, cache_hits_{0}, calls_{0};
    std::atomic<int> max_depth_{0};
    std::atomic<bool> tripped_{false};
};

/// Exact solve of the full instance via the divide-and-conquer recursion.
inline SolveResult solve(const PreparedInstance& prep, SolverConfig cfg = {}) {
    Solver solver(prep, cfg);
    return solver.solve();
}

/// Exact oracle: all k-tuples of objects, lexicographically smallest
/// maximizer as the witness.
inline SolveResult solve_bruteforce(const PreparedInstance& prep) {
    SolveResult result;
    const int d = prep.object_count();
    std::vector<int> pool(d);
    for (int i = 0; i < d; ++i) pool[i] = i;
    ExtValue best = ExtValue::neg_inf();
    std::vector<int> witness;
    detail::for_each_combination(pool, prep.k, [&](const std::vector<int>& fam) {
        if (prep.family_normal(fam)) {
            ExtValue v{revenue(prep, fam)};
            if (best < v) {
                best = v;
                witness = fam;
            }
        }
        return true;
    });
    if (prep.k == 0) {
        best = ExtValue(Int(0));
        witness.clear();
    }
    result.value = best;
    result.witness = witness;
    result.status = best.finite() ? SolveStatus::Optimal : SolveStatus::Infeasible;
    if (!best.finite()) result.witness.clear();
    return result;
}

}  // namespace dnc

#endif
