#ifndef DNC_SEPARATORS_HPP
#define DNC_SEPARATORS_HPP

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "dnc/voronoi.hpp"

namespace dnc {

struct SepQuad {
    int p = -1;  // local object index
    int u = -1;  // local vertex
    int f = -1;  // primal face id
    int v = -1;  // local vertex
    friend bool operator==(const SepQuad&, const SepQuad&) = default;
    friend auto operator<=>(const SepQuad&, const SepQuad&) = default;
};

/// Cyclic sequence of quadruples; equal up to cyclic shift, reverse distinct.
using VoronoiSeparator = std::vector<SepQuad>;

/// The reverse separator: traverse backwards, swapping entry/exit vertices.
/// Quadruple t of the reverse reads (p_{-t}, v_{-t-1}, f_{-t-1}, u_{-t-1})
/// with cyclic indices into the original.
inline VoronoiSeparator reverse_separator(const VoronoiSeparator& sep) {
    const int r = static_cast<int>(sep.size());
    VoronoiSeparator out(r);
    for (int t = 0; t < r; ++t) {
        out[t].p = sep[(r - t) % r].p;
        out[t].u = sep[r - 1 - t].v;
        out[t].f = sep[r - 1 - t].f;
        out[t].v = sep[r - 1 - t].u;
    }
    return out;
}

/// Smallest cyclic rotation (by quadruple lexicographic order).
inline VoronoiSeparator canonical_rotation(const VoronoiSeparator& sep) {
    VoronoiSeparator best = sep;
    VoronoiSeparator cur = sep;
    for (std::size_t i = 1; i < sep.size(); ++i) {
        std::rotate(cur.begin(), cur.begin() + 1, cur.end());
        if (cur < best) best = cur;
    }
    return best;
}

/// Canonical form over cyclic shifts and orientation reversal.
inline VoronoiSeparator canonical_separator(const VoronoiSeparator& sep) {
    VoronoiSeparator a = canonical_rotation(sep);
    VoronoiSeparator b = canonical_rotation(reverse_separator(sep));
    return std::min(a, b);
}

/// Conditions (a) pairwise-distinct normal objects, (b) distinct faces,
/// (c) u_t != v_t on face f_t with v_{t-1}, u_t owned by p_t within Obj(sep).
inline bool validate_separator(const PreparedComponent& c, const VoronoiSeparator& sep) {
    const int r = static_cast<int>(sep.size());
    if (r == 0) return false;
    std::vector<int> objs;
    std::set<int> faces;
    for (const auto& q : sep) {
        if (q.p < 0 || q.p >= c.object_count()) return false;
        if (q.f < 0 || q.f >= c.g.face_count()) return false;
        objs.push_back(q.p);
        if (!faces.insert(q.f).second) return false;  // (b)
    }
    std::sort(objs.begin(), objs.end());
    if (std::adjacent_find(objs.begin(), objs.end()) != objs.end()) return false;
    if (!is_normal_local(c, objs)) return false;  // (a)

    for (int t = 0; t < r; ++t) {
        const SepQuad& q = sep[t];
        auto corners = c.g.triangle_corners(q.f);
        auto on_face = [&](int v) {
            return v == corners[0] || v == corners[1] || v == corners[2];
        };
        if (q.u == q.v || !on_face(q.u) || !on_face(q.v)) return false;
        int vprev = sep[(t - 1 + r) % r].v;
        if (c.owner_in(objs, q.u) != q.p) return false;  // (c)
        if (c.owner_in(objs, vprev) != q.p) return false;
    }
    return true;
}

/// Perimeter: union of the vertex sets of the paths P_t (cen(p_t) .. u_t)
/// and Q_t (cen(p_t) .. v_{t-1}), each a tree(p_t) path concatenated with a
/// unique shortest path. Sorted vertex ids.
inline std::vector<int> perimeter(const PreparedComponent& c, const VoronoiSeparator& sep) {
    if (!validate_separator(c, sep))
        throw Error(ErrorCode::InvalidSeparator, "perimeter of an invalid separator");
    std::set<int> gamma;
    const int r = static_cast<int>(sep.size());
    auto add_path = [&](int p, int x) {
        std::vector<int> sp = c.path_to_loc(p, x);  // x .. attachment w in loc(p)
        for (int v : sp) gamma.insert(v);
        for (int v : c.tree_path_vertices(p, sp.back())) gamma.insert(v);
    };
    for (int t = 0; t < r; ++t) {
        add_path(sep[t].p, sep[t].u);
        add_path(sep[t].p, sep[(t - 1 + r) % r].v);
    }
    return {gamma.begin(), gamma.end()};
}

// ── Guarded separators ───────────────────────────────────────────

/// Set-level separator abstraction: a normal object set Q and a vertex set.
struct GuardedSeparator {
    std::vector<int> q;      // local object indices, ascending
    std::vector<int> gamma;  // local vertices, ascending

    friend bool operator==(const GuardedSeparator&, const GuardedSeparator&) = default;
    friend auto operator<=>(const GuardedSeparator&, const GuardedSeparator&) = default;
};

inline GuardedSeparator guarded_from_separator(const PreparedComponent& c,
                                               const VoronoiSeparator& sep) {
    GuardedSeparator x;
    for (const auto& q : sep) x.q.push_back(q.p);
    std::sort(x.q.begin(), x.q.end());
    x.gamma = perimeter(c, sep);
    return x;
}

/// One connected component of the residual interaction graph.
struct InteractionComponent {
    std::vector<int> objects;  // local object indices, ascending
    std::vector<int> clients;  // local client indices, ascending
};

struct GuardedAnalysis {
    std::vector<int> cov;  // covered clients (local), ascending
    std::vector<int> ban;  // banned objects (local), ascending
    std::vector<InteractionComponent> components;
};

/// cov/ban and the component split of L(X), restricted to the subinstance
/// (objs, clis). Objects whose location meets Gamma are always banned.
inline GuardedAnalysis analyze_guarded(const PreparedComponent& c,
                                       const std::vector<int>& objs,
                                       const std::vector<int>& clis,
                                       const GuardedSeparator& x) {
    if (!is_normal_local(c, x.q))
        throw Error(ErrorCode::NotNormal, "guarded separator needs a normal Q");
    GuardedAnalysis out;
    std::vector<char> in_q(c.object_count(), 0);
    for (int p : x.q) in_q[p] = 1;

    for (int q : clis)
        for (int p : x.q)
            if (c.covers[p][q]) { out.cov.push_back(q); break; }

    for (int p : objs) {
        if (in_q[p]) continue;
        bool banned = false;
        for (int p2 : x.q)
            if (!c.normal_pair[p][p2]) { banned = true; break; }
        if (!banned && !x.q.empty()) {
            for (int v : x.gamma) {
                int best = x.q[0];
                for (int p2 : x.q)
                    if (c.rank[v][p2] < c.rank[v][best]) best = p2;
                if (c.rank[v][p] < c.rank[v][best]) { banned = true; break; }
            }
        }
        if (banned) out.ban.push_back(p);
    }

    // Components of L - (Q + ban + cov) over the subinstance's nodes.
    std::vector<char> gone_obj(c.object_count(), 0), gone_cli(c.client_count(), 0);
    for (int p : x.q) gone_obj[p] = 1;
    for (int p : out.ban) gone_obj[p] = 1;
    for (int q : out.cov) gone_cli[q] = 1;
    std::vector<int> node_objs, node_clis;
    for (int p : objs)
        if (!gone_obj[p]) node_objs.push_back(p);
    for (int q : clis)
        if (!gone_cli[q]) node_clis.push_back(q);

    const int no = static_cast<int>(node_objs.size());
    const int nc = static_cast<int>(node_clis.size());
    std::vector<int> uf(no + nc);
    for (int i = 0; i < no + nc; ++i) uf[i] = i;
    std::function<int(int)> find = [&](int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    auto unite = [&](int a, int b) { uf[find(a)] = find(b); };
    for (int i = 0; i < no; ++i)
        for (int j = i + 1; j < no; ++j)
            if (!c.normal_pair[node_objs[i]][node_objs[j]]) unite(i, j);
    for (int i = 0; i < no; ++i)
        for (int j = 0; j < nc; ++j)
            if (c.covers[node_objs[i]][node_clis[j]]) unite(i, no + j);

    std::vector<int> root_comp(no + nc, -1);
    for (int i = 0; i < no + nc; ++i) {
        int rt = find(i);
        if (root_comp[rt] < 0) {
            root_comp[rt] = static_cast<int>(out.components.size());
            out.components.emplace_back();
        }
        auto& comp = out.components[root_comp[rt]];
        if (i < no) comp.objects.push_back(node_objs[i]);
        else comp.clients.push_back(node_clis[i - no]);
    }
    return out;
}

// ── Enumeration of candidate guarded separators ──────────────────

struct EnumerateOptions {
    bool prune = true;
    int max_len = 0;  // quadruple count cap; 0 derives floor(3 sqrt(k))
    /// Called per emitted candidate; return false to stop the stream.
    std::function<bool(const VoronoiSeparator&, const GuardedSeparator&)> emit;
};

inline int separator_length_bound(int k) {
    // floor(3 sqrt(k)) = floor(sqrt(9k))
    int r = 0;
    while ((r + 1) * (r + 1) <= 9 * k) r++;
    return r;
}

/// DFS generation of candidate sequences (p_t, u_t, f_t, v_t) with faces
/// drawn from `faces` and objects from `objs`. Every complete sequence that
/// passes validate_separator is emitted exactly once per {shifts, reversal}
/// equivalence class, as its canonical representative.
inline void enumerate_guarded_separators(const PreparedComponent& c,
                                         const std::vector<int>& objs, int k,
                                         const std::vector<int>& faces,
                                         EnumerateOptions opt) {
    if (objs.empty() || faces.empty()) return;
    const int max_len = opt.max_len > 0 ? opt.max_len : separator_length_bound(k);
    if (max_len <= 0) return;

    VoronoiSeparator seq;
    std::vector<char> face_used(c.g.face_count(), 0);
    bool stopped = false;

    // p owns v among the placed objects (condition (c) restricted to the
    // prefix; regions only shrink as the family grows, so this is sound).
    auto beats_all_placed = [&](int p, int v) {
        for (const auto& qd : seq)
            if (qd.p != p && !c.beats(p, qd.p, v)) return false;
        return true;
    };
    auto extension_possible = [&](int v) {
        // some unused subset object beats every placed object at v
        for (int q : objs) {
            bool placed = false;
            for (const auto& qd : seq)
                if (qd.p == q) { placed = true; break; }
            if (placed) continue;
            if (beats_all_placed(q, v)) return true;
        }
        return false;
    };

    std::function<void()> grow = [&]() {
        if (stopped) return;
        const int t = static_cast<int>(seq.size());
        for (int p : objs) {
            if (stopped) return;
            if (opt.prune) {
                if (t > 0 && p <= seq[0].p) continue;  // canonical start has min p
                bool bad = false;
                for (const auto& qd : seq)
                    if (qd.p == p || !c.normal_pair[p][qd.p]) { bad = true; break; }
                if (bad) continue;
                if (t > 0 && !beats_all_placed(p, seq.back().v)) continue;
            } else {
                bool dup = false;
                for (const auto& qd : seq)
                    if (qd.p == p) dup = true;
                if (dup) continue;  // (a) needs distinct objects regardless
            }
            for (int f : faces) {
                if (stopped) return;
                if (face_used[f]) continue;
                auto corners = c.g.triangle_corners(f);
                for (int iu = 0; iu < 3; ++iu) {
                    for (int iv = 0; iv < 3; ++iv) {
                        if (iu == iv) continue;
                        if (stopped) return;
                        int u = corners[iu], v = corners[iv];
                        if (opt.prune && !beats_all_placed(p, u)) continue;
                        seq.push_back({p, u, f, v});
                        face_used[f] = 1;
                        bool closure_ok = beats_all_placed(seq[0].p, v);
                        bool can_extend =
                            t + 1 < max_len && (!opt.prune || extension_possible(v));
                        if (closure_ok || !opt.prune) {
                            if (validate_separator(c, seq) && seq == canonical_separator(seq)) {
                                GuardedSeparator x = guarded_from_separator(c, seq);
                                if (!opt.emit(seq, x)) stopped = true;
                            }
                        }
                        if (!stopped && can_extend) grow();
                        face_used[f] = 0;
                        seq.pop_back();
                        if (stopped) return;
                    }
                }
            }
        }
    };
    grow();
}

}  // namespace dnc

#endif
