#ifndef DNC_PREPARE_HPP
#define DNC_PREPARE_HPP

#include <algorithm>
#include <numeric>
#include <queue>
#include <vector>

#include "dnc/instance.hpp"
#include "dnc/paths.hpp"
#include "dnc/triangulate.hpp"

namespace dnc {

// ── Symbolic perturbation ────────────────────────────────────────

/// Three-band reweighting: base weights shift past m+d bits, edge e adds
/// bit d+e, object p's radius adds bit p. All pairwise vertex distances and
/// all dist-minus-radius values become distinct, and shortest paths unique.
struct Perturbation {
    std::vector<Int> edge_weight;
    std::vector<Int> radius;
    int bits = 0;  // m + d
};

inline Perturbation perturb(const EmbeddedGraph& g, const std::vector<Int>& radii) {
    const int m = g.edge_count();
    const int d = static_cast<int>(radii.size());
    Perturbation out;
    out.bits = m + d;
    Int band = pow2(out.bits);
    out.edge_weight.resize(m);
    for (int e = 0; e < m; ++e) out.edge_weight[e] = g.weight[e] * band + pow2(d + e);
    out.radius.resize(d);
    for (int p = 0; p < d; ++p) out.radius[p] = radii[p] * band + pow2(p);
    return out;
}

// ── Prepared component ───────────────────────────────────────────

/// One connected component after preprocessing: triangulated, perturbed, and
/// equipped with exact distance tables. Immutable once built.
struct PreparedComponent {
    EmbeddedGraph g;              // triangulated
    std::vector<Int> pw;          // perturbed edge weights
    int bits = 0;                 // perturbation band width
    Int band;                     // 2^bits
    std::vector<int> global_vertex;  // local -> original id, -1 for helper vertices
    int original_vertices = 0;       // locals [0, original_vertices) are original

    std::vector<int> objects;  // global object ids, ascending
    std::vector<int> clients;  // global client ids, ascending

    // Local object data (indexed like `objects`):
    std::vector<std::vector<int>> loc;  // local vertex ids
    std::vector<Int> rad;               // perturbed radii
    std::vector<Int> cost;
    std::vector<int> cen;  // lowest-id vertex of loc
    std::vector<std::vector<int>> tree_parent;  // [p][v]: half-edge (v->parent) in tree(p), -1 elsewhere

    // Local client data:
    std::vector<int> pla;
    std::vector<Int> sen;  // raw scaled sensitivity (base band)
    std::vector<Int> prize;

    // Exact tables:
    std::vector<std::vector<Int>> dist;  // [p][v] = dist(v, loc(p)), perturbed
    std::vector<std::vector<int>> pred;  // [p][v]: half-edge (w->v) toward loc(p), -1 in loc
    std::vector<std::vector<int>> rank;  // [v][p]: rank of dist(v,loc(p))-rad(p), 0 = owner
    std::vector<std::vector<char>> normal_pair;  // [p][q]
    std::vector<std::vector<char>> covers;       // [p][q]

    int object_count() const { return static_cast<int>(objects.size()); }
    int client_count() const { return static_cast<int>(clients.size()); }

    Int key(int v, int p) const { return dist[p][v] - rad[p]; }

    /// Base-band distance (the perturbation bits stripped).
    Int base_dist(int p, int v) const { return dist[p][v] / band; }

    /// Coverage is the non-strict base-band comparison of the problem
    /// definition; the perturbation bands only break the strict comparisons.
    bool covers_client(int p, int q) const {
        return base_dist(p, pla[q]) <= sen[q] + rad[p] / band;
    }

    /// True when p strictly beats q at vertex v (closer in dist-minus-rad).
    bool beats(int p, int q, int v) const { return rank[v][p] < rank[v][q]; }

    /// Owner of v within a family of local object indices.
    int owner_in(const std::vector<int>& family, int v) const {
        int best = -1;
        for (int p : family)
            if (best < 0 || rank[v][p] < rank[v][best]) best = p;
        return best;
    }

    /// Vertex set of the unique shortest path from v to loc(p), inclusive.
    std::vector<int> path_to_loc(int p, int v) const {
        std::vector<int> out{v};
        int cur = v;
        while (pred[p][cur] >= 0) {
            cur = g.topo.origin(pred[p][cur]);
            out.push_back(cur);
        }
        return out;
    }

    /// Edge ids of the path from v toward loc(p).
    std::vector<int> path_edges_to_loc(int p, int v) const {
        std::vector<int> out;
        int cur = v;
        while (pred[p][cur] >= 0) {
            out.push_back(HalfEdgeGraph::edge_of(pred[p][cur]));
            cur = g.topo.origin(pred[p][cur]);
        }
        return out;
    }

    /// Edge ids of the tree(p) path from w in loc(p) up to cen(p).
    std::vector<int> tree_path_edges(int p, int w) const {
        std::vector<int> out;
        int cur = w;
        while (tree_parent[p][cur] >= 0) {
            out.push_back(HalfEdgeGraph::edge_of(tree_parent[p][cur]));
            cur = g.topo.head(tree_parent[p][cur]);
        }
        return out;
    }

    std::vector<int> tree_path_vertices(int p, int w) const {
        std::vector<int> out{w};
        int cur = w;
        while (tree_parent[p][cur] >= 0) {
            cur = g.topo.head(tree_parent[p][cur]);
            out.push_back(cur);
        }
        return out;
    }
};

struct PreparedInstance {
    Instance raw;
    Int scale;
    int k = 0;
    Int big_m;
    std::vector<PreparedComponent> comps;
    std::vector<int> object_comp, object_local;  // global object id -> (comp, local idx)
    std::vector<int> client_comp, client_local;

    int object_count() const { return static_cast<int>(object_comp.size()); }

    bool same_component(int obj_a, int obj_b) const {
        return object_comp[obj_a] == object_comp[obj_b];
    }

    /// Normality of a global object pair (cross-component pairs are normal).
    bool pair_normal(int a, int b) const {
        if (a == b) return true;
        if (!same_component(a, b)) return true;
        const auto& c = comps[object_comp[a]];
        return c.normal_pair[object_local[a]][object_local[b]] != 0;
    }

    bool family_normal(const std::vector<int>& family) const {
        for (std::size_t i = 0; i < family.size(); ++i)
            for (std::size_t j = i + 1; j < family.size(); ++j)
                if (!pair_normal(family[i], family[j])) return false;
        return true;
    }

    /// Does global object p cover global client q?
    bool object_covers(int p, int q) const {
        if (object_comp[p] != client_comp[q]) return false;
        const auto& c = comps[object_comp[p]];
        return c.covers[object_local[p]][client_local[q]] != 0;
    }
};

namespace detail {

/// Dijkstra restricted to the vertices of `allowed`, used to build tree(p).
inline std::vector<int> restricted_tree(const HalfEdgeGraph& topo,
                                        const std::vector<Int>& weight, int root,
                                        const std::vector<int>& allowed) {
    std::vector<char> ok(topo.vertex_count(), 0);
    for (int v : allowed) ok[v] = 1;
    std::vector<int> parent(topo.vertex_count(), -1);
    std::vector<Int> dist(topo.vertex_count());
    std::vector<char> reached(topo.vertex_count(), 0), done(topo.vertex_count(), 0);
    using Item = std::pair<Int, int>;
    auto cmp = [](const Item& a, const Item& b) {
        return a.first > b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    reached[root] = 1;
    dist[root] = 0;
    pq.push({Int(0), root});
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v] || d != dist[v]) continue;
        done[v] = 1;
        for (int h : topo.out_half_edges(v)) {
            int w = topo.head(h);
            if (!ok[w]) continue;
            Int nd = d + weight[HalfEdgeGraph::edge_of(h)];
            if (!reached[w] || nd < dist[w]) {
                reached[w] = 1;
                dist[w] = nd;
                parent[w] = HalfEdgeGraph::twin(h);  // (w -> v)
                pq.push({nd, w});
            }
        }
    }
    for (int v : allowed)
        if (!reached[v])
            throw Error(ErrorCode::MalformedInstance, "object location is not connected");
    return parent;
}

inline HalfEdgeGraph k4_topology() {
    return HalfEdgeGraph::from_rotations({{1, 2, 3}, {2, 0, 3}, {3, 0, 1}, {1, 0, 2}});
}

}  // namespace detail

/// big_M per the weight-encoding rule: strictly dominates every finite
/// distance and every coverage threshold.
inline Int compute_big_m(const Instance& inst) {
    Int sum = 0;
    for (const auto& e : inst.edges)
        if (e.u != e.v) sum += e.w;
    Int max_rad = 0, max_sen = 0;
    for (const auto& o : inst.objects) max_rad = std::max(max_rad, o.radius);
    for (const auto& c : inst.clients) max_sen = std::max(max_sen, c.sensitivity);
    return 1 + sum + max_rad + max_sen;
}

/// Full preprocessing: cleanup, component split, per-component triangulation
/// and perturbation, distance tables, rank tables, pairwise predicates.
inline PreparedInstance prepare(const Instance& inst) {
    validate_instance(inst);
    PreparedInstance out;
    out.raw = inst;
    out.scale = inst.scale;
    out.k = inst.k;
    out.big_m = compute_big_m(inst);

    EmbeddedGraph g0 = build_graph(inst.vertex_count, inst.rotations, inst.edges);
    std::vector<int> comp_of = g0.topo.component_of_vertices();
    int ncomp = comp_of.empty() ? 0 : *std::max_element(comp_of.begin(), comp_of.end()) + 1;

    out.comps.resize(ncomp);
    std::vector<std::vector<int>> comp_vertices(ncomp);
    std::vector<int> local_of(inst.vertex_count, -1);
    for (int v = 0; v < inst.vertex_count; ++v) {
        local_of[v] = static_cast<int>(comp_vertices[comp_of[v]].size());
        comp_vertices[comp_of[v]].push_back(v);
    }

    // Objects and clients must stay within one component (locations are
    // connected, so this is a validation of connectivity).
    out.object_comp.resize(inst.objects.size());
    out.object_local.resize(inst.objects.size());
    out.client_comp.resize(inst.clients.size());
    out.client_local.resize(inst.clients.size());
    for (std::size_t i = 0; i < inst.objects.size(); ++i) {
        int c = comp_of[inst.objects[i].loc[0]];
        for (int v : inst.objects[i].loc)
            if (comp_of[v] != c)
                throw Error(ErrorCode::MalformedInstance,
                            "object " + std::to_string(i) + " spans components");
        out.object_comp[i] = c;
        out.object_local[i] = static_cast<int>(out.comps[c].objects.size());
        out.comps[c].objects.push_back(static_cast<int>(i));
    }
    for (std::size_t i = 0; i < inst.clients.size(); ++i) {
        int c = comp_of[inst.clients[i].placement];
        out.client_comp[i] = c;
        out.client_local[i] = static_cast<int>(out.comps[c].clients.size());
        out.comps[c].clients.push_back(static_cast<int>(i));
    }

    for (int c = 0; c < ncomp; ++c) {
        PreparedComponent& pc = out.comps[c];
        const auto& verts = comp_vertices[c];
        pc.original_vertices = static_cast<int>(verts.size());

        EmbeddedGraph local;
        if (verts.size() == 1 && g0.topo.any_out(verts[0]) < 0) {
            // Isolated vertex: embed it as a corner of a big_M tetrahedron.
            local.topo = detail::k4_topology();
            local.weight.assign(6, out.big_m);
            local.triangulated = true;
        } else {
            std::vector<std::vector<int>> rot(verts.size());
            std::vector<WeightedEdgeInput> eds;
            for (std::size_t i = 0; i < verts.size(); ++i)
                for (int h : g0.topo.out_half_edges(verts[i])) {
                    int w = g0.topo.head(h);
                    rot[i].push_back(local_of[w]);
                    if (verts[i] < w)
                        eds.push_back({static_cast<int>(i), local_of[w],
                                       g0.weight[HalfEdgeGraph::edge_of(h)]});
                }
            local = build_graph(static_cast<int>(verts.size()), rot, eds);
            local = triangulate(local, out.big_m);
        }
        pc.g = local;
        pc.global_vertex.assign(pc.g.vertex_count(), -1);
        for (std::size_t i = 0; i < verts.size(); ++i)
            pc.global_vertex[i] = verts[i];

        // Perturb: edge ids and local object ids feed the low bands.
        std::vector<Int> radii;
        for (int gid : pc.objects) radii.push_back(inst.objects[gid].radius);
        Perturbation pert = perturb(pc.g, radii);
        pc.pw = pert.edge_weight;
        pc.rad = pert.radius;
        pc.bits = pert.bits;
        pc.band = pow2(pc.bits);

        const int d = pc.object_count();
        const int n = pc.g.vertex_count();
        pc.loc.resize(d);
        pc.cost.resize(d);
        pc.cen.resize(d);
        pc.tree_parent.resize(d);
        pc.dist.resize(d);
        pc.pred.resize(d);
        for (int p = 0; p < d; ++p) {
            const ObjectSpec& os = inst.objects[pc.objects[p]];
            for (int v : os.loc) pc.loc[p].push_back(local_of[v]);
            std::sort(pc.loc[p].begin(), pc.loc[p].end());
            pc.loc[p].erase(std::unique(pc.loc[p].begin(), pc.loc[p].end()),
                            pc.loc[p].end());
            pc.cost[p] = os.cost;
            pc.cen[p] = pc.loc[p][0];
            pc.tree_parent[p] =
                detail::restricted_tree(pc.g.topo, pc.pw, pc.cen[p], pc.loc[p]);
            ShortestPaths sp = shortest_paths_from_set(pc.g.topo, pc.pw, pc.loc[p]);
            pc.dist[p] = std::move(sp.dist);
            pc.pred[p] = std::move(sp.pred);
        }
        for (int q = 0; q < pc.client_count(); ++q) {
            const ClientSpec& cs = inst.clients[pc.clients[q]];
            pc.pla.push_back(local_of[cs.placement]);
            pc.sen.push_back(cs.sensitivity);
            pc.prize.push_back(cs.prize);
        }

        // Rank table: strict order of dist-minus-rad keys at every vertex.
        pc.rank.assign(n, std::vector<int>(d, 0));
        for (int v = 0; v < n; ++v) {
            std::vector<int> order(d);
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(),
                      [&](int a, int b) { return pc.key(v, a) < pc.key(v, b); });
            for (int r = 0; r + 1 < d; ++r)
                if (pc.key(v, order[r]) == pc.key(v, order[r + 1]))
                    throw Error(ErrorCode::MalformedInstance,
                                "perturbation failed to break a tie");
            for (int r = 0; r < d; ++r) pc.rank[v][order[r]] = r;
        }

        pc.normal_pair.assign(d, std::vector<char>(d, 1));
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < d; ++q) {
                if (p == q) continue;
                Int pd = pc.dist[p][pc.loc[q][0]];
                for (int v : pc.loc[q]) pd = std::min(pd, pc.dist[p][v]);
                pc.normal_pair[p][q] =
                    (pd > pc.rad[p] - pc.rad[q] && pd > pc.rad[q] - pc.rad[p]) ? 1 : 0;
            }
        pc.covers.assign(d, std::vector<char>(pc.client_count(), 0));
        for (int p = 0; p < d; ++p)
            for (int q = 0; q < pc.client_count(); ++q)
                pc.covers[p][q] = pc.covers_client(p, q) ? 1 : 0;
    }
    return out;
}

}  // namespace dnc

#endif
