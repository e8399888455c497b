#ifndef DNC_VORONOI_HPP
#define DNC_VORONOI_HPP

#include <algorithm>
#include <set>
#include <vector>

#include "dnc/prepare.hpp"

namespace dnc {

/// Normality of a family of local object indices within one component.
inline bool is_normal_local(const PreparedComponent& c, const std::vector<int>& family) {
    for (int p : family)
        if (p < 0 || p >= c.object_count())
            throw Error(ErrorCode::UnknownObjectId, "object index " + std::to_string(p));
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (family[i] == family[j]) return false;
            if (!c.normal_pair[family[i]][family[j]]) return false;
        }
    return true;
}

// ── Voronoi partition with extended spanning trees ───────────────

struct VoronoiPartition {
    std::vector<int> family;                // local object indices, ascending
    std::vector<int> owner;                 // per vertex: owning object index
    std::vector<std::vector<int>> region;   // parallel to family
    std::vector<int> extree_parent;         // per vertex: half-edge (v->parent), -1 at cen(owner)

    int family_pos(int p) const {
        auto it = std::lower_bound(family.begin(), family.end(), p);
        return it != family.end() && *it == p ? static_cast<int>(it - family.begin()) : -1;
    }
    const std::vector<int>& region_of(int p) const { return region[family_pos(p)]; }

    /// Edge ids of the extree path from v up to cen(owner(v)).
    std::vector<int> extree_path_edges(const PreparedComponent& c, int v) const {
        std::vector<int> out;
        int cur = v;
        while (extree_parent[cur] >= 0) {
            out.push_back(HalfEdgeGraph::edge_of(extree_parent[cur]));
            cur = c.g.topo.origin(HalfEdgeGraph::twin(extree_parent[cur]));
        }
        return out;
    }
};

inline VoronoiPartition voronoi_partition(const PreparedComponent& c,
                                          std::vector<int> family) {
    std::sort(family.begin(), family.end());
    if (!is_normal_local(c, family))
        throw Error(ErrorCode::NotNormal, "voronoi partition needs a normal family");
    if (family.empty())
        throw Error(ErrorCode::NotNormal, "voronoi partition needs a nonempty family");

    VoronoiPartition part;
    part.family = family;
    const int n = c.g.vertex_count();
    part.owner.assign(n, -1);
    part.region.resize(family.size());
    part.extree_parent.assign(n, -1);
    for (int v = 0; v < n; ++v) {
        int p = c.owner_in(family, v);
        part.owner[v] = p;
        part.region[part.family_pos(p)].push_back(v);
    }
    // loc(p) is contained in region(p); regions carry the unique shortest
    // paths, so parents come from tree(p) inside loc and pred outside.
    for (std::size_t i = 0; i < family.size(); ++i) {
        int p = family[i];
        for (int v : c.loc[p])
            if (part.owner[v] != p)
                throw Error(ErrorCode::NotNormal, "location leaks out of its region");
        for (int v : part.region[i]) {
            bool in_loc = std::binary_search(c.loc[p].begin(), c.loc[p].end(), v);
            if (in_loc) {
                part.extree_parent[v] = c.tree_parent[p][v];
            } else {
                int h = c.pred[p][v];  // (w -> v) toward loc(p)
                part.extree_parent[v] = HalfEdgeGraph::twin(h);
            }
        }
    }
    return part;
}

// ── Prediagram ───────────────────────────────────────────────────

/// Dual skeleton of the Voronoi region boundaries. `zone` groups primal
/// vertices by the prediagram face containing their dual face; zones equal
/// the Voronoi regions (validated).
struct Prediagram {
    int ell = 0;
    std::vector<char> alive;        // per primal edge
    std::vector<char> active_face;  // per primal face
    std::vector<int> degree;        // per primal face: alive incident edges
    std::vector<int> zone;          // per primal vertex
    std::vector<int> zone_object;   // zone id -> local object index
};

inline Prediagram build_prediagram(const PreparedComponent& c,
                                   const VoronoiPartition& part) {
    const HalfEdgeGraph& t = c.g.topo;
    if (!c.g.triangulated)
        throw Error(ErrorCode::MalformedInstance, "prediagram needs a triangulated graph");
    Prediagram pre;
    pre.ell = static_cast<int>(part.family.size());
    pre.alive.assign(t.edge_count(), 1);
    for (int v = 0; v < t.vertex_count(); ++v)
        if (part.extree_parent[v] >= 0)
            pre.alive[HalfEdgeGraph::edge_of(part.extree_parent[v])] = 0;

    // Iteratively strip dual vertices (faces of G) of degree <= 1.
    pre.degree.assign(t.face_count(), 0);
    pre.active_face.assign(t.face_count(), 1);
    for (int f = 0; f < t.face_count(); ++f)
        for (int h : t.face_walk(f))
            if (pre.alive[HalfEdgeGraph::edge_of(h)]) pre.degree[f]++;
    std::vector<int> stack;
    for (int f = 0; f < t.face_count(); ++f)
        if (pre.degree[f] <= 1) stack.push_back(f);
    while (!stack.empty()) {
        int f = stack.back();
        stack.pop_back();
        if (!pre.active_face[f]) continue;
        pre.active_face[f] = 0;
        for (int h : t.face_walk(f)) {
            int e = HalfEdgeGraph::edge_of(h);
            if (!pre.alive[e]) continue;
            pre.alive[e] = 0;
            int f2 = t.face_of(HalfEdgeGraph::twin(h));
            if (--pre.degree[f2] <= 1 && pre.active_face[f2]) stack.push_back(f2);
        }
    }

    // Invariants from the construction: degrees 2..3, simplicity,
    // connectivity, and exactly ell faces matching the regions.
    int active = 0, alive_edges = 0;
    for (int f = 0; f < t.face_count(); ++f)
        if (pre.active_face[f]) {
            active++;
            if (pre.degree[f] < 2 || pre.degree[f] > 3)
                throw Error(ErrorCode::MalformedInstance, "prediagram degree out of range");
        }
    std::set<std::pair<int, int>> seen_pairs;
    for (int e = 0; e < t.edge_count(); ++e)
        if (pre.alive[e]) {
            alive_edges++;
            int fa = t.face_of(2 * e), fb = t.face_of(2 * e + 1);
            if (!seen_pairs.insert(std::pair<int, int>(std::minmax(fa, fb))).second)
                throw Error(ErrorCode::MalformedInstance, "prediagram is not simple");
        }
    if (pre.ell == 1 && alive_edges != 0)
        throw Error(ErrorCode::MalformedInstance, "prediagram of a single object is nonempty");
    if (pre.ell >= 2) {
        // Connectivity over active faces via alive edges.
        int start = -1;
        for (int f = 0; f < t.face_count(); ++f)
            if (pre.active_face[f]) { start = f; break; }
        if (start < 0) throw Error(ErrorCode::MalformedInstance, "prediagram vanished");
        std::vector<char> vis(t.face_count(), 0);
        std::vector<int> st{start};
        vis[start] = 1;
        int cnt = 0;
        while (!st.empty()) {
            int f = st.back();
            st.pop_back();
            cnt++;
            for (int h : t.face_walk(f)) {
                if (!pre.alive[HalfEdgeGraph::edge_of(h)]) continue;
                int f2 = t.face_of(HalfEdgeGraph::twin(h));
                if (!vis[f2]) { vis[f2] = 1; st.push_back(f2); }
            }
        }
        if (cnt != active)
            throw Error(ErrorCode::MalformedInstance, "prediagram is disconnected");
        // Euler: faces of the prediagram must number ell.
        if (active - alive_edges + pre.ell != 2)
            throw Error(ErrorCode::MalformedInstance, "prediagram face count is not ell");
    }

    // Zones: primal components over edges whose dual left the prediagram.
    pre.zone.assign(t.vertex_count(), -1);
    int zc = 0;
    for (int s = 0; s < t.vertex_count(); ++s) {
        if (pre.zone[s] >= 0) continue;
        int z = zc++;
        std::vector<int> st{s};
        pre.zone[s] = z;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (int h : t.out_half_edges(v)) {
                if (pre.alive[HalfEdgeGraph::edge_of(h)]) continue;
                int w = t.head(h);
                if (pre.zone[w] < 0) { pre.zone[w] = z; st.push_back(w); }
            }
        }
    }
    if (zc != pre.ell)
        throw Error(ErrorCode::MalformedInstance, "zone count differs from family size");
    pre.zone_object.assign(zc, -1);
    for (std::size_t i = 0; i < part.family.size(); ++i) {
        int p = part.family[i];
        int z = pre.zone[c.cen[p]];
        if (pre.zone_object[z] >= 0)
            throw Error(ErrorCode::MalformedInstance, "two objects share a zone");
        pre.zone_object[z] = p;
        for (int v : part.region[i])
            if (pre.zone[v] != z)
                throw Error(ErrorCode::MalformedInstance, "zone does not match region");
    }
    return pre;
}

// ── Diagram (3-regular suppression) ──────────────────────────────

/// Branching-point multigraph. Ends are indexed 3*b + slot with slots in the
/// boundary-walk order of the branch face; every diagram edge remembers the
/// contracted dual path as a list of primal edge ids.
struct Diagram {
    int ell = 0;
    std::vector<int> branch_face;                // dgm vertex -> primal face id
    std::vector<int> branch_of_face;             // primal face -> dgm vertex or -1
    struct Edge {
        int end_a = -1, end_b = -1;
        std::vector<int> dual_path;  // primal edges, from end_a to end_b
        bool loop() const { return end_a / 3 == end_b / 3; }
    };
    std::vector<Edge> edges;
    std::vector<int> end_edge;        // end -> edge id
    std::vector<int> end_other;       // end -> end
    std::vector<int> face_of_depart;  // end -> dgm face traced by departing there
    std::vector<std::vector<int>> face_walks;  // per dgm face: departing ends in order
    std::vector<int> face_object;     // dgm face -> local object index

    int branch_count() const { return static_cast<int>(branch_face.size()); }
    int edge_count() const { return static_cast<int>(edges.size()); }
    int face_count() const { return static_cast<int>(face_walks.size()); }
    int first_dual(int end) const {
        const Edge& e = edges[end_edge[end]];
        return end == e.end_a ? e.dual_path.front() : e.dual_path.back();
    }
};

/// Primal vertex at the corner between slot s and slot s+1 of branch face f.
inline int corner_vertex(const HalfEdgeGraph& t, int face, int slot) {
    const auto& walk = t.face_walk(face);
    return t.head(walk[slot]);
}

inline Diagram build_diagram(const PreparedComponent& c, const VoronoiPartition&,
                             const Prediagram& pre) {
    if (pre.ell <= 2)
        throw Error(ErrorCode::DegenerateFamily,
                    "diagram undefined for families of size " + std::to_string(pre.ell));
    const HalfEdgeGraph& t = c.g.topo;
    Diagram dg;
    dg.ell = pre.ell;
    dg.branch_of_face.assign(t.face_count(), -1);
    for (int f = 0; f < t.face_count(); ++f)
        if (pre.active_face[f] && pre.degree[f] == 3) {
            dg.branch_of_face[f] = dg.branch_count();
            dg.branch_face.push_back(f);
        }
    const int nb = dg.branch_count();
    if (nb != 2 * pre.ell - 4)
        throw Error(ErrorCode::MalformedInstance, "branch count is not 2l-4");
    dg.end_edge.assign(3 * nb, -1);
    dg.end_other.assign(3 * nb, -1);

    // Walk contracted paths from every unused branch slot.
    for (int b = 0; b < nb; ++b) {
        int f = dg.branch_face[b];
        const auto& walk = t.face_walk(f);
        for (int s = 0; s < 3; ++s) {
            int end = 3 * b + s;
            if (dg.end_edge[end] >= 0) continue;
            int e0 = HalfEdgeGraph::edge_of(walk[s]);
            if (!pre.alive[e0])
                throw Error(ErrorCode::MalformedInstance, "dead slot at a branch");
            Diagram::Edge de;
            de.end_a = end;
            de.dual_path.push_back(e0);
            // Step across e0 away from f, then through degree-2 faces.
            int enter_half = t.face_of(2 * e0) == f ? 2 * e0 + 1 : 2 * e0;
            int cur_face = t.face_of(enter_half);
            while (dg.branch_of_face[cur_face] < 0) {
                // degree-2 face: leave via the other alive edge
                int next_e = -1, next_half = -1;
                for (int h : t.face_walk(cur_face)) {
                    int e = HalfEdgeGraph::edge_of(h);
                    if (!pre.alive[e] || e == HalfEdgeGraph::edge_of(enter_half)) continue;
                    next_e = e;
                    next_half = h;
                }
                if (next_e < 0)
                    throw Error(ErrorCode::MalformedInstance, "contracted path dead-ends");
                de.dual_path.push_back(next_e);
                enter_half = HalfEdgeGraph::twin(next_half);
                cur_face = t.face_of(enter_half);
            }
            int b2 = dg.branch_of_face[cur_face];
            const auto& walk2 = t.face_walk(cur_face);
            int s2 = -1;
            for (int i = 0; i < 3; ++i)
                if (HalfEdgeGraph::edge_of(walk2[i]) == de.dual_path.back()) s2 = i;
            int end_b = 3 * b2 + s2;
            if (end_b == end)
                throw Error(ErrorCode::MalformedInstance, "path returned to its own slot");
            de.end_b = end_b;
            int eid = dg.edge_count();
            dg.edges.push_back(std::move(de));
            dg.end_edge[end] = eid;
            dg.end_edge[end_b] = eid;
            dg.end_other[end] = end_b;
            dg.end_other[end_b] = end;
        }
    }
    if (dg.edge_count() != 3 * pre.ell - 6)
        throw Error(ErrorCode::MalformedInstance, "diagram edge count is not 3l-6");

    // Trace diagram faces: departing end (b,s) arrives at (b',s') and the
    // walk departs next from (b', s'+1); the corner passed is (b', s').
    dg.face_of_depart.assign(3 * nb, -1);
    for (int e0 = 0; e0 < 3 * nb; ++e0) {
        if (dg.face_of_depart[e0] >= 0) continue;
        int fid = dg.face_count();
        dg.face_walks.emplace_back();
        int cur = e0;
        do {
            dg.face_of_depart[cur] = fid;
            dg.face_walks[fid].push_back(cur);
            int arr = dg.end_other[cur];
            cur = 3 * (arr / 3) + (arr % 3 + 1) % 3;
        } while (cur != e0);
    }
    if (dg.face_count() != pre.ell)
        throw Error(ErrorCode::MalformedInstance, "diagram face count is not ell");

    // Face <-> object via the corner zones.
    dg.face_object.assign(dg.face_count(), -1);
    for (int fid = 0; fid < dg.face_count(); ++fid) {
        for (int dep : dg.face_walks[fid]) {
            int arr = dg.end_other[dep];
            // corner passed right before departing from the successor end
            int b = arr / 3, s = arr % 3;
            int v = corner_vertex(t, dg.branch_face[b], s);
            int obj = pre.zone_object[pre.zone[v]];
            if (dg.face_object[fid] < 0)
                dg.face_object[fid] = obj;
            else if (dg.face_object[fid] != obj)
                throw Error(ErrorCode::MalformedInstance, "diagram face spans two zones");
        }
    }
    {
        std::set<int> objs(dg.face_object.begin(), dg.face_object.end());
        if (static_cast<int>(objs.size()) != pre.ell)
            throw Error(ErrorCode::MalformedInstance, "face-object map is not a bijection");
    }

    // Connectivity of the diagram.
    std::vector<char> vis(nb, 0);
    std::vector<int> st{0};
    vis[0] = 1;
    int cnt = 0;
    while (!st.empty()) {
        int b = st.back();
        st.pop_back();
        cnt++;
        for (int s = 0; s < 3; ++s) {
            int ob = dg.end_other[3 * b + s] / 3;
            if (!vis[ob]) { vis[ob] = 1; st.push_back(ob); }
        }
    }
    if (cnt != nb) throw Error(ErrorCode::MalformedInstance, "diagram is disconnected");
    return dg;
}

/// Every loop of a connected 3-regular sphere multigraph bounds
/// a face on one side. True when one directed traversal of the loop is a
/// whole face walk by itself.
inline bool loop_bounds_face(const Diagram& dg, int edge_id) {
    const auto& e = dg.edges[edge_id];
    if (!e.loop()) throw Error(ErrorCode::MalformedInstance, "edge is not a loop");
    for (int end : {e.end_a, e.end_b}) {
        int f = dg.face_of_depart[end];
        if (dg.face_walks[f].size() == 1) return true;
    }
    return false;
}

}  // namespace dnc

#endif
