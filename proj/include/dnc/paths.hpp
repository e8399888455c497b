#ifndef DNC_PATHS_HPP
#define DNC_PATHS_HPP

#include <queue>
#include <vector>

#include "dnc/graph.hpp"

namespace dnc {

/// Multi-source shortest paths. pred[v] is the half-edge (w -> v) along which
/// v was reached, -1 at sources. With perturbed weights the tree is the
/// unique shortest-path forest.
struct ShortestPaths {
    std::vector<Int> dist;
    std::vector<int> pred;
    std::vector<bool> reached;
};

inline ShortestPaths shortest_paths_from_set(const HalfEdgeGraph& topo,
                                             const std::vector<Int>& weight,
                                             const std::vector<int>& sources) {
    const int n = topo.vertex_count();
    if (sources.empty())
        throw Error(ErrorCode::MalformedInstance, "shortest paths need a nonempty source set");
    ShortestPaths sp;
    sp.dist.assign(n, Int(0));
    sp.pred.assign(n, -1);
    sp.reached.assign(n, false);

    using Item = std::pair<Int, int>;
    auto cmp = [](const Item& a, const Item& b) {
        return a.first > b.first || (a.first == b.first && a.second > b.second);
    };
    std::priority_queue<Item, std::vector<Item>, decltype(cmp)> pq(cmp);
    std::vector<bool> done(n, false);
    for (int s : sources) {
        sp.reached[s] = true;
        pq.push({Int(0), s});
    }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (done[v] || d != sp.dist[v]) continue;
        done[v] = true;
        for (int h : topo.out_half_edges(v)) {
            int w = topo.head(h);
            Int nd = d + weight[HalfEdgeGraph::edge_of(h)];
            if (!sp.reached[w] || nd < sp.dist[w]) {
                sp.reached[w] = true;
                sp.dist[w] = nd;
                sp.pred[w] = h;  // h runs v -> w
                pq.push({nd, w});
            }
        }
    }
    return sp;
}

// ── Side classification for tree-path walks ─────────────────────

/// Classification of faces and vertices against a closed walk made of two
/// tree paths closed by one edge. Side 0/1 are the two open disks; walk
/// elements carry -1. `degenerate` marks walks whose cycle part is empty.
struct ClosedWalkSides {
    bool degenerate = false;
    std::vector<int> face_side;    // per face: 0, 1
    std::vector<int> vertex_side;  // per vertex: 0, 1, or -1 (on the walk)
    std::vector<bool> cycle_edge;  // per edge

    bool all_vertices_on_side(const std::vector<int>& vs, int side) const {
        for (int v : vs)
            if (vertex_side[v] != side) return false;
        return true;
    }
};

/// Classify faces/vertices of g against the walk path1 + path2 + closing
/// edge, where both paths are edge lists sharing only a common prefix (tree
/// paths from one root). Seeds are the two faces incident to the closing
/// edge; side 0 holds the face left of half-edge 2*closing_edge.
inline ClosedWalkSides classify_sides(const EmbeddedGraph& g,
                                      const std::vector<int>& path1_edges,
                                      const std::vector<int>& path2_edges,
                                      int closing_edge) {
    const HalfEdgeGraph& t = g.topo;
    const int ne = t.edge_count();
    if (closing_edge < 0 || closing_edge >= ne)
        throw Error(ErrorCode::WalkMalformed, "closing edge out of range");

    ClosedWalkSides out;
    out.cycle_edge.assign(ne, false);
    auto flip = [&](int e) { out.cycle_edge[e] = !out.cycle_edge[e]; };
    for (int e : path1_edges) flip(e);
    for (int e : path2_edges) flip(e);
    flip(closing_edge);

    bool any_cycle = false;
    for (int e = 0; e < ne; ++e) any_cycle = any_cycle || out.cycle_edge[e];
    out.vertex_side.assign(t.vertex_count(), -1);
    out.face_side.assign(t.face_count(), -1);
    if (!any_cycle) {
        // Degenerate: the walk encloses nothing; everything lands on side 0.
        out.degenerate = true;
        for (auto& s : out.face_side) s = 0;
        for (int v = 0; v < t.vertex_count(); ++v) out.vertex_side[v] = 0;
        for (int e : path1_edges) {
            out.vertex_side[t.edge_u(e)] = -1;
            out.vertex_side[t.edge_v(e)] = -1;
        }
        for (int e : path2_edges) {
            out.vertex_side[t.edge_u(e)] = -1;
            out.vertex_side[t.edge_v(e)] = -1;
        }
        out.vertex_side[t.edge_u(closing_edge)] = -1;
        out.vertex_side[t.edge_v(closing_edge)] = -1;
        return out;
    }
    if (!out.cycle_edge[closing_edge])
        throw Error(ErrorCode::WalkMalformed, "closing edge cancelled but cycle nonempty");

    // Flood faces across non-cycle edges from the two seed faces.
    auto flood = [&](int seed_face, int side) {
        std::vector<int> stack{seed_face};
        out.face_side[seed_face] = side;
        while (!stack.empty()) {
            int f = stack.back();
            stack.pop_back();
            for (int h : t.face_walk(f)) {
                if (out.cycle_edge[HalfEdgeGraph::edge_of(h)]) continue;
                int f2 = t.face_of(HalfEdgeGraph::twin(h));
                if (out.face_side[f2] < 0) {
                    out.face_side[f2] = side;
                    stack.push_back(f2);
                }
            }
        }
    };
    flood(t.face_of(2 * closing_edge), 0);
    int other = t.face_of(2 * closing_edge + 1);
    if (out.face_side[other] == 0)
        throw Error(ErrorCode::WalkMalformed, "cycle does not separate its seed faces");
    flood(other, 1);
    for (int f = 0; f < t.face_count(); ++f)
        if (out.face_side[f] < 0)
            throw Error(ErrorCode::WalkMalformed, "unreached face in side flood");

    // Vertices: walk vertices are -1, every other vertex inherits the side of
    // its incident faces (all agree).
    std::vector<bool> on_walk(t.vertex_count(), false);
    auto mark = [&](int e) {
        on_walk[t.edge_u(e)] = true;
        on_walk[t.edge_v(e)] = true;
    };
    for (int e : path1_edges) mark(e);
    for (int e : path2_edges) mark(e);
    mark(closing_edge);

    for (int v = 0; v < t.vertex_count(); ++v) {
        if (on_walk[v]) continue;
        int side = -1;
        for (int h : t.out_half_edges(v)) {
            int s = out.face_side[t.face_of(h)];
            if (side < 0) side = s;
            else if (side != s)
                throw Error(ErrorCode::WalkMalformed, "vertex sees both sides off-walk");
        }
        out.vertex_side[v] = side < 0 ? 0 : side;
    }
    return out;
}

}  // namespace dnc

#endif
