#ifndef DNC_GRAPH_HPP
#define DNC_GRAPH_HPP

#include <map>
#include <utility>
#include <vector>

#include "dnc/halfedge.hpp"
#include "dnc/numeric.hpp"

namespace dnc {

/// Sphere-embedded weighted graph. After construction the structure is
/// immutable and safe to share across threads.
struct EmbeddedGraph {
    HalfEdgeGraph topo;
    std::vector<Int> weight;  // per edge, base band (scaled integers)
    bool triangulated = false;

    int vertex_count() const { return topo.vertex_count(); }
    int edge_count() const { return topo.edge_count(); }
    int face_count() const { return topo.face_count(); }

    /// A face is a proper triangle when its walk has length 3 with three
    /// distinct vertices.
    bool face_is_triangle(int f) const {
        const auto& w = topo.face_walk(f);
        if (w.size() != 3) return false;
        int a = topo.origin(w[0]), b = topo.origin(w[1]), c = topo.origin(w[2]);
        return a != b && b != c && a != c;
    }

    bool all_faces_triangles() const {
        for (int f = 0; f < face_count(); ++f)
            if (!face_is_triangle(f)) return false;
        return true;
    }

    /// The three corner vertices of a triangular face, in walk order.
    std::array<int, 3> triangle_corners(int f) const {
        const auto& w = topo.face_walk(f);
        return {topo.origin(w[0]), topo.origin(w[1]), topo.origin(w[2])};
    }
};

/// Per-edge weight input: (u, v, weight). Parallel entries allowed; the
/// lightest survives cleanup together with one rotation slot per endpoint.
struct WeightedEdgeInput {
    int u = 0, v = 0;
    Int w;
};

/// Build an embedded graph from rotation lists and edge weights.
///
/// Loops are dropped and only the lightest of any pack of parallel edges is
/// kept (first rotation occurrence keeps its slot). Weights must be positive.
/// Validation traces faces and checks Euler's formula per component.
inline EmbeddedGraph build_graph(int vertex_count,
                                 const std::vector<std::vector<int>>& rotations,
                                 const std::vector<WeightedEdgeInput>& weights) {
    if (static_cast<int>(rotations.size()) != vertex_count)
        throw Error(ErrorCode::EmbeddingInvalid, "rotation list count != vertex count");

    std::map<std::pair<int, int>, Int> weight_of;
    for (const auto& we : weights) {
        if (we.u < 0 || we.u >= vertex_count || we.v < 0 || we.v >= vertex_count)
            throw Error(ErrorCode::EmbeddingInvalid, "edge endpoint out of range");
        if (we.u == we.v) continue;  // loop entries dropped with their slots
        if (we.w <= 0)
            throw Error(ErrorCode::NonPositiveWeight,
                        "edge (" + std::to_string(we.u) + "," + std::to_string(we.v) +
                            ") has non-positive weight");
        std::pair<int, int> key = std::minmax(we.u, we.v);
        auto it = weight_of.find(key);
        if (it == weight_of.end() || we.w < it->second) weight_of[key] = we.w;
    }

    // Clean rotation lists: drop loops, keep the first occurrence of each
    // neighbor. The induced cyclic order of survivors is preserved.
    std::vector<std::vector<int>> clean(vertex_count);
    for (int v = 0; v < vertex_count; ++v) {
        std::vector<bool> used(vertex_count, false);
        for (int w : rotations[v]) {
            if (w < 0 || w >= vertex_count)
                throw Error(ErrorCode::EmbeddingInvalid, "neighbor id out of range");
            if (w == v) continue;
            if (used[w]) continue;
            used[w] = true;
            clean[v].push_back(w);
        }
    }
    // Symmetry check before half-edge matching for a crisper error.
    for (int v = 0; v < vertex_count; ++v)
        for (int w : clean[v]) {
            bool back = false;
            for (int x : clean[w])
                if (x == v) { back = true; break; }
            if (!back)
                throw Error(ErrorCode::EmbeddingInvalid,
                            "rotation lists not symmetric at edge (" + std::to_string(v) +
                                "," + std::to_string(w) + ")");
        }

    EmbeddedGraph g;
    g.topo = HalfEdgeGraph::from_rotations(clean);
    g.topo.validate();  // Euler per component

    g.weight.resize(g.topo.edge_count());
    for (int e = 0; e < g.topo.edge_count(); ++e) {
        std::pair<int, int> key = std::minmax(g.topo.edge_u(e), g.topo.edge_v(e));
        auto it = weight_of.find(key);
        if (it == weight_of.end())
            throw Error(ErrorCode::EmbeddingInvalid,
                        "missing weight for edge (" + std::to_string(key.first) + "," +
                            std::to_string(key.second) + ")");
        g.weight[e] = it->second;
    }
    g.triangulated =
        g.vertex_count() > 3 && g.all_faces_triangles() && g.edge_count() > 0;
    return g;
}

}  // namespace dnc

#endif
