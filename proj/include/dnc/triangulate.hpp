#ifndef DNC_TRIANGULATE_HPP
#define DNC_TRIANGULATE_HPP

#include <set>
#include <vector>

#include "dnc/graph.hpp"

namespace dnc {

namespace detail {

/// Insert an apex vertex inside face f and connect it to every occurrence of
/// the boundary walk: directly at the first occurrence of each vertex, and
/// through a fresh relay vertex at repeated occurrences (keeps the graph
/// simple). Afterwards every subface has distinct boundary vertices and walk
/// length at most 5.
inline void apex_insert(EmbeddedGraph& g, int f, const Int& big_m) {
    HalfEdgeGraph& t = g.topo;
    std::vector<int> walk = t.face_walk(f);  // copy: face data mutates below
    const int len = static_cast<int>(walk.size());
    if (len < 2) throw Error(ErrorCode::EmbeddingInvalid, "degenerate face walk");

    std::set<int> connected;
    t.add_pendant(walk[0]);
    g.weight.push_back(big_m);
    connected.insert(t.origin(walk[0]));
    int hx = 2 * (t.edge_count() - 1) + 1;  // x -> u0 on the remainder face

    for (int i = 1; i < len; ++i) {
        int hb = walk[i];
        int u = t.origin(hb);
        if (!connected.count(u)) {
            int e = t.add_chord(hx, hb);
            g.weight.push_back(big_m);
            connected.insert(u);
            hx = 2 * e;
        } else {
            t.add_pendant(hb);  // relay vertex y attached to u
            g.weight.push_back(big_m);
            int m2 = 2 * (t.edge_count() - 1) + 1;  // y -> u
            int e = t.add_chord(hx, m2);
            g.weight.push_back(big_m);
            hx = 2 * e;
        }
    }
}

}  // namespace detail

/// Triangulate every face with weight-big_m helper edges. Distances between
/// original vertices are unchanged provided big_m exceeds the sum of all
/// finite weights. Idempotent on already-triangulated graphs.
inline EmbeddedGraph triangulate(const EmbeddedGraph& input, const Int& big_m) {
    EmbeddedGraph g = input;
    HalfEdgeGraph& t = g.topo;
    if (t.edge_count() == 0)
        throw Error(ErrorCode::EmbeddingInvalid, "cannot triangulate an edgeless graph");

    long long guard = 10LL * (t.edge_count() + t.vertex_count()) + 100;
    while (true) {
        if (guard-- < 0)
            throw Error(ErrorCode::EmbeddingInvalid, "triangulation did not converge");
        int target = -1;
        for (int f = 0; f < t.face_count(); ++f) {
            if (!g.face_is_triangle(f)) {
                target = f;
                break;
            }
        }
        if (target < 0) {
            if (t.vertex_count() > 3) break;
            target = 0;  // too few vertices: grow with an apex
        }

        const auto& walk = t.face_walk(target);
        bool distinct = true;
        {
            std::set<int> seen;
            for (int h : walk)
                if (!seen.insert(t.origin(h)).second) { distinct = false; break; }
        }
        if (distinct && walk.size() >= 4 && t.vertex_count() > 3) {
            // Chord splitting a triangle off, when it keeps the graph simple.
            int pick = -1;
            const int L = static_cast<int>(walk.size());
            for (int i = 0; i < L; ++i) {
                int a = t.origin(walk[i]);
                int b = t.origin(walk[(i + 2) % L]);
                if (!t.edge_exists(a, b)) { pick = i; break; }
            }
            if (pick >= 0) {
                t.add_chord(walk[pick], walk[(pick + 2) % static_cast<int>(walk.size())]);
                g.weight.push_back(big_m);
                continue;
            }
        }
        detail::apex_insert(g, target, big_m);
    }

    t.trace_faces();  // canonical face ids
    t.validate();
    g.triangulated = true;
    if (!g.all_faces_triangles() || t.vertex_count() <= 3)
        throw Error(ErrorCode::EmbeddingInvalid, "triangulation postcondition failed");
    return g;
}

}  // namespace dnc

#endif
