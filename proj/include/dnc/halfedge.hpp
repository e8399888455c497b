#ifndef DNC_HALFEDGE_HPP
#define DNC_HALFEDGE_HPP

#include <algorithm>
#include <cassert>
#include <vector>

#include "dnc/errors.hpp"

namespace dnc {

/// Rotation-system representation of a sphere-embedded graph.
///
/// Half-edge h has twin h^1 and edge h/2. Rotation successors run
/// counterclockwise around the origin vertex. Face walks are traced with
/// next(h) = rot_next(twin(h)), which keeps the traced face on the left of h.
class HalfEdgeGraph {
public:
    HalfEdgeGraph() = default;
    explicit HalfEdgeGraph(int vertex_count) { vertex_out_.assign(vertex_count, -1); }

    int vertex_count() const { return static_cast<int>(vertex_out_.size()); }
    int edge_count() const { return static_cast<int>(origin_.size() / 2); }
    int half_edge_count() const { return static_cast<int>(origin_.size()); }
    int face_count() const { return static_cast<int>(face_walks_.size()); }

    static int twin(int h) { return h ^ 1; }
    static int edge_of(int h) { return h >> 1; }
    int origin(int h) const { return origin_[h]; }
    int head(int h) const { return origin_[twin(h)]; }
    int rot_next(int h) const { return rot_next_[h]; }
    int rot_prev(int h) const { return rot_prev_[h]; }
    int edge_u(int e) const { return origin_[2 * e]; }
    int edge_v(int e) const { return origin_[2 * e + 1]; }
    int any_out(int v) const { return vertex_out_[v]; }

    int next_in_face(int h) const { return rot_next_[twin(h)]; }
    int face_of(int h) const { return face_of_[h]; }
    const std::vector<int>& face_walk(int f) const { return face_walks_[f]; }
    const std::vector<std::vector<int>>& face_walks() const { return face_walks_; }

    int add_vertex() {
        vertex_out_.push_back(-1);
        return vertex_count() - 1;
    }

    /// All outgoing half-edges of v in rotation order.
    std::vector<int> out_half_edges(int v) const {
        std::vector<int> out;
        int h0 = vertex_out_[v];
        if (h0 < 0) return out;
        int h = h0;
        do {
            out.push_back(h);
            h = rot_next_[h];
        } while (h != h0);
        return out;
    }

    int degree(int v) const { return static_cast<int>(out_half_edges(v).size()); }

    bool edge_exists(int u, int v) const {
        for (int h : out_half_edges(u))
            if (head(h) == v) return true;
        return false;
    }

    /// Find the edge between u and v, or -1. Assumes at most one exists.
    int edge_between(int u, int v) const {
        for (int h : out_half_edges(u))
            if (head(h) == v) return edge_of(h);
        return -1;
    }

    /// Build from per-vertex counterclockwise neighbor lists. Lists must be
    /// loop-free and parallel-free and mutually consistent.
    static HalfEdgeGraph from_rotations(const std::vector<std::vector<int>>& rotations) {
        const int n = static_cast<int>(rotations.size());
        HalfEdgeGraph g(n);
        // First pass: count arcs and check symmetry.
        std::vector<std::vector<std::pair<int, int>>> seen(n);  // at v: (neighbor, half-edge)
        long long arcs = 0;
        for (int v = 0; v < n; ++v) {
            for (int w : rotations[v]) {
                if (w < 0 || w >= n)
                    throw Error(ErrorCode::EmbeddingInvalid, "neighbor id out of range");
                if (w == v)
                    throw Error(ErrorCode::EmbeddingInvalid, "loop in rotation list");
                arcs++;
            }
        }
        if (arcs % 2 != 0) throw Error(ErrorCode::EmbeddingInvalid, "odd arc count");
        const int m = static_cast<int>(arcs / 2);
        g.origin_.assign(2 * m, -1);
        g.rot_next_.assign(2 * m, -1);
        g.rot_prev_.assign(2 * m, -1);

        // Assign half-edge ids: for u < w the pair (u,w) takes the next free
        // edge slot when first encountered; h=2e originates at the first
        // endpoint encountered.
        int next_edge = 0;
        std::vector<std::vector<int>> out(n);
        for (int v = 0; v < n; ++v) {
            for (int w : rotations[v]) {
                int h;
                // Look for the already-created twin (w -> v).
                int found = -1;
                for (auto& [nb, hh] : seen[w]) {
                    if (nb == v && g.origin_[twin(hh)] == -1) {
                        found = hh;
                        break;
                    }
                }
                if (found >= 0) {
                    h = twin(found);
                    g.origin_[h] = v;
                } else {
                    if (next_edge >= m)
                        throw Error(ErrorCode::EmbeddingInvalid, "rotation lists not symmetric");
                    h = 2 * next_edge++;
                    g.origin_[h] = v;
                    seen[v].push_back({w, h});
                }
                out[v].push_back(h);
            }
        }
        for (int h = 0; h < 2 * m; ++h)
            if (g.origin_[h] < 0)
                throw Error(ErrorCode::EmbeddingInvalid, "rotation lists not symmetric");
        for (int v = 0; v < n; ++v) {
            const auto& o = out[v];
            if (o.empty()) continue;
            g.vertex_out_[v] = o[0];
            for (std::size_t i = 0; i < o.size(); ++i) {
                g.rot_next_[o[i]] = o[(i + 1) % o.size()];
                g.rot_prev_[o[(i + 1) % o.size()]] = o[i];
            }
        }
        g.trace_faces();
        return g;
    }

    /// Retrace all face walks (deterministic: scan half-edges by id).
    void trace_faces() {
        const int hn = half_edge_count();
        face_of_.assign(hn, -1);
        face_walks_.clear();
        for (int h0 = 0; h0 < hn; ++h0) {
            if (face_of_[h0] >= 0) continue;
            int f = face_count();
            face_walks_.emplace_back();
            int h = h0;
            do {
                face_of_[h] = f;
                face_walks_[f].push_back(h);
                h = next_in_face(h);
            } while (h != h0);
        }
    }

    /// Insert a new edge between origin(ha) and origin(hb) through the face
    /// both half-edges lie on, splitting it. Face data is updated in place.
    /// Returns the new edge id; its half-edge 2e originates at origin(ha).
    int add_chord(int ha, int hb) {
        assert(face_of_[ha] == face_of_[hb] && ha != hb);
        const int u = origin_[ha];
        const int v = origin_[hb];
        const int e = edge_count();
        const int n1 = 2 * e, n2 = 2 * e + 1;
        origin_.push_back(u);
        origin_.push_back(v);
        rot_next_.resize(2 * e + 2);
        rot_prev_.resize(2 * e + 2);
        splice_before(n1, ha);
        splice_before(n2, hb);

        // Old walk (circular): [ha ... hp_b, hb ... hp_a].
        const int f = face_of_[ha];
        std::vector<int> old = face_walks_[f];
        int ia = -1, ib = -1;
        for (std::size_t i = 0; i < old.size(); ++i) {
            if (old[i] == ha) ia = static_cast<int>(i);
            if (old[i] == hb) ib = static_cast<int>(i);
        }
        assert(ia >= 0 && ib >= 0);
        // Face A keeps id f: [n1, hb, ..., hp_a]; face B is new: [n2, ha, ..., hp_b].
        std::vector<int> walk_a{n1}, walk_b{n2};
        for (int i = ib; i != ia; i = (i + 1) % static_cast<int>(old.size()))
            walk_a.push_back(old[i]);
        for (int i = ia; i != ib; i = (i + 1) % static_cast<int>(old.size()))
            walk_b.push_back(old[i]);
        const int fb = face_count();
        face_walks_[f] = walk_a;
        face_walks_.push_back(walk_b);
        face_of_.resize(2 * e + 2, -1);
        for (int h : walk_a) face_of_[h] = f;
        for (int h : walk_b) face_of_[h] = fb;
        return e;
    }

    /// Insert a fresh pendant vertex inside the face of ha, attached to
    /// origin(ha). The face walk gains the detour right before ha.
    /// Returns the new vertex id; the new edge is edge_count()-1 after the
    /// call, with half-edge 2e originating at origin(ha).
    int add_pendant(int ha) {
        const int u = origin_[ha];
        const int x = add_vertex();
        const int e = edge_count();
        const int n1 = 2 * e, n2 = 2 * e + 1;
        origin_.push_back(u);
        origin_.push_back(x);
        rot_next_.resize(2 * e + 2);
        rot_prev_.resize(2 * e + 2);
        splice_before(n1, ha);
        rot_next_[n2] = n2;  // sole edge at x
        rot_prev_[n2] = n2;
        vertex_out_[x] = n2;

        const int f = face_of_[ha];
        std::vector<int>& walk = face_walks_[f];
        auto it = std::find(walk.begin(), walk.end(), ha);
        assert(it != walk.end());
        it = walk.insert(it, n2);
        walk.insert(it, n1);
        face_of_.resize(2 * e + 2, -1);
        face_of_[n1] = f;
        face_of_[n2] = f;
        return x;
    }

    /// Consistency check: rotation cycles well-formed, faces partition the
    /// half-edges, and Euler's formula holds per connected component.
    void validate() const {
        const int hn = half_edge_count();
        for (int h = 0; h < hn; ++h) {
            if (rot_next_[rot_prev_[h]] != h || rot_prev_[rot_next_[h]] != h)
                throw Error(ErrorCode::EmbeddingInvalid, "broken rotation links");
            if (origin_[rot_next_[h]] != origin_[h])
                throw Error(ErrorCode::EmbeddingInvalid, "rotation leaves origin");
            if (face_of_[h] < 0)
                throw Error(ErrorCode::EmbeddingInvalid, "untraced half-edge");
        }
        // Component-wise Euler check.
        std::vector<int> comp(vertex_count(), -1);
        int ncomp = 0;
        for (int s = 0; s < vertex_count(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int h : out_half_edges(v)) {
                    int w = head(h);
                    if (comp[w] < 0) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ncomp++;
        }
        std::vector<long long> vc(ncomp, 0), ec(ncomp, 0), fc(ncomp, 0);
        for (int v = 0; v < vertex_count(); ++v) vc[comp[v]]++;
        for (int e = 0; e < edge_count(); ++e) ec[comp[edge_u(e)]]++;
        for (int f = 0; f < face_count(); ++f) fc[comp[origin_[face_walks_[f][0]]]]++;
        for (int c = 0; c < ncomp; ++c) {
            long long faces = fc[c] == 0 ? 1 : fc[c];  // isolated vertex: one face
            if (vc[c] - ec[c] + faces != 2)
                throw Error(ErrorCode::EmbeddingInvalid, "Euler formula violated");
        }
    }

    std::vector<int> component_of_vertices() const {
        std::vector<int> comp(vertex_count(), -1);
        int ncomp = 0;
        for (int s = 0; s < vertex_count(); ++s) {
            if (comp[s] >= 0) continue;
            std::vector<int> stack{s};
            comp[s] = ncomp;
            while (!stack.empty()) {
                int v = stack.back();
                stack.pop_back();
                for (int h : out_half_edges(v)) {
                    int w = head(h);
                    if (comp[w] < 0) {
                        comp[w] = ncomp;
                        stack.push_back(w);
                    }
                }
            }
            ncomp++;
        }
        return comp;
    }

private:
    /// Insert half-edge h (same origin as hb) immediately before hb in the
    /// rotation at their shared origin.
    void splice_before(int h, int hb) {
        int hp = rot_prev_[hb];
        rot_next_[hp] = h;
        rot_prev_[h] = hp;
        rot_next_[h] = hb;
        rot_prev_[hb] = h;
    }

    std::vector<int> origin_;
    std::vector<int> rot_next_;
    std::vector<int> rot_prev_;
    std::vector<int> vertex_out_;
    std::vector<int> face_of_;
    std::vector<std::vector<int>> face_walks_;
};

}  // namespace dnc

#endif
