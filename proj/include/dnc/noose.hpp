#ifndef DNC_NOOSE_HPP
#define DNC_NOOSE_HPP

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "dnc/separators.hpp"
#include "dnc/voronoi.hpp"

namespace dnc {

/// Radial graph of a diagram: one side is the branch set, the other the face
/// centers, one edge per corner. Corner (b,s) lies between slots s and s+1
/// of branch b and carries the primal vertex shared by those boundary edges.
struct RadialGraph {
    int branches = 0;
    int centers = 0;
    // corner id = 3*b + s; endpoints: branch b and the center of its dgm face
    std::vector<int> corner_center;   // corner -> dgm face id
    std::vector<int> corner_pvertex;  // corner -> primal vertex
    std::vector<std::vector<int>> rot_branch;  // [b]: 3 corners, rotation order
    std::vector<std::vector<int>> rot_center;  // [fid]: corners in walk order

    int vertex_count() const { return branches + centers; }
    int center_vertex(int fid) const { return branches + fid; }
    int corner_count() const { return 3 * branches; }
    int endpoint_other(int corner, int v) const {
        int b = corner / 3, cv = center_vertex(corner_center[corner]);
        return v == b ? cv : b;
    }
};

inline RadialGraph build_radial(const PreparedComponent& c, const Diagram& dg) {
    RadialGraph r;
    r.branches = dg.branch_count();
    r.centers = dg.face_count();
    r.corner_center.assign(3 * r.branches, -1);
    r.corner_pvertex.assign(3 * r.branches, -1);
    r.rot_branch.assign(r.branches, {});
    r.rot_center.assign(r.centers, {});
    for (int b = 0; b < r.branches; ++b) {
        for (int s = 0; s < 3; ++s) {
            int corner = 3 * b + s;
            // corner (b,s) is swept by the face departing from slot s+1
            int fid = dg.face_of_depart[3 * b + (s + 1) % 3];
            r.corner_center[corner] = fid;
            r.corner_pvertex[corner] = corner_vertex(c.g.topo, dg.branch_face[b], s);
            r.rot_branch[b].push_back(corner);
        }
    }
    for (int fid = 0; fid < r.centers; ++fid) {
        for (int dep : dg.face_walks[fid]) {
            int b = dep / 3, s = dep % 3;
            r.rot_center[fid].push_back(3 * b + (s + 2) % 3);  // corner before departing
        }
        // Walk order turns clockwise around the center; the sphere embedding
        // needs the counterclockwise order (validated by Euler in tracing).
        std::reverse(r.rot_center[fid].begin(), r.rot_center[fid].end());
    }
    std::vector<int> seen(3 * r.branches, 0);
    for (int fid = 0; fid < r.centers; ++fid)
        for (int corner : r.rot_center[fid]) {
            if (r.corner_center[corner] != fid)
                throw Error(ErrorCode::MalformedInstance, "radial rotation mismatch");
            seen[corner]++;
        }
    for (int x : seen)
        if (x != 1) throw Error(ErrorCode::MalformedInstance, "corner multiplicity != 1");
    return r;
}

/// A noose as a cyclic alternating face/branch sequence. Transit t enters
/// branch_t from center_t via corner r_in and leaves toward the next center
/// via corner r_out.
struct Noose {
    struct Transit {
        int center = -1;  // dgm face id
        int r_in = -1;    // corner id
        int branch = -1;
        int r_out = -1;
    };
    std::vector<Transit> transits;
    int length() const { return static_cast<int>(transits.size()); }
};

namespace detail {

/// Face tracing of the radial embedding. Half-edge 2r is the branch-side end
/// of corner r, 2r+1 the center side. Euler-validated.
struct RadialFaces {
    std::vector<int> face_of;  // per radial half-edge
    int count = 0;
};

inline RadialFaces trace_radial_faces(const RadialGraph& r) {
    const int hc = 2 * r.corner_count();
    std::vector<int> rot_next(hc, -1);
    for (int b = 0; b < r.branches; ++b) {
        const auto& rot = r.rot_branch[b];
        for (std::size_t i = 0; i < rot.size(); ++i)
            rot_next[2 * rot[i]] = 2 * rot[(i + 1) % rot.size()];
    }
    for (int f = 0; f < r.centers; ++f) {
        const auto& rot = r.rot_center[f];
        for (std::size_t i = 0; i < rot.size(); ++i)
            rot_next[2 * rot[i] + 1] = 2 * rot[(i + 1) % rot.size()] + 1;
    }
    RadialFaces out;
    out.face_of.assign(hc, -1);
    for (int h0 = 0; h0 < hc; ++h0) {
        if (out.face_of[h0] >= 0) continue;
        int f = out.count++;
        int h = h0;
        do {
            out.face_of[h] = f;
            h = rot_next[h ^ 1];
        } while (h != h0);
    }
    long long v = r.vertex_count(), e = r.corner_count();
    if (v - e + out.count != 2)
        throw Error(ErrorCode::MalformedInstance, "radial embedding fails Euler");
    return out;
}

struct CycleCandidate {
    std::vector<int> corners;   // corner i connects verts[i] -> verts[i+1 mod L]
    std::vector<int> verts;     // radial vertex sequence
};

}  // namespace detail

/// Faces of dgm strictly on each side of the cycle (given by its corners).
inline std::pair<int, int> noose_face_balance(const RadialGraph& r,
                                              const std::vector<int>& cycle_corners) {
    detail::RadialFaces rf = detail::trace_radial_faces(r);
    std::vector<char> on_cycle(r.corner_count(), 0);
    for (int x : cycle_corners) on_cycle[x] = 1;
    std::vector<char> center_on(r.centers, 0);
    for (int x : cycle_corners) center_on[r.corner_center[x]] = 1;

    std::vector<int> side(rf.count, -1);
    int sides_found = 0;
    for (int seed = 0; seed < rf.count; ++seed) {
        if (side[seed] >= 0) continue;
        if (sides_found >= 2)
            throw Error(ErrorCode::NooseInvalid, "cycle yields more than two sides");
        int s = sides_found++;
        std::vector<int> st{seed};
        side[seed] = s;
        while (!st.empty()) {
            int f = st.back();
            st.pop_back();
            for (int corner = 0; corner < r.corner_count(); ++corner) {
                if (on_cycle[corner]) continue;
                int fa = rf.face_of[2 * corner], fb = rf.face_of[2 * corner + 1];
                if (fa == f && side[fb] < 0) { side[fb] = s; st.push_back(fb); }
                if (fb == f && side[fa] < 0) { side[fa] = s; st.push_back(fa); }
            }
        }
    }

    int count0 = 0, count1 = 0;
    for (int fid = 0; fid < r.centers; ++fid) {
        if (center_on[fid]) continue;
        int corner = r.rot_center[fid][0];
        int s = side[rf.face_of[2 * corner + 1]];
        (s == 0 ? count0 : count1)++;
    }
    return {count0, count1};
}

/// Exhaustive search for a 2/3-face-balanced noose of length at most
/// ceil(sqrt(4.5 |V(dgm)|)): all simple cycles of the radial multigraph are
/// enumerated shortest-first and tested. Deterministic.
inline std::optional<Noose> find_balanced_noose(const PreparedComponent& c,
                                                const Diagram& dg) {
    RadialGraph r = build_radial(c, dg);
    const int nb = r.branches;
    int max_len = 0;
    while (2 * max_len * max_len < 9 * nb) max_len++;  // ceil(sqrt(4.5 nb))
    const int max_side = 2 * dg.ell / 3;

    std::vector<std::vector<int>> at(r.vertex_count());
    for (int corner = 0; corner < r.corner_count(); ++corner) {
        at[corner / 3].push_back(corner);
        at[r.center_vertex(r.corner_center[corner])].push_back(corner);
    }
    for (auto& v : at) std::sort(v.begin(), v.end());

    std::vector<detail::CycleCandidate> candidates;
    std::vector<int> path_corners, path_verts;
    std::vector<char> used(r.vertex_count(), 0);
    int start = -1;

    // Simple cycles with minimum vertex = start, direction deduplicated by
    // requiring the closing corner id to exceed the opening one.
    std::function<void(int)> dfs = [&](int v) {
        for (int corner : at[v]) {
            if (!path_corners.empty() && corner == path_corners.back()) continue;
            int w = r.endpoint_other(corner, v);
            if (w == start) {
                if (!path_corners.empty() && corner > path_corners.front()) {
                    detail::CycleCandidate cand;
                    cand.verts = path_verts;
                    cand.corners = path_corners;
                    cand.corners.push_back(corner);
                    if (cand.corners.size() % 2 == 0 &&
                        static_cast<int>(cand.corners.size()) / 2 <= max_len)
                        candidates.push_back(std::move(cand));
                }
                continue;
            }
            if (w < start || used[w]) continue;
            if (static_cast<int>(path_corners.size()) + 2 > 2 * max_len) continue;
            used[w] = 1;
            path_corners.push_back(corner);
            path_verts.push_back(w);
            dfs(w);
            path_verts.pop_back();
            path_corners.pop_back();
            used[w] = 0;
        }
    };
    for (start = 0; start < r.vertex_count(); ++start) {
        used[start] = 1;
        path_verts.assign(1, start);
        path_corners.clear();
        dfs(start);
        used[start] = 0;
    }

    std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
        if (a.corners.size() != b.corners.size()) return a.corners.size() < b.corners.size();
        if (a.corners != b.corners) return a.corners < b.corners;
        return a.verts < b.verts;
    });

    for (const auto& cand : candidates) {
        auto [s0, s1] = noose_face_balance(r, cand.corners);
        if (s0 > max_side || s1 > max_side) continue;
        Noose noose;
        const int L = static_cast<int>(cand.corners.size());
        for (int i = 0; i < L; ++i) {
            int v = cand.verts[i];
            if (v >= nb) continue;  // branch visits only
            int r_in = cand.corners[(i - 1 + L) % L];
            int r_out = cand.corners[i];
            Noose::Transit tr;
            tr.branch = v;
            tr.r_in = r_in;
            tr.r_out = r_out;
            tr.center = r.corner_center[r_in];
            noose.transits.push_back(tr);
        }
        if (!noose.transits.empty()) return noose;
    }
    return std::nullopt;
}

/// Project a noose of dgm back to a Voronoi separator (local indices).
inline VoronoiSeparator separator_from_noose(const PreparedComponent& c,
                                             const Diagram& dg, const Noose& noose) {
    if (noose.transits.empty())
        throw Error(ErrorCode::NooseInvalid, "noose has no transits");
    RadialGraph r = build_radial(c, dg);
    VoronoiSeparator sep;
    for (const auto& tr : noose.transits) {
        if (tr.branch < 0 || tr.branch >= dg.branch_count() || tr.r_in / 3 != tr.branch ||
            tr.r_out / 3 != tr.branch || tr.r_in == tr.r_out)
            throw Error(ErrorCode::NooseInvalid, "malformed transit");
        SepQuad q;
        q.p = dg.face_object[tr.center];
        q.u = r.corner_pvertex[tr.r_in];
        q.f = dg.branch_face[tr.branch];
        q.v = r.corner_pvertex[tr.r_out];
        sep.push_back(q);
    }
    return sep;
}

}  // namespace dnc

#endif
