#ifndef DNC_FACES_HPP
#define DNC_FACES_HPP

#include <algorithm>
#include <array>
#include <vector>

#include "dnc/paths.hpp"
#include "dnc/voronoi.hpp"

namespace dnc {

namespace detail {

/// Type-1: the three corners of f lie in three distinct regions.
inline bool type1_check(const PreparedComponent& c, const VoronoiPartition& part, int f,
                        const std::array<int, 3>& triple) {
    auto corners = c.g.triangle_corners(f);
    std::array<int, 3> owners{part.owner[corners[0]], part.owner[corners[1]],
                              part.owner[corners[2]]};
    std::sort(owners.begin(), owners.end());
    std::array<int, 3> want = triple;
    std::sort(want.begin(), want.end());
    return owners == want;
}

/// Type-2 with certifying order (p1, p2, p3): one corner in region(p1), two
/// in region(p2), and the extree(p2) walk through them separates loc(p1)
/// from loc(p3).
inline bool type2_check(const PreparedComponent& c, const VoronoiPartition& part, int f,
                        int p1, int p2, int p3) {
    auto corners = c.g.triangle_corners(f);
    int v1 = -1, v2 = -1, v3 = -1;
    for (int v : corners) {
        if (part.owner[v] == p1) {
            if (v1 >= 0) return false;
            v1 = v;
        } else if (part.owner[v] == p2) {
            if (v2 < 0) v2 = v;
            else if (v3 < 0) v3 = v;
            else return false;
        } else {
            return false;
        }
    }
    if (v1 < 0 || v2 < 0 || v3 < 0) return false;
    int closing = c.g.topo.edge_between(v2, v3);
    if (closing < 0) return false;
    // The closing edge in extree(p2) would degenerate the walk.
    if (part.extree_parent[v2] >= 0 &&
        HalfEdgeGraph::edge_of(part.extree_parent[v2]) == closing)
        return false;
    if (part.extree_parent[v3] >= 0 &&
        HalfEdgeGraph::edge_of(part.extree_parent[v3]) == closing)
        return false;
    ClosedWalkSides sides = classify_sides(c.g, part.extree_path_edges(c, v2),
                                           part.extree_path_edges(c, v3), closing);
    if (sides.degenerate) return false;
    for (int side1 : {0, 1}) {
        if (sides.all_vertices_on_side(c.loc[p1], side1) &&
            sides.all_vertices_on_side(c.loc[p3], 1 - side1))
            return true;
    }
    return false;
}

/// Type-3 with pivot p0 and companions {p1,p2,p3}: all corners in
/// region(p0), no boundary edge of f in extree(p0), and the three walk
/// disks each contain exactly one companion location.
inline bool type3_check(const PreparedComponent& c, const VoronoiPartition& part, int f,
                        int p0, const std::array<int, 3>& companions) {
    const HalfEdgeGraph& t = c.g.topo;
    const auto& walk = t.face_walk(f);
    std::array<int, 3> corner{}, edge{};
    for (int i = 0; i < 3; ++i) {
        corner[i] = t.origin(walk[i]);
        edge[i] = HalfEdgeGraph::edge_of(walk[i]);
        if (part.owner[corner[i]] != p0) return false;
    }
    for (int i = 0; i < 3; ++i) {
        for (int v : {t.edge_u(edge[i]), t.edge_v(edge[i])}) {
            if (part.extree_parent[v] >= 0 &&
                HalfEdgeGraph::edge_of(part.extree_parent[v]) == edge[i])
                return false;  // boundary edge inside extree(p0)
        }
    }
    // Disk behind boundary edge i = side of W_i away from f.
    std::array<int, 3> disk_of_companion{-1, -1, -1};
    for (int i = 0; i < 3; ++i) {
        int a = t.edge_u(edge[i]), b = t.edge_v(edge[i]);
        ClosedWalkSides sides = classify_sides(c.g, part.extree_path_edges(c, a),
                                               part.extree_path_edges(c, b), edge[i]);
        if (sides.degenerate) return false;
        int f_side = sides.face_side[f];
        for (int j = 0; j < 3; ++j)
            if (sides.all_vertices_on_side(c.loc[companions[j]], 1 - f_side)) {
                if (disk_of_companion[j] >= 0) return false;  // disks are disjoint
                disk_of_companion[j] = i;
            }
    }
    return disk_of_companion[0] >= 0 && disk_of_companion[1] >= 0 &&
           disk_of_companion[2] >= 0 && disk_of_companion[0] != disk_of_companion[1] &&
           disk_of_companion[1] != disk_of_companion[2] &&
           disk_of_companion[0] != disk_of_companion[2];
}

}  // namespace detail

/// Public per-tuple singular-face test. `tuple` is ordered: types 1 and 2
/// take 3 objects, type 3 takes (p0, p1, p2, p3).
inline bool singular_face(const PreparedComponent& c, int f, const std::vector<int>& tuple,
                          int type) {
    if ((type == 1 || type == 2) && tuple.size() != 3)
        throw Error(ErrorCode::BadTupleSize, "types 1 and 2 take a triple");
    if (type == 3 && tuple.size() != 4)
        throw Error(ErrorCode::BadTupleSize, "type 3 takes a quadruple");
    std::vector<int> fam = tuple;
    std::sort(fam.begin(), fam.end());
    if (!is_normal_local(c, fam))
        throw Error(ErrorCode::NotNormal, "singular-face tuple must be normal");
    VoronoiPartition part = voronoi_partition(c, fam);
    if (type == 1) return detail::type1_check(c, part, f, {tuple[0], tuple[1], tuple[2]});
    if (type == 2) return detail::type2_check(c, part, f, tuple[0], tuple[1], tuple[2]);
    if (type == 3)
        return detail::type3_check(c, part, f, tuple[0], {tuple[1], tuple[2], tuple[3]});
    throw Error(ErrorCode::BadTupleSize, "type must be 1, 2 or 3");
}

struct FaceProvenance {
    int type = 0;
    std::vector<int> tuple;
};

struct ImportantFaces {
    std::vector<int> faces;  // ascending, deduplicated
    std::vector<std::vector<FaceProvenance>> provenance;  // parallel to faces

    bool contains(int f) const {
        return std::binary_search(faces.begin(), faces.end(), f);
    }
};

/// Union over all normal triples (types 1, 2) and quadruples (type 3) of the
/// faces they certify. Quadruple enumeration is skipped past `quad_cap`
/// objects (cost grows with the fourth power).
inline ImportantFaces important_faces(const PreparedComponent& c,
                                      const std::vector<int>& objs, int quad_cap = 64) {
    std::vector<std::pair<int, FaceProvenance>> hits;
    const int m = static_cast<int>(objs.size());

    // Triples: one Voronoi partition serves type 1 and every ordered type-2
    // certificate (the corner pattern pins the roles).
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            if (!c.normal_pair[objs[i]][objs[j]]) continue;
            for (int l = j + 1; l < m; ++l) {
                std::vector<int> fam{objs[i], objs[j], objs[l]};
                if (!is_normal_local(c, fam)) continue;
                VoronoiPartition part = voronoi_partition(c, fam);
                for (int f = 0; f < c.g.face_count(); ++f) {
                    auto corners = c.g.triangle_corners(f);
                    std::array<int, 3> owners{part.owner[corners[0]],
                                              part.owner[corners[1]],
                                              part.owner[corners[2]]};
                    std::array<int, 3> srt = owners;
                    std::sort(srt.begin(), srt.end());
                    bool all_distinct = srt[0] != srt[1] && srt[1] != srt[2];
                    if (all_distinct) {
                        hits.push_back({f, {1, fam}});
                        continue;
                    }
                    // (1,2,0) pattern: p2 owns two corners, p1 one, p3 none.
                    int twice = srt[0] == srt[1] ? srt[0] : (srt[1] == srt[2] ? srt[1] : -1);
                    if (twice < 0 || (srt[0] == srt[1] && srt[1] == srt[2])) continue;
                    int once = -1;
                    for (int o : owners)
                        if (o != twice) once = o;
                    int absent = -1;
                    for (int o : fam)
                        if (o != twice && o != once) absent = o;
                    if (once < 0 || absent < 0) continue;
                    if (detail::type2_check(c, part, f, once, twice, absent))
                        hits.push_back({f, {2, {once, twice, absent}}});
                }
            }
        }

    if (m <= quad_cap) {
        for (int i = 0; i < m; ++i)
            for (int j = i + 1; j < m; ++j)
                for (int l = j + 1; l < m; ++l)
                    for (int o = l + 1; o < m; ++o) {
                        std::vector<int> fam{objs[i], objs[j], objs[l], objs[o]};
                        if (!is_normal_local(c, fam)) continue;
                        VoronoiPartition part = voronoi_partition(c, fam);
                        for (int f = 0; f < c.g.face_count(); ++f) {
                            auto corners = c.g.triangle_corners(f);
                            int p0 = part.owner[corners[0]];
                            if (part.owner[corners[1]] != p0 ||
                                part.owner[corners[2]] != p0)
                                continue;
                            std::array<int, 3> comp{};
                            int idx = 0;
                            for (int x : fam)
                                if (x != p0) comp[idx++] = x;
                            if (idx != 3) continue;  // p0 outside the family
                            if (detail::type3_check(c, part, f, p0, comp))
                                hits.push_back({f, {3, {p0, comp[0], comp[1], comp[2]}}});
                        }
                    }
    }

    std::stable_sort(hits.begin(), hits.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    ImportantFaces out;
    for (auto& [f, prov] : hits) {
        if (out.faces.empty() || out.faces.back() != f) {
            out.faces.push_back(f);
            out.provenance.emplace_back();
        }
        out.provenance.back().push_back(std::move(prov));
    }
    return out;
}

}  // namespace dnc

#endif
