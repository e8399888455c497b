#ifndef DNC_GENERATE_HPP
#define DNC_GENERATE_HPP

#include <random>
#include <set>
#include <string>

#include "dnc/geometry.hpp"
#include "dnc/prepare.hpp"

namespace dnc {

struct GenerateProfile {
    std::string name;  // grid-graph | random-triangulation | geometric-disks | geometric-squares
    int size = 4;      // grid side / triangulation vertices / shape count
    int objects = 5;
    int clients = 6;
    int k = 3;
    bool feasible = true;  // guarantee a normal family of size k exists
};

namespace detail {

/// Deterministic bounded integer, independent of the standard library's
/// distribution implementations.
inline long long bounded(std::mt19937_64& rng, long long n) {
    return static_cast<long long>(rng() % static_cast<unsigned long long>(n));
}

/// Random connected blob of up to `grow`+1 cells on a w*h grid.
inline std::vector<int> grid_blob(std::mt19937_64& rng, int w, int h, int start, int grow) {
    std::vector<int> loc{start};
    for (int g = 0; g < grow; ++g) {
        int base = loc[bounded(rng, static_cast<long long>(loc.size()))];
        int x = base % w, y = base / w;
        int dir = static_cast<int>(bounded(rng, 4));
        int nx = x + (dir == 0) - (dir == 1), ny = y + (dir == 2) - (dir == 3);
        if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
        int v = ny * w + nx;
        if (std::find(loc.begin(), loc.end(), v) == loc.end()) loc.push_back(v);
    }
    std::sort(loc.begin(), loc.end());
    return loc;
}

inline Instance grid_skeleton(std::mt19937_64& rng, int w, int h, const Int& scale) {
    Instance inst;
    inst.vertex_count = w * h;
    inst.scale = scale;
    auto id = [&](int x, int y) { return y * w + x; };
    inst.rotations.assign(inst.vertex_count, {});
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            auto& rot = inst.rotations[id(x, y)];
            if (x + 1 < w) rot.push_back(id(x + 1, y));
            if (y + 1 < h) rot.push_back(id(x, y + 1));
            if (x > 0) rot.push_back(id(x - 1, y));
            if (y > 0) rot.push_back(id(x, y - 1));
        }
    for (int y = 0; y < h; ++y)
        for (int x = 0; x + 1 < w; ++x)
            inst.edges.push_back({id(x, y), id(x + 1, y), (1 + bounded(rng, 9)) * scale});
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x < w; ++x)
            inst.edges.push_back({id(x, y), id(x, y + 1), (1 + bounded(rng, 9)) * scale});
    return inst;
}

/// Random maximal planar graph: grow from a triangle by inserting a vertex
/// into a random face and connecting it to the three corners.
inline Instance triangulation_skeleton(std::mt19937_64& rng, int n, const Int& scale) {
    HalfEdgeGraph topo = HalfEdgeGraph::from_rotations({{1, 2}, {2, 0}, {0, 1}});
    while (topo.vertex_count() < n) {
        int f = static_cast<int>(bounded(rng, topo.face_count()));
        std::vector<int> walk = topo.face_walk(f);
        int x = topo.add_pendant(walk[0]);
        int hx = 2 * (topo.edge_count() - 1) + 1;
        int e1 = topo.add_chord(hx, walk[1]);
        topo.add_chord(2 * e1, walk[2]);
        (void)x;
    }
    Instance inst;
    inst.vertex_count = topo.vertex_count();
    inst.scale = scale;
    for (int v = 0; v < topo.vertex_count(); ++v) {
        std::vector<int> rot;
        for (int h : topo.out_half_edges(v)) rot.push_back(topo.head(h));
        inst.rotations.push_back(rot);
    }
    for (int e = 0; e < topo.edge_count(); ++e)
        inst.edges.push_back({topo.edge_u(e), topo.edge_v(e), (1 + bounded(rng, 9)) * scale});
    return inst;
}

inline void add_objects_clients(std::mt19937_64& rng, Instance& inst, int w, int h,
                                const GenerateProfile& profile) {
    const Int& s = inst.scale;
    for (int i = 0; i < profile.objects; ++i) {
        ObjectSpec o;
        int start = static_cast<int>(bounded(rng, inst.vertex_count));
        if (w > 0)
            o.loc = grid_blob(rng, w, h, start, static_cast<int>(bounded(rng, 3)));
        else
            o.loc = {start};
        o.cost = (bounded(rng, 9) - 4) * s;
        o.radius = bounded(rng, 5) * s;
        inst.objects.push_back(o);
    }
    for (int i = 0; i < profile.clients; ++i) {
        ClientSpec c;
        c.placement = static_cast<int>(bounded(rng, inst.vertex_count));
        c.sensitivity = bounded(rng, 6) * s;
        c.prize = (bounded(rng, 12) - 3) * s;
        inst.clients.push_back(c);
    }
    inst.k = profile.k;
}

inline bool has_normal_family_of_size(const PreparedInstance& prep, int k) {
    const int d = prep.object_count();
    if (k > d) return false;
    std::vector<int> idx;
    std::function<bool(int)> rec = [&](int from) -> bool {
        if (static_cast<int>(idx.size()) == k) return true;
        for (int p = from; p < d; ++p) {
            bool ok = true;
            for (int q : idx) ok = ok && prep.pair_normal(p, q);
            if (!ok) continue;
            idx.push_back(p);
            if (rec(p + 1)) return true;
            idx.pop_back();
        }
        return false;
    };
    return rec(0);
}

inline PlaneScene disk_scene(std::mt19937_64& rng, const GenerateProfile& profile,
                             Norm norm) {
    // Integer coordinates in a box, no tangencies, no coincident points.
    while (true) {
        PlaneScene scene;
        scene.norm = norm;
        scene.precision_bits = 64;
        scene.k = profile.k;
        int box = 24;
        std::set<std::pair<long long, long long>> used;
        for (int i = 0; i < profile.size; ++i) {
            Ball b;
            long long x = bounded(rng, box), y = bounded(rng, box);
            if (!used.insert({x, y}).second) continue;
            b.center = {Rat(x), Rat(y)};
            b.radius = Rat(1 + bounded(rng, 5));
            scene.balls.push_back(b);
        }
        for (int i = 0; i < profile.clients; ++i) {
            long long x = bounded(rng, box), y = bounded(rng, box);
            if (!used.insert({x, y}).second) continue;
            scene.points.push_back({Rat(x), Rat(y)});
        }
        // Robustness: no exact tangency or boundary point in the scene norm.
        bool robust = true;
        for (std::size_t i = 0; i < scene.balls.size() && robust; ++i)
            for (std::size_t j = i + 1; j < scene.balls.size() && robust; ++j) {
                const Ball &a = scene.balls[i], &b = scene.balls[j];
                if (norm == Norm::L2) {
                    Rat dd = dist2(a.center, b.center);
                    Rat sum = a.radius + b.radius, diff = a.radius - b.radius;
                    if (dd == sum * sum || dd == diff * diff) robust = false;
                } else {
                    Rat dd = linf_dist(a.center, b.center);
                    if (dd == a.radius + b.radius ||
                        dd == boost::multiprecision::abs(a.radius - b.radius))
                        robust = false;
                }
            }
        for (const auto& balls : scene.balls)
            for (const auto& p : scene.points) {
                if (norm == Norm::L2) {
                    if (dist2(balls.center, p) == balls.radius * balls.radius) robust = false;
                } else if (linf_dist(balls.center, p) == balls.radius) {
                    robust = false;
                }
            }
        if (robust && !scene.balls.empty()) return scene;
    }
}

}  // namespace detail

/// Deterministic instance generator. Profiles: grid-graph,
/// random-triangulation (instance files), geometric-disks, geometric-squares
/// (scene files consumed through `reduce`).
struct Generated {
    bool is_scene = false;
    Instance instance;
    PlaneScene scene;
};

inline Generated generate_instance(unsigned long long seed, const GenerateProfile& profile) {
    std::mt19937_64 rng(seed);
    Generated out;
    if (profile.name == "grid-graph" || profile.name == "random-triangulation") {
        Int scale = 1000000;
        for (int attempt = 0; attempt < 1000; ++attempt) {
            Instance inst;
            int w = 0, h = 0;
            if (profile.name == "grid-graph") {
                w = std::max(2, profile.size);
                h = std::max(2, (profile.size + 1) / 2 + 1);
                inst = detail::grid_skeleton(rng, w, h, scale);
            } else {
                inst = detail::triangulation_skeleton(rng, std::max(4, profile.size), scale);
            }
            detail::add_objects_clients(rng, inst, w, h, profile);
            if (!profile.feasible) {
                out.instance = inst;
                return out;
            }
            PreparedInstance prep = prepare(inst);
            if (detail::has_normal_family_of_size(prep, inst.k)) {
                out.instance = inst;
                return out;
            }
        }
        throw Error(ErrorCode::BadProfile, "could not generate a feasible instance");
    }
    if (profile.name == "geometric-disks") {
        out.is_scene = true;
        out.scene = detail::disk_scene(rng, profile, Norm::L2);
        return out;
    }
    if (profile.name == "geometric-squares") {
        out.is_scene = true;
        out.scene = detail::disk_scene(rng, profile, Norm::Linf);
        return out;
    }
    throw Error(ErrorCode::BadProfile, "unknown profile '" + profile.name + "'");
}

}  // namespace dnc

#endif
