#ifndef DNC_TESTS_HELPERS_HPP
#define DNC_TESTS_HELPERS_HPP

#include <functional>
#include <memory>
#include <random>
#include <vector>

#include "dnc/instance.hpp"
#include "dnc/prepare.hpp"

namespace dnc_tests {

using namespace dnc;

/// The worked square-plus-diagonal instance used across suites:
/// vertices a=0,b=1,c=2,d=3; edges ab=bc=cd=da=2, ac=3;
/// p1 = ({a}, cost 0, rad 0), p2 = ({c}, cost 1, rad 1);
/// q1 = (b, sen 0, prize 5), q2 = (d, sen 1, prize 3); k = 1.
inline Instance w1_instance() {
    Instance inst;
    inst.vertex_count = 4;
    inst.rotations = {{1, 2, 3}, {2, 0}, {3, 0, 1}, {2, 0}};
    inst.edges = {{0, 1, 2}, {1, 2, 2}, {2, 3, 2}, {3, 0, 2}, {0, 2, 3}};
    inst.objects = {{{0}, 0, 0}, {{2}, 1, 1}};
    inst.clients = {{1, 0, 5}, {3, 1, 3}};
    inst.k = 1;
    inst.scale = 1;
    return inst;
}

/// w*h grid with the given per-edge weight function (horizontal edges first
/// row-major, then vertical).
inline Instance grid_instance(int w, int h,
                              const std::function<dnc::Int(int, int)>& weight_hv) {
    Instance inst;
    inst.vertex_count = w * h;
    inst.scale = 1;
    auto id = [&](int x, int y) { return y * w + x; };
    inst.rotations.assign(inst.vertex_count, {});
    for (int y = 0; y < h; ++y)
        for (int x = 0; x < w; ++x) {
            auto& rot = inst.rotations[id(x, y)];
            // counterclockwise: +x, +y, -x, -y
            if (x + 1 < w) rot.push_back(id(x + 1, y));
            if (y + 1 < h) rot.push_back(id(x, y + 1));
            if (x > 0) rot.push_back(id(x - 1, y));
            if (y > 0) rot.push_back(id(x, y - 1));
        }
    int eidx = 0;
    for (int y = 0; y < h; ++y)
        for (int x = 0; x + 1 < w; ++x)
            inst.edges.push_back({id(x, y), id(x + 1, y), weight_hv(eidx++, 0)});
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x < w; ++x)
            inst.edges.push_back({id(x, y), id(x, y + 1), weight_hv(eidx++, 1)});
    return inst;
}

/// Deterministic pseudo-random weights in [1, top].
inline std::function<dnc::Int(int, int)> random_weights(unsigned seed, int top = 9) {
    auto rng = std::make_shared<std::mt19937_64>(seed);
    return [rng, top](int, int) {
        return dnc::Int(1 + static_cast<long long>((*rng)() % top));
    };
}

/// Random small instance on a grid: objects are short random balls, clients
/// random placements. Deterministic per seed.
inline Instance random_grid_instance(unsigned seed, int w, int h, int objects,
                                     int clients, int k) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % n); };
    Instance inst = grid_instance(
        w, h, [&](int, int) { return dnc::Int(1 + pick(9)); });
    inst.k = k;
    for (int i = 0; i < objects; ++i) {
        ObjectSpec o;
        int start = pick(w * h);
        o.loc = {start};
        // grow a small connected blob
        int grow = pick(3);
        for (int g = 0; g < grow; ++g) {
            int base = o.loc[pick(static_cast<int>(o.loc.size()))];
            int x = base % w, y = base / w;
            int dir = pick(4);
            int nx = x + (dir == 0) - (dir == 1), ny = y + (dir == 2) - (dir == 3);
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            int v = ny * w + nx;
            bool dup = false;
            for (int u : o.loc) dup = dup || u == v;
            if (!dup) o.loc.push_back(v);
        }
        o.cost = dnc::Int(pick(7)) - 3;
        o.radius = dnc::Int(pick(4));
        inst.objects.push_back(o);
    }
    for (int i = 0; i < clients; ++i) {
        ClientSpec c;
        c.placement = pick(w * h);
        c.sensitivity = dnc::Int(pick(4));
        c.prize = dnc::Int(pick(9)) - 2;
        inst.clients.push_back(c);
    }
    return inst;
}

}  // namespace dnc_tests

#endif
