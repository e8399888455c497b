#ifndef DNC_GEOMETRY_HPP
#define DNC_GEOMETRY_HPP

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "dnc/instance.hpp"
#include "dnc/solver.hpp"

namespace dnc {

enum class Norm { L2, Linf };

using Point = std::pair<Rat, Rat>;

struct Ball {
    Point center;
    Rat radius;  // half side for Linf squares
};

using Polygon = std::vector<Point>;

/// Plane input: balls (disks or squares by norm), simple polygons, points.
struct PlaneScene {
    Norm norm = Norm::L2;
    int precision_bits = 64;
    std::vector<Ball> balls;
    std::vector<Polygon> polygons;
    std::vector<Point> points;
    int k = 0;
};

// ── Exact predicates ─────────────────────────────────────────────

inline Rat cross(const Point& o, const Point& a, const Point& b) {
    return (a.first - o.first) * (b.second - o.second) -
           (a.second - o.second) * (b.first - o.first);
}

inline bool on_segment(const Point& a, const Point& b, const Point& x) {
    if (cross(a, b, x) != 0) return false;
    return std::min(a.first, b.first) <= x.first && x.first <= std::max(a.first, b.first) &&
           std::min(a.second, b.second) <= x.second &&
           x.second <= std::max(a.second, b.second);
}

inline Rat dist2(const Point& a, const Point& b) {
    Rat dx = a.first - b.first, dy = a.second - b.second;
    return dx * dx + dy * dy;
}

inline Rat linf_dist(const Point& a, const Point& b) {
    Rat dx = boost::multiprecision::abs(a.first - b.first);
    Rat dy = boost::multiprecision::abs(a.second - b.second);
    return std::max(dx, dy);
}

/// Closed-ball membership in the scene norm.
inline bool ball_contains(const Ball& ball, const Point& x, Norm norm) {
    if (norm == Norm::L2) return dist2(ball.center, x) <= ball.radius * ball.radius;
    return linf_dist(ball.center, x) <= ball.radius;
}

/// Closed polygons: boundary points count as inside.
inline bool point_in_polygon(const Polygon& poly, const Point& x) {
    const std::size_t n = poly.size();
    for (std::size_t i = 0; i < n; ++i)
        if (on_segment(poly[i], poly[(i + 1) % n], x)) return true;
    bool inside = false;
    for (std::size_t i = 0; i < n; ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % n];
        if ((a.second > x.second) != (b.second > x.second)) {
            Rat t = (x.second - a.second) / (b.second - a.second);
            Rat cx = a.first + t * (b.first - a.first);
            if (cx > x.first) inside = !inside;
        }
    }
    return inside;
}

struct Segment {
    Point a, b;
};

/// Proper or touching intersection point of two non-collinear segments.
inline bool segment_intersection_point(const Segment& s, const Segment& t, Point& out) {
    Point d1{s.b.first - s.a.first, s.b.second - s.a.second};
    Point d2{t.b.first - t.a.first, t.b.second - t.a.second};
    Rat denom = d1.first * d2.second - d1.second * d2.first;
    if (denom == 0) return false;
    Rat qx = t.a.first - s.a.first, qy = t.a.second - s.a.second;
    Rat tt = (qx * d2.second - qy * d2.first) / denom;
    Rat uu = (qx * d1.second - qy * d1.first) / denom;
    if (tt < 0 || tt > 1 || uu < 0 || uu > 1) return false;
    out = {s.a.first + tt * d1.first, s.a.second + tt * d1.second};
    return true;
}

inline bool collinear_segments(const Segment& s, const Segment& t) {
    return cross(s.a, s.b, t.a) == 0 && cross(s.a, s.b, t.b) == 0;
}

/// Do two closed segments share any point?
inline bool segments_touch(const Segment& s, const Segment& t) {
    Point dummy;
    if (segment_intersection_point(s, t, dummy)) return true;
    if (!collinear_segments(s, t)) return false;
    return on_segment(s.a, s.b, t.a) || on_segment(s.a, s.b, t.b) ||
           on_segment(t.a, t.b, s.a) || on_segment(t.a, t.b, s.b);
}

// ── Snapped lengths ──────────────────────────────────────────────

/// Scene-norm length of segment ab scaled by 2^P, rounded down. Exact for
/// rational Linf lengths with dyadic data.
inline Int snapped_length(const Point& a, const Point& b, Norm norm, int precision_bits) {
    if (norm == Norm::Linf) {
        Rat len = linf_dist(a, b);
        Rat scaled = len * Rat(pow2(precision_bits));
        Int w = Int(boost::multiprecision::numerator(scaled) /
                    boost::multiprecision::denominator(scaled));
        if (w <= 0) throw Error(ErrorCode::DegenerateInput, "segment below precision");
        return w;
    }
    Rat sq = dist2(a, b) * Rat(pow2(2 * precision_bits));
    Int inner = Int(boost::multiprecision::numerator(sq) /
                    boost::multiprecision::denominator(sq));
    Int w = isqrt(inner);
    if (w <= 0) throw Error(ErrorCode::DegenerateInput, "segment below precision");
    return w;
}

// ── Planarization ────────────────────────────────────────────────

struct Planarized {
    Instance graph;  // objects/clients empty; scale = 2^precision_bits
    std::vector<Point> coords;
    std::map<Point, int> vertex_of;
};

/// Exact arrangement of the given segments (plus isolated points): rational
/// crossing vertices, collinear overlaps subdivided, weights = snapped
/// scene-norm lengths, rotations from coordinates.
inline Planarized planarize_segments(const std::vector<Segment>& segments_in,
                                     const std::vector<Point>& extra_points, Norm norm,
                                     int precision_bits) {
    // Dedup segments by canonical endpoint order.
    std::set<std::pair<Point, Point>> seg_set;
    for (const auto& s : segments_in) {
        if (s.a == s.b) throw Error(ErrorCode::DegenerateInput, "zero-length segment");
        seg_set.insert(s.a < s.b ? std::make_pair(s.a, s.b) : std::make_pair(s.b, s.a));
    }
    std::vector<Segment> segments;
    for (const auto& [a, b] : seg_set) segments.push_back({a, b});

    Planarized out;
    auto add_vertex = [&](const Point& p) {
        auto it = out.vertex_of.find(p);
        if (it != out.vertex_of.end()) return it->second;
        int id = static_cast<int>(out.coords.size());
        out.coords.push_back(p);
        out.vertex_of[p] = id;
        return id;
    };
    for (const auto& s : segments) {
        add_vertex(s.a);
        add_vertex(s.b);
    }
    for (const auto& p : extra_points) add_vertex(p);
    for (std::size_t i = 0; i < segments.size(); ++i)
        for (std::size_t j = i + 1; j < segments.size(); ++j) {
            Point x;
            if (segment_intersection_point(segments[i], segments[j], x)) add_vertex(x);
            // collinear overlaps: the other segment's endpoints already are
            // vertices and subdivide this one below
        }

    // Subdivide each segment at every vertex lying on it.
    const int n = static_cast<int>(out.coords.size());
    std::set<std::pair<int, int>> edge_set;
    for (const auto& s : segments) {
        std::vector<int> on;
        for (int v = 0; v < n; ++v)
            if (on_segment(s.a, s.b, out.coords[v])) on.push_back(v);
        Point dir{s.b.first - s.a.first, s.b.second - s.a.second};
        std::sort(on.begin(), on.end(), [&](int u, int v) {
            Rat tu = (out.coords[u].first - s.a.first) * dir.first +
                     (out.coords[u].second - s.a.second) * dir.second;
            Rat tv = (out.coords[v].first - s.a.first) * dir.first +
                     (out.coords[v].second - s.a.second) * dir.second;
            return tu < tv;
        });
        for (std::size_t i = 0; i + 1 < on.size(); ++i) {
            auto e = std::minmax(on[i], on[i + 1]);
            edge_set.insert(std::pair<int, int>(e));
        }
    }

    Instance& g = out.graph;
    g.vertex_count = n;
    g.scale = pow2(precision_bits);
    g.rotations.assign(n, {});
    std::vector<std::vector<int>> nbrs(n);
    for (const auto& [u, v] : edge_set) {
        nbrs[u].push_back(v);
        nbrs[v].push_back(u);
        g.edges.push_back(
            {u, v, snapped_length(out.coords[u], out.coords[v], norm, precision_bits)});
    }
    // Counterclockwise angular order around each vertex, exact.
    for (int v = 0; v < n; ++v) {
        auto& list = nbrs[v];
        auto dir_of = [&](int w) {
            return Point{out.coords[w].first - out.coords[v].first,
                         out.coords[w].second - out.coords[v].second};
        };
        std::sort(list.begin(), list.end(), [&](int a, int b) {
            Point da = dir_of(a), db = dir_of(b);
            auto half = [](const Point& d) {
                return d.second < 0 || (d.second == 0 && d.first < 0) ? 1 : 0;
            };
            if (half(da) != half(db)) return half(da) < half(db);
            Rat cr = da.first * db.second - da.second * db.first;
            if (cr != 0) return cr > 0;
            return a < b;  // collinear rays cannot happen after subdivision
        });
        g.rotations[v] = list;
    }
    return out;
}

// ── Reductions ───────────────────────────────────────────────────

/// Disk packing: witness points in pairwise intersections, the complete
/// segment set over the point family, objects = graph balls of the snapped
/// radii. Feasible (value 0) iff k pairwise disjoint disks exist.
inline Instance reduce_disk_packing(const PlaneScene& scene, int k) {
    const auto& disks = scene.balls;
    std::vector<Point> x_points;
    for (const auto& d : disks) {
        if (d.radius <= 0) throw Error(ErrorCode::DegenerateInput, "non-positive radius");
        x_points.push_back(d.center);
    }
    for (std::size_t i = 0; i < disks.size(); ++i)
        for (std::size_t j = i + 1; j < disks.size(); ++j) {
            Rat rr = disks[i].radius + disks[j].radius;
            if (dist2(disks[i].center, disks[j].center) <= rr * rr) {
                // the point splitting the center segment in radii ratio
                Rat t = disks[i].radius / rr;
                Point w{disks[i].center.first +
                            t * (disks[j].center.first - disks[i].center.first),
                        disks[i].center.second +
                            t * (disks[j].center.second - disks[i].center.second)};
                x_points.push_back(w);
            }
        }
    std::set<Point> uniq(x_points.begin(), x_points.end());
    std::vector<Point> pts(uniq.begin(), uniq.end());
    std::vector<Segment> segs;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j)
            segs.push_back({pts[i], pts[j]});

    Planarized plan = planarize_segments(segs, pts, Norm::L2, scene.precision_bits);
    Instance inst = plan.graph;
    inst.k = k;

    // Graph balls around the centers, base weights.
    EmbeddedGraph g = build_graph(inst.vertex_count, inst.rotations, inst.edges);
    for (const auto& d : disks) {
        int center = plan.vertex_of.at(d.center);
        auto sp = shortest_paths_from_set(g.topo, g.weight, {center});
        Int r = snapped_length({0, 0}, {d.radius, 0}, Norm::L2, scene.precision_bits);
        ObjectSpec o;
        for (int v = 0; v < inst.vertex_count; ++v)
            if (sp.reached[v] && sp.dist[v] <= r) o.loc.push_back(v);
        o.cost = 0;
        o.radius = 0;
        inst.objects.push_back(o);
    }
    return inst;
}

/// Polygon packing: the side arrangement, components connected with extra
/// segments, objects = vertices inside each closed polygon.
inline Instance reduce_polygon_packing(const PlaneScene& scene, int k) {
    for (const auto& poly : scene.polygons) {
        if (poly.size() < 3) throw Error(ErrorCode::NonSimplePolygon, "fewer than 3 vertices");
        const std::size_t n = poly.size();
        for (std::size_t i = 0; i < n; ++i) {
            if (poly[i] == poly[(i + 1) % n])
                throw Error(ErrorCode::NonSimplePolygon, "repeated vertex");
            for (std::size_t j = i + 1; j < n; ++j) {
                Segment si{poly[i], poly[(i + 1) % n]};
                Segment sj{poly[j], poly[(j + 1) % n]};
                bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
                if (adjacent) {
                    // adjacent sides may share only their common endpoint
                    if (collinear_segments(si, sj))
                        throw Error(ErrorCode::NonSimplePolygon, "collinear turn");
                } else if (segments_touch(si, sj)) {
                    throw Error(ErrorCode::NonSimplePolygon, "self-intersection");
                }
            }
        }
    }
    std::vector<Segment> segs;
    for (const auto& poly : scene.polygons)
        for (std::size_t i = 0; i < poly.size(); ++i)
            segs.push_back({poly[i], poly[(i + 1) % poly.size()]});

    // Connect the arrangement: extra segments between lowest vertices of
    // distinct components, re-planarized so crossings stay exact.
    Planarized plan;
    for (int rounds = 0;; ++rounds) {
        if (rounds > static_cast<int>(scene.polygons.size()) + 4)
            throw Error(ErrorCode::MalformedInstance, "connectivity fix did not converge");
        plan = planarize_segments(segs, {}, Norm::L2, scene.precision_bits);
        EmbeddedGraph g =
            build_graph(plan.graph.vertex_count, plan.graph.rotations, plan.graph.edges);
        auto comp = g.topo.component_of_vertices();
        int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        if (ncomp == 1) break;
        int a = -1, b = -1;
        for (int v = 0; v < g.vertex_count() && (a < 0 || b < 0); ++v) {
            if (comp[v] == 0 && a < 0) a = v;
            if (comp[v] == 1 && b < 0) b = v;
        }
        segs.push_back({plan.coords[a], plan.coords[b]});
    }

    Instance inst = plan.graph;
    inst.k = k;
    for (const auto& poly : scene.polygons) {
        ObjectSpec o;
        for (int v = 0; v < inst.vertex_count; ++v)
            if (point_in_polygon(poly, plan.coords[v])) o.loc.push_back(v);
        o.cost = 0;
        o.radius = 0;
        inst.objects.push_back(o);
    }
    return inst;
}

/// Point covering by norm balls: center-point segments only, singleton
/// objects carrying the snapped radii, unit-prize clients.
struct CoverReduction {
    Instance inst;  // budget k
    std::vector<int> center_vertex;
    std::vector<int> point_vertex;
};

inline CoverReduction reduce_point_cover(const PlaneScene& scene, int k) {
    std::vector<Segment> segs;
    std::vector<Point> pts;
    for (const auto& b : scene.balls) pts.push_back(b.center);
    for (const auto& p : scene.points) pts.push_back(p);
    for (const auto& b : scene.balls)
        for (const auto& p : scene.points)
            if (b.center != p) segs.push_back({b.center, p});

    CoverReduction out;
    Planarized plan = planarize_segments(segs, pts, scene.norm, scene.precision_bits);
    out.inst = plan.graph;
    out.inst.k = k;
    for (const auto& b : scene.balls) {
        int v = plan.vertex_of.at(b.center);
        out.center_vertex.push_back(v);
        ObjectSpec o;
        o.loc = {v};
        o.cost = 0;
        o.radius = snapped_length({0, 0}, {b.radius, 0}, scene.norm, scene.precision_bits);
        out.inst.objects.push_back(o);
    }
    for (const auto& p : scene.points) {
        int v = plan.vertex_of.at(p);
        out.point_vertex.push_back(v);
        ClientSpec c;
        c.placement = v;
        c.sensitivity = 0;
        c.prize = out.inst.scale;  // prize 1.0
        out.inst.clients.push_back(c);
    }
    return out;
}

/// Best number of covered points using at most k balls: solve the reduced
/// instance for every budget k' = 0..k and keep the maximum.
inline Int cover_best_count(const CoverReduction& red, int k, SolverConfig cfg = {}) {
    Int best = 0;  // k' = 0 covers nothing
    Instance work = red.inst;
    for (int kk = 1; kk <= k; ++kk) {
        work.k = kk;
        PreparedInstance prep = prepare(work);
        SolveResult r = solve(prep, cfg);
        if (r.value.finite() && *r.value.v > best) best = *r.value.v;
    }
    return best / red.inst.scale;
}

// ── Planar-problem wrappers ──────────────────────────────────────

struct WrapResult {
    std::vector<Instance> instances;
    /// Vertex pairs whose unperturbed doubled distance ties the scatter
    /// threshold exactly (boundary flagged per the strict-ball convention).
    std::vector<std::pair<int, int>> tight_pairs;
};

/// d-Scattered Set: objects are open balls of radius d/2 (strict on
/// perturbed weights); feasible iff k vertices pairwise >= d apart exist,
/// provided ball disjointness witnesses distances (see tight_pairs).
inline WrapResult wrap_scatter(const Instance& graph, const Int& scaled_d, int k) {
    Instance base = graph;
    base.objects.clear();
    base.clients.clear();
    base.k = k;
    PreparedInstance prep = prepare(base);
    WrapResult out;
    Instance inst = graph;
    inst.objects.clear();
    inst.clients.clear();
    inst.k = k;
    for (int c = 0; c < static_cast<int>(prep.comps.size()); ++c) {
        const auto& pc = prep.comps[c];
        for (int v = 0; v < pc.original_vertices; ++v) {
            auto sp = shortest_paths_from_set(pc.g.topo, pc.pw, {v});
            ObjectSpec o;
            for (int u = 0; u < pc.original_vertices; ++u) {
                if (2 * sp.dist[u] < scaled_d * pc.band)
                    o.loc.push_back(pc.global_vertex[u]);
                else if (u != v && 2 * (sp.dist[u] / pc.band) == scaled_d)
                    out.tight_pairs.push_back(
                        {std::min(pc.global_vertex[v], pc.global_vertex[u]),
                         std::max(pc.global_vertex[v], pc.global_vertex[u])});
            }
            std::sort(o.loc.begin(), o.loc.end());
            o.cost = 0;
            o.radius = 0;
            inst.objects.push_back(o);
        }
    }
    std::sort(out.tight_pairs.begin(), out.tight_pairs.end());
    out.tight_pairs.erase(std::unique(out.tight_pairs.begin(), out.tight_pairs.end()),
                          out.tight_pairs.end());
    out.instances.push_back(inst);
    return out;
}

/// rho-Dominating Set as a family over budgets 0..k: singleton objects of
/// radius rho everywhere, unit-prize clients everywhere.
inline WrapResult wrap_rho_dominating(const Instance& graph, const Int& scaled_rho, int k) {
    WrapResult out;
    Instance base = graph;
    base.objects.clear();
    base.clients.clear();
    for (int v = 0; v < graph.vertex_count; ++v) {
        base.objects.push_back({{v}, 0, scaled_rho});
        base.clients.push_back({v, 0, graph.scale});
    }
    for (int kk = 0; kk <= k; ++kk) {
        base.k = kk;
        out.instances.push_back(base);
    }
    return out;
}

/// Independent covering: objects as given (radius and cost zeroed), clients
/// with unit prizes; family over budgets 0..k realizes "at most k".
inline WrapResult wrap_independent_cover(const Instance& inst_in, int k) {
    WrapResult out;
    Instance base = inst_in;
    for (auto& o : base.objects) {
        o.radius = 0;
        o.cost = 0;
    }
    for (auto& c : base.clients) {
        c.sensitivity = 0;
        c.prize = base.scale;
    }
    for (int kk = 0; kk <= k; ++kk) {
        base.k = kk;
        out.instances.push_back(base);
    }
    return out;
}

}  // namespace dnc

#endif
