// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "dnc/dnc.hpp"
#include "geometry_oracle.hpp"

using namespace dnc;

namespace {

int failures = 0;

void report(int criterion, bool pass, const std::string& detail) {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << detail
              << std::endl;
    if (!pass) failures++;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// ── Shared corpora ───────────────────────────────────────────────

/// Criterion-1 corpus: >= 200 seeded instances, n <= 15, d <= 6, c <= 8,
/// k in 1..5, mixed-sign costs and prizes.
std::vector<Instance> corpus_small() {
    std::vector<Instance> out;
    int made = 0;
    for (unsigned long long seed = 1; made < 200; ++seed) {
        GenerateProfile profile;
        profile.name = seed % 3 == 0 ? "random-triangulation" : "grid-graph";
        profile.size = profile.name == "grid-graph" ? 4 : 9 + static_cast<int>(seed % 6);
        profile.k = 1 + static_cast<int>(seed % 5);  // 1..5
        profile.objects = std::max(profile.k, 4 + static_cast<int>(seed % 3));  // <= 6
        profile.clients = 5 + static_cast<int>(seed % 4);                       // 5..8
        profile.feasible = seed % 5 != 0;
        Generated g = generate_instance(seed, profile);
        if (g.instance.vertex_count > 15) continue;
        out.push_back(g.instance);
        made++;
    }
    return out;
}

std::vector<std::vector<int>> normal_families(const PreparedComponent& c, int size,
                                              int cap) {
    std::vector<std::vector<int>> out;
    std::vector<int> idx(size);
    std::function<void(int, int)> rec = [&](int from, int depth) {
        if (static_cast<int>(out.size()) >= cap) return;
        if (depth == size) {
            std::vector<int> fam(idx.begin(), idx.end());
            if (is_normal_local(c, fam)) out.push_back(fam);
            return;
        }
        for (int p = from; p < c.object_count(); ++p) {
            idx[depth] = p;
            rec(p + 1, depth + 1);
        }
    };
    rec(0, 0);
    return out;
}

Instance scattered(unsigned seed, int w, int h, int d) {
    std::mt19937_64 rng(seed);
    Instance inst;
    inst.vertex_count = w * h;
    inst.scale = 1;
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
            inst.edges.push_back({id(x, y), id(x + 1, y), Int(1 + (int)(rng() % 5))});
    for (int y = 0; y + 1 < h; ++y)
        for (int x = 0; x < w; ++x)
            inst.edges.push_back({id(x, y), id(x, y + 1), Int(1 + (int)(rng() % 5))});
    std::set<int> cells;
    while (static_cast<int>(cells.size()) < d)
        cells.insert(static_cast<int>(rng() % (w * h)));
    for (int v : cells) inst.objects.push_back({{v}, 0, Int((int)(rng() % 3))});
    inst.k = 1;
    return inst;
}

// ── Criteria ─────────────────────────────────────────────────────

std::vector<std::string> criterion1_records;  // reused by criterion 9

void criterion1(const std::vector<Instance>& corpus) {
    auto start = std::chrono::steady_clock::now();
    int checked = 0;
    bool ok = true;
    std::string why;
    for (const Instance& inst : corpus) {
        PreparedInstance prep = prepare(inst);
        SolveResult fast = solve(prep);
        SolveResult oracle = solve_bruteforce(prep);
        criterion1_records.push_back(result_record(fast, inst.scale).dump());
        if (!(fast.value == oracle.value)) {
            ok = false;
            why = "value mismatch on instance " + std::to_string(checked);
            break;
        }
        if (fast.value.finite() &&
            !(ExtValue(revenue(prep, fast.witness)) == fast.value)) {
            ok = false;
            why = "witness revenue mismatch on instance " + std::to_string(checked);
            break;
        }
        checked++;
    }
    std::ostringstream os;
    os << "oracle equivalence on " << checked << " instances";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(1, ok && checked >= 200, os.str());
}

void criterion2() {
    auto start = std::chrono::steady_clock::now();
    int families = 0;
    bool ok = true;
    std::string why;
    for (unsigned seed : {7u, 29u, 57u}) {
        Instance inst = scattered(seed, 5, 6, 11);
        PreparedInstance prep = prepare(inst);
        const auto& c = prep.comps[0];
        for (int ell = 3; ell <= 8 && ok; ++ell) {
            for (const auto& fam : normal_families(c, ell, 8)) {
                try {
                    VoronoiPartition part = voronoi_partition(c, fam);
                    Prediagram pre = build_prediagram(c, part);
                    Diagram dg = build_diagram(c, part, pre);
                    // builders enforce connectivity/3-regularity/simplicity;
                    // re-check the counting identities and mappings here
                    if (dg.branch_count() != 2 * ell - 4 || dg.edge_count() != 3 * ell - 6 ||
                        dg.face_count() != ell)
                        throw Error(ErrorCode::MalformedInstance, "count mismatch");
                    std::set<int> objs(dg.face_object.begin(), dg.face_object.end());
                    if (objs != std::set<int>(fam.begin(), fam.end()))
                        throw Error(ErrorCode::MalformedInstance, "face-object map");
                    for (std::size_t i = 0; i < part.family.size(); ++i) {
                        int z = pre.zone[c.cen[part.family[i]]];
                        for (int v : part.region[i])
                            if (pre.zone[v] != z)
                                throw Error(ErrorCode::MalformedInstance, "zone-region");
                    }
                    for (int e = 0; e < dg.edge_count(); ++e)
                        if (dg.edges[e].loop() && !loop_bounds_face(dg, e))
                            throw Error(ErrorCode::MalformedInstance, "loop face");
                    families++;
                } catch (const Error& e) {
                    ok = false;
                    why = e.what();
                    break;
                }
            }
        }
    }
    std::ostringstream os;
    os << "diagram invariants on " << families << " families";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(2, ok && families >= 100, os.str());
}

void criterion3() {
    auto start = std::chrono::steady_clock::now();
    int instances = 0, families = 0;
    bool ok = true;
    std::string why;
    for (unsigned seed = 1; seed <= 10 && ok; ++seed) {
        Instance inst = scattered(seed, 4, 3, 5);
        PreparedInstance prep = prepare(inst);
        const auto& c = prep.comps[0];
        std::vector<int> all;
        for (int p = 0; p < c.object_count(); ++p) all.push_back(p);
        ImportantFaces imp = important_faces(c, all);
        long long d = c.object_count();
        if (static_cast<long long>(imp.faces.size()) > d * d * d * d) {
            ok = false;
            why = "|impFaces| exceeds d^4";
            break;
        }
        for (int size : {3, 4}) {
            for (const auto& fam : normal_families(c, size, 1 << 20)) {
                VoronoiPartition part = voronoi_partition(c, fam);
                Prediagram pre = build_prediagram(c, part);
                if (pre.ell <= 2) continue;
                Diagram dg = build_diagram(c, part, pre);
                for (int f : dg.branch_face)
                    if (!imp.contains(f)) {
                        ok = false;
                        why = "branching point outside impFaces";
                    }
                families++;
            }
        }
        // per-tuple certificate bounds
        for (const auto& fam : normal_families(c, 3, 1 << 20)) {
            int t1 = 0;
            for (int f = 0; f < c.g.face_count(); ++f)
                if (singular_face(c, f, fam, 1)) t1++;
            if (t1 > 2) { ok = false; why = "type-1 count exceeds 2"; }
            std::vector<std::vector<int>> orders{
                {fam[0], fam[1], fam[2]}, {fam[0], fam[2], fam[1]},
                {fam[1], fam[0], fam[2]}, {fam[1], fam[2], fam[0]},
                {fam[2], fam[0], fam[1]}, {fam[2], fam[1], fam[0]}};
            for (const auto& ord : orders) {
                int t2 = 0;
                for (int f = 0; f < c.g.face_count(); ++f)
                    if (singular_face(c, f, ord, 2)) t2++;
                if (t2 > 1) { ok = false; why = "type-2 count exceeds 1"; }
            }
        }
        for (const auto& fam : normal_families(c, 4, 1 << 20)) {
            for (int pivot = 0; pivot < 4; ++pivot) {
                std::vector<int> ord{fam[pivot]};
                for (int i = 0; i < 4; ++i)
                    if (i != pivot) ord.push_back(fam[i]);
                int t3 = 0;
                for (int f = 0; f < c.g.face_count(); ++f)
                    if (singular_face(c, f, ord, 3)) t3++;
                if (t3 > 1) { ok = false; why = "type-3 count exceeds 1"; }
            }
        }
        instances++;
    }
    std::ostringstream os;
    os << "important faces exhaustive on " << instances << " instances, " << families
       << " families";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(3, ok && instances >= 10, os.str());
}

void criterion4() {
    auto start = std::chrono::steady_clock::now();
    int checked = 0;
    bool ok = true;
    std::string why;
    for (unsigned seed : {5u, 23u, 64u}) {
        Instance inst = scattered(seed, 5, 6, 9);
        PreparedInstance prep = prepare(inst);
        const auto& c = prep.comps[0];
        std::vector<int> objs, clis;
        for (int p = 0; p < c.object_count(); ++p) objs.push_back(p);
        for (int ell = 4; ell <= 7 && ok; ++ell) {
            for (const auto& fam : normal_families(c, ell, 4)) {
                VoronoiPartition part = voronoi_partition(c, fam);
                Prediagram pre = build_prediagram(c, part);
                Diagram dg = build_diagram(c, part, pre);
                auto noose = find_balanced_noose(c, dg);
                if (!noose) { ok = false; why = "no balanced noose found"; break; }
                int nb = dg.branch_count();
                int bound = 0;
                while (2 * bound * bound < 9 * nb) bound++;
                if (noose->length() > bound) { ok = false; why = "noose too long"; break; }
                VoronoiSeparator sep = separator_from_noose(c, dg, *noose);
                if (!validate_separator(c, sep)) {
                    ok = false;
                    why = "projected separator invalid";
                    break;
                }
                GuardedSeparator x = guarded_from_separator(c, sep);
                for (int p : x.q)
                    if (!std::binary_search(fam.begin(), fam.end(), p)) {
                        ok = false;
                        why = "Q not inside family";
                    }
                for (int v : x.gamma) {
                    int owner = part.owner[v];
                    if (std::find(x.q.begin(), x.q.end(), owner) == x.q.end()) {
                        ok = false;
                        why = "gamma outside Q regions";
                    }
                }
                GuardedAnalysis an = analyze_guarded(c, objs, clis, x);
                for (const auto& comp : an.components) {
                    int members = 0;
                    for (int p : comp.objects)
                        if (std::binary_search(fam.begin(), fam.end(), p)) members++;
                    if (members > 2 * ell / 3) { ok = false; why = "not 2/3-balanced"; }
                }
                checked++;
            }
        }
    }
    std::ostringstream os;
    os << "balanced nooses on " << checked << " diagrams";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(4, ok && checked >= 36, os.str());
}

void criterion5() {
    auto start = std::chrono::steady_clock::now();
    int instances = 0, families = 0;
    bool ok = true;
    std::string why;
    for (unsigned seed : {2u, 4u, 6u, 9u, 12u}) {
        Instance inst = scattered(seed, 4, 3, 6);
        inst.k = 4;
        PreparedInstance prep = prepare(inst);
        const auto& c = prep.comps[0];
        std::vector<int> objs, clis;
        for (int p = 0; p < c.object_count(); ++p) objs.push_back(p);
        ImportantFaces imp = important_faces(c, objs);

        std::vector<GuardedSeparator> stream;
        EnumerateOptions opt;
        opt.max_len = std::min(separator_length_bound(4), 4);
        opt.emit = [&](const VoronoiSeparator&, const GuardedSeparator& x) {
            stream.push_back(x);
            return true;
        };
        enumerate_guarded_separators(c, objs, 4, imp.faces, opt);

        for (const auto& fam : normal_families(c, 4, 1 << 20)) {
            VoronoiPartition part = voronoi_partition(c, fam);
            bool found = false;
            for (const auto& x : stream) {
                bool compatible = true;
                for (int p : x.q)
                    compatible =
                        compatible && std::binary_search(fam.begin(), fam.end(), p);
                if (!compatible) continue;
                for (int v : x.gamma) {
                    int owner = part.owner[v];
                    if (std::find(x.q.begin(), x.q.end(), owner) == x.q.end()) {
                        compatible = false;
                        break;
                    }
                }
                if (!compatible) continue;
                GuardedAnalysis an = analyze_guarded(c, objs, clis, x);
                bool balanced = true;
                for (const auto& comp : an.components) {
                    int members = 0;
                    for (int p : comp.objects)
                        if (std::binary_search(fam.begin(), fam.end(), p)) members++;
                    if (members > 2 * 4 / 3) balanced = false;
                }
                if (balanced) { found = true; break; }
            }
            if (!found) {
                ok = false;
                why = "no balanced compatible separator for a family";
            }
            families++;
        }

        // pruning soundness at a feasible capped length
        auto run = [&](bool prune) {
            std::set<GuardedSeparator> out;
            EnumerateOptions o2;
            o2.prune = prune;
            o2.max_len = 2;
            o2.emit = [&](const VoronoiSeparator&, const GuardedSeparator& x) {
                out.insert(x);
                return true;
            };
            enumerate_guarded_separators(c, objs, 4, imp.faces, o2);
            return out;
        };
        if (run(true) != run(false)) {
            ok = false;
            why = "pruning changed the emitted set";
        }
        instances++;
    }
    std::ostringstream os;
    os << "enumeration completeness on " << instances << " instances, " << families
       << " families";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(5, ok && instances >= 5, os.str());
}

void criterion6() {
    auto start = std::chrono::steady_clock::now();
    long long configs = 0;
    bool ok = true;
    std::string why;
    std::mt19937_64 rng(606);
    for (unsigned seed = 1; configs < 10000 && seed <= 2000; ++seed) {
        Instance inst = scattered(seed, 4, 4, 6);
        for (int i = 0; i < 14; ++i)
            inst.clients.push_back({static_cast<int>(rng() % 16),
                                    Int(1 + (int)(rng() % 6)), Int(1)});
        PreparedInstance prep = prepare(inst);
        const auto& c = prep.comps[0];
        std::vector<int> objs, clis;
        for (int p = 0; p < c.object_count(); ++p) objs.push_back(p);
        for (int q = 0; q < c.client_count(); ++q) clis.push_back(q);
        for (int it = 0; it < 100 && configs < 10000; ++it) {
            std::vector<int> q;
            for (int p : objs)
                if (rng() % 3 == 0) q.push_back(p);
            if (q.empty() || !is_normal_local(c, q)) continue;
            GuardedSeparator x;
            x.q = q;
            for (int v = 0; v < c.g.vertex_count(); ++v)
                if (rng() % 3 == 0) x.gamma.push_back(v);
            GuardedAnalysis an = analyze_guarded(c, objs, clis, x);
            std::set<int> banned(an.ban.begin(), an.ban.end());
            std::set<int> in_q(x.q.begin(), x.q.end());
            std::set<int> gamma(x.gamma.begin(), x.gamma.end());
            std::set<int> cov(an.cov.begin(), an.cov.end());
            auto hits_gamma = [&](int p, int target) {
                for (int v : c.path_to_loc(p, target))
                    if (gamma.count(v)) return true;
                return false;
            };
            for (int p : objs) {
                if (in_q.count(p) || banned.count(p)) continue;
                for (int cl : clis) {
                    if (!hits_gamma(p, c.pla[cl])) continue;
                    if (c.covers[p][cl]) {
                        configs++;
                        if (!cov.count(cl)) { ok = false; why = "coverage transfer violated"; }
                    }
                }
                for (int p2 : objs) {
                    if (p2 == p || in_q.count(p2) || banned.count(p2)) continue;
                    int best = -1;
                    for (int v : c.loc[p2])
                        if (best < 0 || c.dist[p][v] < c.dist[p][best]) best = v;
                    if (hits_gamma(p, best)) {
                        configs++;
                        if (!c.normal_pair[p][p2]) { ok = false; why = "normality transfer violated"; }
                    }
                }
            }
        }
    }
    std::ostringstream os;
    os << "separation properties on " << configs << " configurations";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(6, ok && configs >= 10000, os.str());
}

void criterion7(const std::vector<Instance>& corpus) {
    auto start = std::chrono::steady_clock::now();
    int checked = 0;
    bool ok = true;
    std::string why;
    for (const Instance& inst : corpus) {
        PreparedInstance prep = prepare(inst);
        SolveResult base = solve(prep);
        SolverConfig cfg;
        cfg.extra_separators = [&prep](int comp, const SubInstance& sub) {
            std::size_t h = std::hash<int>()(comp) * 131 + std::hash<int>()(sub.k);
            for (int x : sub.objs) h = h * 1000003 + x;
            std::mt19937_64 rng(h);
            const PreparedComponent& c = prep.comps[comp];
            std::vector<GuardedSeparator> extra;
            for (int i = 0; i < 50; ++i) {
                GuardedSeparator x;
                for (int attempt = 0; attempt < 20 && x.q.empty(); ++attempt) {
                    std::vector<int> q;
                    for (int p : sub.objs)
                        if (rng() % 3 == 0) q.push_back(p);
                    if (!q.empty() && static_cast<int>(q.size()) <= sub.k &&
                        is_normal_local(c, q))
                        x.q = q;
                }
                if (x.q.empty()) x.q = {sub.objs[0]};
                for (int v = 0; v < c.g.vertex_count(); ++v)
                    if (rng() % 5 == 0) x.gamma.push_back(v);
                extra.push_back(x);
            }
            return extra;
        };
        SolveResult augmented = solve(prep, cfg);
        if (!(augmented.value == base.value)) {
            ok = false;
            why = "augmentation changed the value on instance " + std::to_string(checked);
            break;
        }
        checked++;
    }
    std::ostringstream os;
    os << "separator augmentation invariance on " << checked << " instances";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(7, ok && checked >= 200, os.str());
}

struct GeometryOutcome {
    std::vector<std::string> records;  // reused by criterion 9
};

GeometryOutcome criterion8() {
    auto start = std::chrono::steady_clock::now();
    GeometryOutcome out;
    bool ok = true;
    std::string why;
    int disks_done = 0, polys_done = 0, cover_l2 = 0, cover_linf = 0;

    // disk packing
    GenerateProfile profile;
    profile.name = "geometric-disks";
    profile.size = 5;
    profile.clients = 0;
    for (unsigned long long seed = 1; disks_done < 50 && ok; ++seed) {
        Generated g = generate_instance(seed, profile);
        int best = dnc_tests::max_disjoint_balls(g.scene);
        for (int k = 1; k <= std::min<int>(4, static_cast<int>(g.scene.balls.size())); ++k) {
            Instance inst = reduce_disk_packing(g.scene, k);
            long long d = static_cast<long long>(g.scene.balls.size());
            if (static_cast<long long>(inst.vertex_count) > 64 * d * d * d * d) {
                ok = false;
                why = "disk reduction size bound";
            }
            PreparedInstance prep = prepare(inst);
            SolveResult r = solve(prep);
            out.records.push_back(result_record(r, inst.scale).dump());
            if (r.value.finite() != (k <= best)) {
                ok = false;
                why = "disk packing decision mismatch (seed " + std::to_string(seed) + ")";
            }
        }
        disks_done++;
    }

    // polygon packing: axis-aligned squares and triangles, integer data
    std::mt19937_64 rng(881);
    while (polys_done < 50 && ok) {
        PlaneScene s;
        bool degenerate = false;
        for (int i = 0; i < 4; ++i) {
            long long x = static_cast<long long>(rng() % 14);
            long long y = static_cast<long long>(rng() % 14);
            long long side = 1 + static_cast<long long>(rng() % 3);
            if (rng() % 2 == 0) {
                s.polygons.push_back({{Rat(x), Rat(y)},
                                      {Rat(x + side), Rat(y)},
                                      {Rat(x + side), Rat(y + side)},
                                      {Rat(x), Rat(y + side)}});
            } else {
                s.polygons.push_back(
                    {{Rat(x), Rat(y)}, {Rat(x + 2 * side), Rat(y)}, {Rat(x), Rat(y + side)}});
            }
            for (std::size_t a = 0; a + 1 < s.polygons.size(); ++a)
                if (s.polygons[a][0] == s.polygons.back()[0]) degenerate = true;
        }
        if (degenerate) continue;
        int best = dnc_tests::max_disjoint_polygons(s);
        long long n = 0;
        for (const auto& p : s.polygons) n += static_cast<long long>(p.size());
        for (int k = 1; k <= 4; ++k) {
            Instance inst = reduce_polygon_packing(s, k);
            if (static_cast<long long>(inst.vertex_count) > n * n) {
                ok = false;
                why = "polygon reduction size bound";
            }
            PreparedInstance prep = prepare(inst);
            SolveResult r = solve(prep);
            out.records.push_back(result_record(r, inst.scale).dump());
            if (r.value.finite() != (k <= best)) {
                ok = false;
                why = "polygon packing decision mismatch";
            }
        }
        polys_done++;
    }

    // point cover, both norms
    for (Norm norm : {Norm::L2, Norm::Linf}) {
        GenerateProfile cp;
        cp.name = norm == Norm::L2 ? "geometric-disks" : "geometric-squares";
        cp.size = 4;
        cp.clients = 6;
        cp.k = 2;
        int& done = norm == Norm::L2 ? cover_l2 : cover_linf;
        for (unsigned long long seed = 100; done < 50 && ok; ++seed) {
            Generated g = generate_instance(seed, cp);
            long long d = static_cast<long long>(g.scene.balls.size());
            long long cnum = static_cast<long long>(g.scene.points.size());
            CoverReduction red = reduce_point_cover(g.scene, g.scene.k);
            if (static_cast<long long>(red.inst.vertex_count) >
                std::max(4LL, d * d * cnum * cnum)) {
                ok = false;
                why = "cover reduction size bound";
            }
            Int mine = cover_best_count(red, g.scene.k);
            int expect = dnc_tests::best_cover_count(g.scene, g.scene.k);
            out.records.push_back((norm == Norm::L2 ? "l2:" : "linf:") + mine.str());
            if (mine != expect) {
                ok = false;
                why = "cover count mismatch (seed " + std::to_string(seed) + ")";
            }
            done++;
        }
    }

    std::ostringstream os;
    os << "geometric reductions: " << disks_done << " disk, " << polys_done
       << " polygon, " << cover_l2 << "+" << cover_linf << " cover scenes";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(8, ok && disks_done >= 50 && polys_done >= 50 && cover_l2 >= 50 &&
                  cover_linf >= 50,
           os.str());
    return out;
}

void criterion9(const std::vector<Instance>& corpus, const GeometryOutcome& geom) {
    auto start = std::chrono::steady_clock::now();
    bool ok = true;
    std::string why;

    struct Config {
        int threads;
        bool memo;
    };
    std::vector<Config> configs{{1, true}, {2, true}, {8, true}, {1, false}, {2, false},
                                {8, false}};
    for (const Config& config : configs) {
        SolverConfig cfg;
        cfg.threads = config.threads;
        cfg.memo = config.memo;
        // criterion-1 corpus records
        for (std::size_t i = 0; i < corpus.size() && ok; ++i) {
            PreparedInstance prep = prepare(corpus[i]);
            SolveResult r = solve(prep, cfg);
            if (result_record(r, corpus[i].scale).dump() != criterion1_records[i]) {
                ok = false;
                why = "record differs (threads " + std::to_string(config.threads) +
                      ", memo " + (config.memo ? "on" : "off") + ")";
            }
        }
    }
    // geometry reruns at 2 and 8 threads
    GenerateProfile profile;
    profile.name = "geometric-disks";
    profile.size = 5;
    profile.clients = 0;
    std::size_t idx = 0;
    for (unsigned long long seed = 1; seed <= 10 && ok; ++seed) {
        Generated g = generate_instance(seed, profile);
        for (int k = 1; k <= std::min<int>(4, static_cast<int>(g.scene.balls.size()));
             ++k) {
            Instance inst = reduce_disk_packing(g.scene, k);
            for (int threads : {2, 8}) {
                SolverConfig cfg;
                cfg.threads = threads;
                PreparedInstance prep = prepare(inst);
                SolveResult r = solve(prep, cfg);
                if (idx < geom.records.size() &&
                    result_record(r, inst.scale).dump() != geom.records[idx]) {
                    ok = false;
                    why = "geometry record differs at " + std::to_string(threads) +
                          " threads";
                }
            }
            idx++;
        }
    }
    std::ostringstream os;
    os << "determinism across {1,2,8} threads and memo on/off";
    if (!ok) os << " — " << why;
    os << " (" << seconds_since(start) << "s)";
    report(9, ok, os.str());
}

}  // namespace

int main() {
    auto start = std::chrono::steady_clock::now();
    std::vector<Instance> corpus = corpus_small();
    criterion1(corpus);
    criterion2();
    criterion3();
    criterion4();
    criterion5();
    criterion6();
    criterion7(corpus);
    GeometryOutcome geom = criterion8();
    criterion9(corpus, geom);
    std::cout << (failures == 0 ? "ALL PASS" : "FAILURES: " + std::to_string(failures))
              << " (" << seconds_since(start) << "s total)" << std::endl;
    return failures == 0 ? 0 : 1;
}
