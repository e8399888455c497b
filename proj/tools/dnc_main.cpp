#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dnc/dnc.hpp"

namespace {

using namespace dnc;

constexpr int kExitOk = 0;
constexpr int kExitInfeasible = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitIncomplete = 3;
constexpr int kExitInputError = 4;

int default_threads() {
    if (const char* env = std::getenv("DNC_THREADS")) {
        int t = std::atoi(env);
        if (t >= 1) return t;
    }
    return 1;
}

int status_exit(const SolveResult& r) {
    switch (r.status) {
        case SolveStatus::Optimal: return kExitOk;
        case SolveStatus::Infeasible: return kExitInfeasible;
        case SolveStatus::Incomplete: return kExitIncomplete;
    }
    return kExitInputError;
}

void dump_separators(const PreparedInstance& prep, long long limit) {
    for (std::size_t ci = 0; ci < prep.comps.size(); ++ci) {
        const PreparedComponent& c = prep.comps[ci];
        if (prep.k < 4 || c.object_count() == 0) continue;
        std::vector<int> objs, clis;
        for (int p = 0; p < c.object_count(); ++p) objs.push_back(p);
        for (int q = 0; q < c.client_count(); ++q) clis.push_back(q);
        ImportantFaces imp = important_faces(c, objs);
        long long seen = 0;
        EnumerateOptions opt;
        opt.max_len = std::min(separator_length_bound(prep.k), prep.k);
        opt.emit = [&](const VoronoiSeparator& sep, const GuardedSeparator& x) {
            GuardedAnalysis an = analyze_guarded(c, objs, clis, x);
            std::cerr << "separator comp=" << ci << " len=" << sep.size() << " seq=";
            for (const auto& q : sep)
                std::cerr << " (p" << c.objects[q.p] << ",u" << q.u << ",f" << q.f << ",v"
                          << q.v << ")";
            std::cerr << " |gamma|=" << x.gamma.size() << " gamma=[";
            for (std::size_t i = 0; i < x.gamma.size(); ++i)
                std::cerr << (i ? "," : "") << x.gamma[i];
            std::cerr << "] cov=" << an.cov.size() << " ban=" << an.ban.size() << "\n";
            return ++seen < limit;
        };
        enumerate_guarded_separators(c, objs, prep.k, imp.faces, opt);
    }
}

void print_diagram_dump(const PreparedComponent& c, const std::vector<int>& family,
                        const Diagram& dg) {
    std::cout << "diagram family=[";
    for (std::size_t i = 0; i < family.size(); ++i)
        std::cout << (i ? "," : "") << c.objects[family[i]];
    std::cout << "] vertices=" << dg.branch_count() << " edges=" << dg.edge_count()
              << " faces=" << dg.face_count() << "\n";
    for (int b = 0; b < dg.branch_count(); ++b)
        std::cout << "  v" << b << " face=" << dg.branch_face[b] << "\n";
    for (int e = 0; e < dg.edge_count(); ++e) {
        const auto& ed = dg.edges[e];
        std::cout << "  e" << e << " v" << ed.end_a / 3 << "-v" << ed.end_b / 3
                  << (ed.loop() ? " loop" : "") << " dual_path=[";
        for (std::size_t i = 0; i < ed.dual_path.size(); ++i)
            std::cout << (i ? "," : "") << ed.dual_path[i];
        std::cout << "]\n";
    }
    for (int f = 0; f < dg.face_count(); ++f)
        std::cout << "  face " << f << " -> object " << c.objects[dg.face_object[f]]
                  << "\n";
}

int run_solve(const std::string& path, const SolverConfig& cfg, long long dump_seps) {
    Instance inst = load_instance(path);
    PreparedInstance prep = prepare(inst);
    if (dump_seps > 0) dump_separators(prep, dump_seps);
    SolveResult r = solve(prep, cfg);
    std::cout << result_record(r, inst.scale).dump() << "\n";
    std::cerr << stats_line(r.stats) << "\n";
    return status_exit(r);
}

int run_oracle(const std::string& path) {
    Instance inst = load_instance(path);
    PreparedInstance prep = prepare(inst);
    SolveResult r = solve_bruteforce(prep);
    std::cout << result_record(r, inst.scale).dump() << "\n";
    return status_exit(r);
}

int run_verify(const std::string& path, const SolverConfig& cfg) {
    Instance inst = load_instance(path);
    PreparedInstance prep = prepare(inst);
    SolveResult fast = solve(prep, cfg);
    SolveResult oracle = solve_bruteforce(prep);
    Json record;
    record["solve"] = result_record(fast, inst.scale);
    record["oracle"] = result_record(oracle, inst.scale);
    bool equal = fast.value == oracle.value;
    if (equal && fast.value.finite())
        equal = ExtValue(revenue(prep, fast.witness)) == fast.value;
    record["equal"] = equal;
    std::cout << record.dump() << "\n";
    std::cerr << stats_line(fast.stats) << "\n";
    if (fast.status == SolveStatus::Incomplete) return kExitIncomplete;
    return equal ? kExitOk : kExitMismatch;
}

int run_gen(unsigned long long seed, const GenerateProfile& profile,
            const std::string& out_path) {
    Generated g = generate_instance(seed, profile);
    Json j = g.is_scene ? scene_to_json(g.scene) : instance_to_json(g.instance);
    if (out_path.empty()) {
        std::cout << j.dump(1) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw Error(ErrorCode::ParseError, "cannot write " + out_path);
        out << j.dump(1) << "\n";
    }
    return kExitOk;
}

int run_reduce(const std::string& mode, const std::string& path, int k_override,
               const std::string& emit_path, const SolverConfig& cfg) {
    PlaneScene scene = load_scene(path);
    if (k_override > 0) scene.k = k_override;
    if (mode == "disks" || mode == "polygons") {
        Instance inst = mode == "disks" ? reduce_disk_packing(scene, scene.k)
                                        : reduce_polygon_packing(scene, scene.k);
        if (!emit_path.empty()) save_instance(inst, emit_path);
        PreparedInstance prep = prepare(inst);
        SolveResult r = solve(prep, cfg);
        Json record = result_record(r, inst.scale);
        record["mode"] = mode;
        record["feasible"] = r.status == SolveStatus::Optimal;
        std::cout << record.dump() << "\n";
        return status_exit(r);
    }
    if (mode == "cover-l2" || mode == "cover-linf") {
        scene.norm = mode == "cover-l2" ? Norm::L2 : Norm::Linf;
        CoverReduction red = reduce_point_cover(scene, scene.k);
        if (!emit_path.empty()) save_instance(red.inst, emit_path);
        // best coverage over budgets 0..k and the witness achieving it
        Int best = 0;
        SolveResult best_run;
        best_run.status = SolveStatus::Optimal;
        best_run.value = ExtValue(Int(0));
        Instance work = red.inst;
        for (int kk = 1; kk <= scene.k; ++kk) {
            work.k = kk;
            PreparedInstance prep = prepare(work);
            SolveResult r = solve(prep, cfg);
            if (r.status == SolveStatus::Incomplete) best_run.status = SolveStatus::Incomplete;
            if (r.value.finite() && *r.value.v > best) {
                best = *r.value.v;
                best_run.value = r.value;
                best_run.witness = r.witness;
            }
        }
        Json record;
        record["status"] = status_name(best_run.status);
        record["mode"] = mode;
        record["count"] = Int(best / red.inst.scale).str();
        record["witness"] = best_run.witness;
        std::cout << record.dump() << "\n";
        return best_run.status == SolveStatus::Incomplete ? kExitIncomplete : kExitOk;
    }
    throw Error(ErrorCode::BadProfile, "unknown reduce mode '" + mode + "'");
}

int run_stats(const std::string& path, int samples, unsigned long long seed) {
    Instance inst = load_instance(path);
    PreparedInstance prep = prepare(inst);
    std::mt19937_64 rng(seed);
    for (std::size_t ci = 0; ci < prep.comps.size(); ++ci) {
        const PreparedComponent& c = prep.comps[ci];
        std::cout << "component " << ci << ": vertices=" << c.g.vertex_count()
                  << " edges=" << c.g.edge_count() << " faces=" << c.g.face_count()
                  << " objects=" << c.object_count() << " clients=" << c.client_count()
                  << "\n";
        if (c.object_count() < 3) continue;
        std::vector<int> objs;
        for (int p = 0; p < c.object_count(); ++p) objs.push_back(p);
        ImportantFaces imp = important_faces(c, objs);
        std::cout << "  impFaces: " << imp.faces.size() << " of " << c.g.face_count()
                  << " faces\n";
        int shown = 0;
        for (int attempt = 0; attempt < 50 * samples && shown < samples; ++attempt) {
            int ell = 3 + static_cast<int>(rng() % 6);
            if (ell > c.object_count()) continue;
            std::vector<int> fam;
            std::set<int> used;
            while (static_cast<int>(used.size()) < ell)
                used.insert(static_cast<int>(rng() % c.object_count()));
            fam.assign(used.begin(), used.end());
            if (!is_normal_local(c, fam)) continue;
            VoronoiPartition part = voronoi_partition(c, fam);
            Prediagram pre = build_prediagram(c, part);
            Diagram dg = build_diagram(c, part, pre);
            print_diagram_dump(c, fam, dg);
            shown++;
        }
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact solver for disjoint network coverage on planar graphs"};
    app.require_subcommand(1);

    SolverConfig cfg;
    cfg.threads = default_threads();

    std::string instance_path, scene_path, out_path, emit_path, mode, profile_name;
    long long max_seps = 0, dump_seps = 0;
    double timeout = 0;
    bool no_memo = false;
    unsigned long long seed = 1;
    GenerateProfile profile;
    int k_override = 0;
    int samples = 5;

    auto add_solver_flags = [&](CLI::App* cmd) {
        cmd->add_flag("--no-memo", no_memo, "disable memoization");
        cmd->add_option("--max-seps", max_seps, "separator cap per recursion level");
        cmd->add_option("--threads", cfg.threads, "worker threads");
        cmd->add_option("--timeout", timeout, "wall-clock budget in seconds");
    };

    CLI::App* solve_cmd = app.add_subcommand("solve", "solve an instance file");
    solve_cmd->add_option("instance", instance_path)->required();
    add_solver_flags(solve_cmd);
    solve_cmd->add_option("--dump-seps", dump_seps,
                          "print the first N candidate separators to stderr");

    CLI::App* oracle_cmd = app.add_subcommand("oracle", "brute-force oracle");
    oracle_cmd->add_option("instance", instance_path)->required();

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run solver and oracle, compare results");
    verify_cmd->add_option("instance", instance_path)->required();
    add_solver_flags(verify_cmd);

    CLI::App* gen_cmd = app.add_subcommand("gen", "generate an instance or scene");
    gen_cmd->add_option("--seed", seed)->required();
    gen_cmd->add_option("--profile", profile.name,
                        "grid-graph | random-triangulation | geometric-disks | "
                        "geometric-squares")
        ->required();
    gen_cmd->add_option("--size", profile.size);
    gen_cmd->add_option("--objects", profile.objects);
    gen_cmd->add_option("--clients", profile.clients);
    gen_cmd->add_option("--k", profile.k);
    bool infeasible_ok = false;
    gen_cmd->add_flag("--infeasible-ok", infeasible_ok);
    gen_cmd->add_option("--out", out_path);

    CLI::App* reduce_cmd = app.add_subcommand("reduce", "solve a geometric scene");
    reduce_cmd->add_option("--mode", mode, "disks | polygons | cover-l2 | cover-linf")
        ->required();
    reduce_cmd->add_option("scene", scene_path)->required();
    reduce_cmd->add_option("--k", k_override);
    reduce_cmd->add_option("--emit-instance", emit_path,
                           "also write the reduced instance file");
    add_solver_flags(reduce_cmd);

    CLI::App* stats_cmd =
        app.add_subcommand("stats", "important faces and sampled diagram dumps");
    stats_cmd->add_option("instance", instance_path)->required();
    stats_cmd->add_option("--samples", samples);
    stats_cmd->add_option("--seed", seed);

    CLI11_PARSE(app, argc, argv);

    cfg.memo = !no_memo;
    cfg.max_separators = max_seps;
    cfg.timeout_seconds = timeout;

    try {
        if (solve_cmd->parsed()) return run_solve(instance_path, cfg, dump_seps);
        if (oracle_cmd->parsed()) return run_oracle(instance_path);
        if (verify_cmd->parsed()) return run_verify(instance_path, cfg);
        if (gen_cmd->parsed()) {
            profile.feasible = !infeasible_ok;
            return run_gen(seed, profile, out_path);
        }
        if (reduce_cmd->parsed())
            return run_reduce(mode, scene_path, k_override, emit_path, cfg);
        if (stats_cmd->parsed()) return run_stats(instance_path, samples, seed);
    } catch (const dnc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}
