#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "dnc/solver.hpp"
#include "helpers.hpp"

using namespace dnc;
using dnc_tests::random_grid_instance;
using dnc_tests::w1_instance;

namespace {

/// Two disjoint copies of W1 on vertices 0..3 and 4..7.
Instance double_w1() {
    Instance a = w1_instance();
    Instance inst = a;
    inst.vertex_count = 8;
    for (const auto& rot : a.rotations) {
        std::vector<int> shifted;
        for (int v : rot) shifted.push_back(v + 4);
        inst.rotations.push_back(shifted);
    }
    for (const auto& e : a.edges) inst.edges.push_back({e.u + 4, e.v + 4, e.w});
    for (const auto& o : a.objects) {
        ObjectSpec o2 = o;
        for (int& v : o2.loc) v += 4;
        inst.objects.push_back(o2);
    }
    for (const auto& c : a.clients) {
        ClientSpec c2 = c;
        c2.placement += 4;
        inst.clients.push_back(c2);
    }
    inst.k = 2;
    return inst;
}

GuardedSeparator random_guarded(const PreparedComponent& c, const SubInstance& sub,
                                std::mt19937_64& rng) {
    GuardedSeparator x;
    for (int attempt = 0; attempt < 30 && x.q.empty(); ++attempt) {
        std::vector<int> q;
        for (int p : sub.objs)
            if (rng() % 3 == 0) q.push_back(p);
        if (!q.empty() && static_cast<int>(q.size()) <= sub.k && is_normal_local(c, q))
            x.q = q;
    }
    if (x.q.empty() && !sub.objs.empty()) x.q = {sub.objs[0]};
    for (int v = 0; v < c.g.vertex_count(); ++v)
        if (rng() % 5 == 0) x.gamma.push_back(v);
    return x;
}

}  // namespace

TEST_CASE("revenue on W1") {
    PreparedInstance prep = prepare(w1_instance());
    CHECK(revenue(prep, {}) == 0);
    CHECK(revenue(prep, {1}) == 2);     // q2 prize 3, cost 1
    CHECK(revenue(prep, {0, 1}) == 2);  // q1 stays uncovered
}

TEST_CASE("revenue rejects non-normal families") {
    Instance inst = w1_instance();
    inst.objects.push_back({{2}, 0, 1});
    PreparedInstance prep = prepare(inst);
    CHECK_THROWS_MATCHES(revenue(prep, {1, 2}), Error,
                         Catch::Matchers::Predicate<Error>([](const Error& e) {
                             return e.code() == ErrorCode::NotNormal;
                         }));
}

TEST_CASE("brute force base cases") {
    Instance inst = w1_instance();
    SECTION("k exceeding d is infeasible") {
        inst.k = 3;
        PreparedInstance prep = prepare(inst);
        SolveResult r = solve_bruteforce(prep);
        CHECK(r.status == SolveStatus::Infeasible);
        CHECK(!r.value.finite());
        CHECK(r.witness.empty());
    }
    SECTION("k = 0 is the empty family") {
        inst.k = 0;
        PreparedInstance prep = prepare(inst);
        SolveResult r = solve_bruteforce(prep);
        CHECK(r.value == ExtValue(Int(0)));
        CHECK(r.witness.empty());
    }
    SECTION("W1 optimum") {
        PreparedInstance prep = prepare(inst);
        SolveResult r = solve_bruteforce(prep);
        CHECK(r.value == ExtValue(Int(2)));
        CHECK(r.witness == std::vector<int>{1});
    }
}

TEST_CASE("knapsack combination") {
    auto fin = [](long long x) { return ExtValue(Int(x)); };
    ExtValue ninf = ExtValue::neg_inf();
    SECTION("single component passes through") {
        std::vector<std::vector<ExtValue>> t{{fin(0), fin(7), fin(9)}};
        CHECK(knapsack_combine(t, 2) == fin(9));
        CHECK(knapsack_combine(t, 1) == fin(7));
    }
    SECTION("two components split the budget") {
        std::vector<std::vector<ExtValue>> t{{fin(0), fin(5)}, {fin(0), fin(3)}};
        CHECK(knapsack_combine(t, 1) == fin(5));
        CHECK(knapsack_combine(t, 2) == fin(8));
    }
    SECTION("infeasible entries absorb") {
        std::vector<std::vector<ExtValue>> t{{fin(0), ninf}, {fin(0), ninf}};
        CHECK(knapsack_combine(t, 1) == ninf);
        CHECK(knapsack_combine(t, 0) == fin(0));
    }
}

TEST_CASE("solve matches brute force on W1") {
    PreparedInstance prep = prepare(w1_instance());
    SolveResult r = solve(prep);
    CHECK(r.status == SolveStatus::Optimal);
    CHECK(r.value == ExtValue(Int(2)));
    CHECK(r.witness == std::vector<int>{1});
}

TEST_CASE("two disjoint W1 copies merge componentwise") {
    PreparedInstance prep = prepare(double_w1());
    SolveResult r = solve(prep);
    CHECK(r.value == ExtValue(Int(4)));
    CHECK(r.witness == std::vector<int>{1, 3});
    SolveResult oracle = solve_bruteforce(prep);
    CHECK(oracle.value == r.value);
}

TEST_CASE("isolated-vertex components carry objects and clients") {
    Instance inst = w1_instance();
    inst.vertex_count = 5;
    inst.rotations.push_back({});  // vertex 4 floats alone
    inst.objects.push_back({{4}, 0, 0});
    inst.clients.push_back({4, 0, 7});
    inst.k = 2;
    PreparedInstance prep = prepare(inst);
    SolveResult fast = solve(prep);
    SolveResult oracle = solve_bruteforce(prep);
    CHECK(fast.value == oracle.value);
    CHECK(fast.value == ExtValue(Int(9)));  // p2 revenue 2 plus the lone prize 7
    CHECK(fast.witness == std::vector<int>{1, 2});
}

TEST_CASE("disconnected instance with k beyond objects is infeasible") {
    Instance inst = double_w1();
    inst.k = 5;
    PreparedInstance prep = prepare(inst);
    SolveResult r = solve(prep);
    CHECK(r.status == SolveStatus::Infeasible);
    CHECK(!r.value.finite());
}

TEST_CASE("oracle equivalence on random instances with k = 4, 5") {
    int solved = 0;
    for (unsigned seed = 1; seed <= 10; ++seed) {
        for (int k : {4, 5}) {
            Instance inst = random_grid_instance(seed * 100 + k, 5, 3, 6, 8, k);
            PreparedInstance prep = prepare(inst);
            SolveResult fast = solve(prep);
            SolveResult oracle = solve_bruteforce(prep);
            INFO("seed " << seed << " k " << k);
            CHECK(fast.value == oracle.value);
            if (fast.value.finite()) {
                CHECK(ExtValue(revenue(prep, fast.witness)) == fast.value);
                CHECK(static_cast<int>(fast.witness.size()) == k);
            }
            solved++;
        }
    }
    CHECK(solved == 20);
}

TEST_CASE("memoization does not change values or witnesses") {
    for (unsigned seed : {5u, 17u}) {
        Instance inst = random_grid_instance(seed, 4, 3, 5, 6, 4);
        PreparedInstance prep = prepare(inst);
        SolverConfig with, without;
        with.memo = true;
        without.memo = false;
        SolveResult a = solve(prep, with);
        SolveResult b = solve(prep, without);
        CHECK(a.value == b.value);
        CHECK(a.witness == b.witness);
        CHECK(a.status == b.status);
    }
}

TEST_CASE("thread count does not change values or witnesses") {
    Instance inst = random_grid_instance(23, 5, 3, 6, 8, 4);
    PreparedInstance prep = prepare(inst);
    SolveResult base = solve(prep);
    for (int threads : {2, 8}) {
        SolverConfig cfg;
        cfg.threads = threads;
        SolveResult r = solve(prep, cfg);
        CHECK(r.value == base.value);
        CHECK(r.witness == base.witness);
    }
}

TEST_CASE("injected guarded separators never change the value") {
    for (unsigned seed : {7u, 29u}) {
        Instance inst = random_grid_instance(seed, 4, 4, 5, 6, 4);
        PreparedInstance prep = prepare(inst);
        SolveResult base = solve(prep);

        SolverConfig cfg;
        cfg.extra_separators = [&prep](int comp, const SubInstance& sub) {
            // deterministic per subinstance
            std::size_t h = std::hash<int>()(comp) * 31 + std::hash<int>()(sub.k);
            for (int x : sub.objs) h = h * 1000003 + x;
            std::mt19937_64 rng(h);
            std::vector<GuardedSeparator> extra;
            for (int i = 0; i < 50; ++i)
                extra.push_back(random_guarded(prep.comps[comp], sub, rng));
            return extra;
        };
        SolveResult augmented = solve(prep, cfg);
        CHECK(augmented.value == base.value);
    }
}

TEST_CASE("max-separator limit reports incomplete") {
    Instance inst = random_grid_instance(3, 5, 3, 6, 8, 4);
    PreparedInstance prep = prepare(inst);
    SolveResult base = solve(prep);
    if (base.stats.separators_enumerated > 2) {
        SolverConfig cfg;
        cfg.max_separators = 1;
        SolveResult r = solve(prep, cfg);
        CHECK(r.status == SolveStatus::Incomplete);
        CHECK(!(base.value < r.value));
    }
}
