#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numeric>
#include <vector>

#include "antkit/engines.hpp"
#include "antkit/exhaustive.hpp"
#include "antkit/instance.hpp"
#include "antkit/local_search.hpp"
#include "antkit/params.hpp"
#include "oracle.hpp"

using namespace antkit;

TEST_CASE("engine names parse both ways") {
    CHECK(engine_name(Engine::hacosa) == "HACO-SA");
    CHECK(parse_engine("mmas") == Engine::mmas);
    CHECK(parse_engine("HACO-SA") == Engine::hacosa);
    CHECK(parse_engine("hacosa") == Engine::hacosa);
    CHECK(parse_engine("AS") == Engine::as);
    CHECK_FALSE(parse_engine("simulated-annealing").has_value());
}

TEST_CASE("parameter validation and overrides") {
    SolverParams p = default_params(Engine::acs);
    CHECK_NOTHROW(p.validate());
    apply_param(p, "q0", "0.5");
    CHECK(p.q0 == 0.5);
    apply_param(p, "ants", "7");
    CHECK(p.ants == 7);
    apply_param(p, "local_search", "on");
    CHECK(p.local_search == true);
    CHECK_THROWS_AS(apply_param(p, "warp", "9"), std::invalid_argument);
    CHECK_THROWS_AS(apply_param(p, "q0", "fast"), std::invalid_argument);

    p.q0 = 1.5;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);
    p.q0 = 0.9;
    p.iterations = 0;
    CHECK_THROWS_AS(p.validate(), std::invalid_argument);

    CHECK(default_params(Engine::as).evaporation == 0.5);
    CHECK(default_params(Engine::mmas).evaporation == 0.02);
    CHECK(default_params(Engine::hacosa).ants == 10);
    CHECK(default_params(Engine::hacosa).stall_limit == 200);
}

TEST_CASE("transition probabilities normalize and exclude visited cities") {
    Instance demo = demo8_instance();
    PheromoneStore store(8, 1.0);
    AntState ant(8);
    ant.visit(0);
    std::vector<double> p = transition_probabilities(store, demo, ant, 1.0, 2.0);
    REQUIRE(p.size() == 8);
    CHECK(p[0] == 0.0);
    double sum = std::accumulate(p.begin(), p.end(), 0.0);
    CHECK(std::abs(sum - 1.0) <= 1e-12);
    // cities 1 and 7 are equidistant from 0 and tie on uniform pheromone
    CHECK(p[1] == doctest::Approx(p[7]).epsilon(1e-12));
    for (int s = 2; s < 7; ++s) CHECK(p[1] > p[s]);

    // with beta = 0 and uniform trails the rule is uniform over unvisited
    ant.visit(3);
    std::vector<double> u = transition_probabilities(store, demo, ant, 1.0, 0.0);
    for (int s = 0; s < 8; ++s) {
        if (s == 0 || s == 3) CHECK(u[s] == 0.0);
        else CHECK(u[s] == doctest::Approx(1.0 / 6.0).epsilon(1e-12));
    }
}

TEST_CASE("greedy acs step picks the argmax and honors candidate lists") {
    Instance demo = demo8_instance();
    SolverParams params = default_params(Engine::acs);
    params.q0 = 1.0;
    params.neighbor_k = 2;
    SearchContext ctx(demo, params);
    PheromoneStore store(8, 1.0);
    Rng rng(5);

    AntState ant(8);
    ant.visit(0);
    // neighbor list of 0 with k=2 is {1,7}, both unvisited; d(0,1)=d(0,7)=12
    // and the first list entry wins the tie
    CHECK(acs_select_next(store, ctx, ant, rng) == 1);

    // mark 1 visited without moving: from 0 the list still offers 7
    ant.visited[1] = 1;
    CHECK(acs_select_next(store, ctx, ant, rng) == 7);

    // boosting the trail beats a shorter edge at alpha=1 only if it
    // outweighs the heuristic: from 1, d(1,2)=15 vs d(1,4)=21
    SolverParams wide = default_params(Engine::acs);
    wide.q0 = 1.0;
    SearchContext ctx_wide(demo, wide);
    AntState ant2(8);
    ant2.visit(0);
    ant2.visit(1);
    CHECK(acs_select_next(store, ctx_wide, ant2, rng) == 2);
    store.set(1, 4, 3.0);  // (21/15)^2 ~ 1.96 < 3
    CHECK(acs_select_next(store, ctx_wide, ant2, rng) == 4);
}

TEST_CASE("exhausted candidate lists fall back to the full unvisited set") {
    Instance demo = demo8_instance();
    SolverParams params = default_params(Engine::acs);
    params.q0 = 1.0;
    params.neighbor_k = 1;
    SearchContext ctx(demo, params);
    PheromoneStore store(8, 1.0);
    Rng rng(5);

    AntState ant(8);
    for (int c : {1, 0, 7, 6, 5, 2}) ant.visit(c);  // current 2, list of 2 = {1} visited
    CHECK(acs_select_next(store, ctx, ant, rng) == 4);  // d(2,4)=36 < d(2,3)=50
}

TEST_CASE("pseudo-random rule frequencies match the proportional rule within 3 sigma") {
    Rng setup(2024);
    Instance inst = testutil::random_matrix_instance(setup, 10, "stat");
    SolverParams params = default_params(Engine::acs);
    params.q0 = 0.3;
    params.use_candidate_lists = false;
    SearchContext ctx(inst, params);

    PheromoneStore store(10, 1.0);
    for (int r = 0; r < 10; ++r)
        for (int s = r + 1; s < 10; ++s)
            store.set(r, s, 0.5 + 1.5 * uniform_unit(setup));

    AntState ant(10);
    for (int c : {0, 4, 2}) ant.visit(c);

    std::vector<double> p1 = transition_probabilities(store, inst, ant, params.alpha, params.beta);
    int arg = -1;
    double best_w = -1.0;
    for (int s = 0; s < 10; ++s) {
        if (ant.visited[static_cast<size_t>(s)]) continue;
        double w = ctx.edge_weight(store, ant.current(), s);
        if (w > best_w) {
            best_w = w;
            arg = s;
        }
    }

    const int draws = 100000;
    std::vector<int> count(10, 0);
    Rng rng(7);
    for (int i = 0; i < draws; ++i) ++count[static_cast<size_t>(acs_select_next(store, ctx, ant, rng))];

    for (int s = 0; s < 10; ++s) {
        double expect_p = 0.7 * p1[static_cast<size_t>(s)] + (s == arg ? 0.3 : 0.0);
        if (ant.visited[static_cast<size_t>(s)]) {
            CHECK(count[static_cast<size_t>(s)] == 0);
            continue;
        }
        double mean = draws * expect_p;
        double sigma = std::sqrt(draws * expect_p * (1.0 - expect_p));
        CAPTURE(s);
        CHECK(std::abs(count[static_cast<size_t>(s)] - mean) <= 3.0 * sigma + 1.0);
    }
}

TEST_CASE("tau0 defaults derive from the nearest-neighbor tour") {
    Instance demo = demo8_instance();
    long long l_nn = nearest_neighbor_tour(demo, 0).length;
    REQUIRE(l_nn == 141);
    SolverParams acs = default_params(Engine::acs);
    CHECK(resolve_tau0(demo, acs) == 1.0 / (8.0 * 141.0));
    SolverParams mmas = default_params(Engine::mmas);
    CHECK(resolve_tau0(demo, mmas) == 1.0 / (0.02 * 141.0));
    SolverParams hacosa = default_params(Engine::hacosa);
    CHECK(resolve_tau0(demo, hacosa) == 1.0 / (8.0 * 141.0));
    acs.tau0 = 0.125;
    CHECK(resolve_tau0(demo, acs) == 0.125);
}

TEST_CASE("every engine solves the 8-city fixture to optimality") {
    Instance demo = demo8_instance();
    long long optimum = testutil::brute_force_length(demo);
    CHECK(optimum == exhaustive_optimum(demo).length);
    for (Engine e : {Engine::as, Engine::acs, Engine::mmas, Engine::hacosa}) {
        CAPTURE(engine_name(e));
        SolverParams params = default_params(e);
        params.iterations = 200;
        params.seed = 3;
        RunReport report = run_engine(demo, params);
        CHECK(report.best.length == optimum);
        CHECK(is_valid_tour(report.best.order, demo.n()));
        CHECK(report.best.length == tour_length(demo, report.best.order));
    }
}

TEST_CASE("fixed seeds reproduce runs exactly") {
    Instance eil51 = parse_tsplib_file(testutil::data_path("eil51.tsp"));
    for (Engine e : {Engine::as, Engine::acs, Engine::mmas}) {
        CAPTURE(engine_name(e));
        SolverParams params = default_params(e);
        params.iterations = 15;
        params.seed = 11;
        RunReport a = run_engine(eil51, params);
        RunReport b = run_engine(eil51, params);
        CHECK(a.best.length == b.best.length);
        CHECK(a.best.order == b.best.order);
        CHECK(a.tours_built == b.tours_built);
        REQUIRE(a.trace.size() == b.trace.size());
        for (size_t i = 0; i < a.trace.size(); ++i) {
            CHECK(a.trace[i].iteration == b.trace[i].iteration);
            CHECK(a.trace[i].best_length == b.trace[i].best_length);
        }
    }
}

TEST_CASE("run accounting and cutoffs") {
    Instance demo = demo8_instance();
    SolverParams params = default_params(Engine::acs);
    params.iterations = 40;
    RunReport r = run_engine(demo, params);
    CHECK(r.iterations_run == 40);
    CHECK(r.tours_built == 40LL * params.ants);
    CHECK(r.trace.size() == 40);
    CHECK(r.engine == "ACS");
    CHECK(r.instance == "demo8");
    CHECK(r.seed == params.seed);

    params.iterations = 5000;
    params.stall_limit = 10;
    RunReport stalled = run_engine(demo, params);
    CHECK(stalled.iterations_run < 5000);

    params.stall_limit = 0;
    params.time_limit_s = 1e-9;
    RunReport timed = run_engine(demo, params);
    CHECK(timed.iterations_run == 1);

    params.time_limit_s = 0.0;
    params.iterations = 0;
    CHECK_THROWS_AS(run_engine(demo, params), std::invalid_argument);
}

TEST_CASE("mmas accepts bounds being active from the first iteration") {
    Instance demo = demo8_instance();
    SolverParams params = default_params(Engine::mmas);
    params.iterations = 50;
    params.seed = 21;
    params.tau0 = 1e6;  // far above tau_max, must be clamped, not rejected
    RunReport r = run_engine(demo, params);
    CHECK(r.best.length == testutil::brute_force_length(demo));
}
