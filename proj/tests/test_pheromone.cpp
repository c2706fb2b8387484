#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <string>
#include <vector>

#include "antkit/pheromone.hpp"
#include "antkit/instance.hpp"
#include "antkit/tour.hpp"
#include "oracle.hpp"

using namespace antkit;

TEST_CASE("store starts uniform and is symmetric by construction") {
    PheromoneStore store(6, 0.25);
    CHECK(store.size() == 6);
    CHECK(store.tau0() == 0.25);
    for (int r = 0; r < 6; ++r)
        for (int s = 0; s < 6; ++s)
            if (r != s) CHECK(store.get(r, s) == 0.25);

    store.set(2, 5, 1.5);
    CHECK(store.get(5, 2) == 1.5);
    CHECK(store.get(2, 5) == 1.5);
    CHECK(store.get(2, 4) == 0.25);

    CHECK_THROWS_AS(PheromoneStore(6, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(PheromoneStore(6, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(PheromoneStore(1, 1.0), std::invalid_argument);
}

TEST_CASE("ant-system global update: evaporation everywhere, deposits on tour edges") {
    Instance demo = demo8_instance();
    PheromoneStore store(8, 1.0);
    Tour t = make_tour(demo, {0, 1, 2, 3, 4, 5, 6, 7});
    std::vector<Tour> ants{t};
    as_global_update(store, ants, 0.5);

    double bonus = 1.0 / static_cast<double>(t.length);
    CHECK(store.get(0, 1) == doctest::Approx(0.5 + bonus).epsilon(1e-15));
    CHECK(store.get(7, 0) == doctest::Approx(0.5 + bonus).epsilon(1e-15));  // closing edge
    CHECK(store.get(0, 2) == 0.5);  // off-tour: evaporation only

    // two ants stack their deposits on a shared edge
    PheromoneStore store2(8, 1.0);
    Tour u = make_tour(demo, {0, 1, 3, 2, 5, 4, 7, 6});
    std::vector<Tour> both{t, u};
    as_global_update(store2, both, 0.5);
    CHECK(store2.get(0, 1) ==
          doctest::Approx(0.5 + 1.0 / t.length + 1.0 / u.length).epsilon(1e-15));
}

TEST_CASE("local update decays toward tau0") {
    PheromoneStore store(4, 0.5);
    store.set(0, 1, 2.0);
    local_update(store, 0, 1, 0.1, 0.5);
    CHECK(store.get(0, 1) == doctest::Approx(0.9 * 2.0 + 0.1 * 0.5).epsilon(1e-15));
    for (int i = 0; i < 200; ++i) local_update(store, 0, 1, 0.1, 0.5);
    CHECK(store.get(0, 1) == doctest::Approx(0.5).epsilon(1e-9));
    // tau0 itself is a fixed point
    local_update(store, 2, 3, 0.1, 0.5);
    CHECK(store.get(2, 3) == 0.5);
}

TEST_CASE("best-tour reinforcement touches only the best tour's edges") {
    Instance demo = demo8_instance();
    PheromoneStore store(8, 1.0);
    Tour best = make_tour(demo, {0, 1, 2, 3, 4, 5, 6, 7});
    best_tour_update(store, best, 0.1);
    double expect = 0.9 * 1.0 + 0.1 / static_cast<double>(best.length);
    CHECK(store.get(0, 1) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(store.get(7, 0) == doctest::Approx(expect).epsilon(1e-15));
    CHECK(store.get(0, 2) == 1.0);
}

TEST_CASE("trail bounds derive from the best length and clamp everything") {
    PheromoneStore store(10, 5.0);
    CHECK_FALSE(store.has_bounds());
    set_mmas_bounds(store, 100, 0.02);
    REQUIRE(store.has_bounds());
    CHECK(store.tau_max() == doctest::Approx(1.0 / (0.02 * 100)).epsilon(1e-15));
    CHECK(store.tau_min() == doctest::Approx(store.tau_max() / 20.0).epsilon(1e-15));
    // the old uniform 5.0 exceeded tau_max and was clamped
    CHECK(store.get(0, 1) == doctest::Approx(store.tau_max()).epsilon(1e-15));

    store.set(0, 1, 1e9);
    CHECK(store.get(0, 1) == store.tau_max());
    store.set(0, 1, 0.0);
    CHECK(store.get(0, 1) == store.tau_min());
    store.scale_all(1e-12);
    CHECK(store.get(4, 7) == store.tau_min());

    CHECK_THROWS_AS(store.set_bounds(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(store.set_bounds(2.0, 1.0), std::invalid_argument);
}

TEST_CASE("symmetry and bound containment survive a random operation storm") {
    const int n = 30;
    PheromoneStore store(n, 1.0);
    set_mmas_bounds(store, 500, 0.05);
    Rng rng(99);
    Instance inst = testutil::random_matrix_instance(rng, n, "storm");

    for (int op = 0; op < 100000; ++op) {
        int r = uniform_int(rng, 0, n - 1);
        int s = uniform_int(rng, 0, n - 2);
        if (s >= r) ++s;
        switch (op % 4) {
            case 0: store.set(r, s, uniform_unit(rng) * 10.0); break;
            case 1: local_update(store, r, s, 0.3, store.tau0()); break;
            case 2: store.set(r, s, store.get(r, s) + uniform_unit(rng)); break;
            case 3: store.scale_all(0.999); break;
        }
    }
    int checked = 0;
    for (int r = 0; r < n; ++r) {
        for (int s = r + 1; s < n; ++s) {
            CHECK(store.get(r, s) == store.get(s, r));
            bool inside = store.get(r, s) >= store.tau_min() &&
                          store.get(r, s) <= store.tau_max();
            CHECK(inside);
            ++checked;
        }
    }
    CHECK(checked == n * (n - 1) / 2);
}

TEST_CASE("debug dump lists the upper triangle with 1-based labels") {
    PheromoneStore store(3, 0.5);
    std::string csv = store.debug_csv();
    CHECK(csv == "r,s,tau\n1,2,0.5\n1,3,0.5\n2,3,0.5\n");
}
