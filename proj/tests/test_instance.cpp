#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "antkit/instance.hpp"
#include "oracle.hpp"

using namespace antkit;

TEST_CASE("euclidean rounding is half-up") {
    CHECK(euc2d_distance(0, 0, 3, 4) == 5);
    CHECK(euc2d_distance(0, 0, 1, 1) == 1);    // 1.414..
    CHECK(euc2d_distance(0, 0, 1.5, 0) == 2);  // exactly .5 rounds up
    CHECK(euc2d_distance(0, 0, 2.5, 0) == 3);
    CHECK(euc2d_distance(7, -3, 7, -3) == 0);
}

TEST_CASE("att metric rounds up when the rounded value falls short") {
    CHECK(att_distance(0, 0, 3, 4) == 2);   // r = 1.58.., t = 2, t >= r
    CHECK(att_distance(0, 0, 10, 0) == 4);  // r = 3.16.., t = 3, t < r
    CHECK(att_distance(5, 5, 5, 5) == 0);
}

TEST_CASE("explicit matrix fixture") {
    Instance demo = demo8_instance();
    CHECK(demo.n() == 8);
    CHECK(demo.name() == "demo8");
    CHECK(demo.metric() == Metric::explicit_matrix);
    CHECK(demo.distance(6, 7) == 14);
    CHECK(demo.distance(3, 4) == 20);
    CHECK(demo.distance(0, 0) == 0);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(demo.distance(i, j) == demo.distance(j, i));
}

TEST_CASE("from_matrix rejects malformed input") {
    CHECK_THROWS_AS(Instance::from_matrix("bad", 2, {0, 1, 2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_matrix("bad", 2, {0, 1, 1, 3}), std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_matrix("bad", 2, {0, -1, -1, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_matrix("bad", 2, {0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(Instance::from_matrix("bad", 1, {0}), std::invalid_argument);
}

TEST_CASE("parser accepts header variations") {
    // spaced and unspaced colons, reordered keys, blank lines, scientific
    // notation, indented coordinate rows, shuffled labels
    const char* text = R"(NAME: tiny3
COMMENT : three cities
TYPE : TSP
DIMENSION: 3
EDGE_WEIGHT_TYPE : EUC_2D
NODE_COORD_SECTION
 2 3.0e0 4.0
1 0 0
3 -3 -4
EOF
)";
    Instance inst = parse_tsplib_text(text);
    CHECK(inst.name() == "tiny3");
    CHECK(inst.n() == 3);
    CHECK(inst.metric() == Metric::euc2d);
    CHECK(inst.x(1) == 3.0);
    CHECK(inst.y(1) == 4.0);
    CHECK(inst.distance(0, 1) == 5);
    CHECK(inst.distance(0, 2) == 5);
    CHECK(inst.distance(1, 2) == 10);
}

TEST_CASE("parser accepts explicit full matrices and missing EOF") {
    const char* text = R"(NAME : m3
TYPE : TSP
DIMENSION : 3
EDGE_WEIGHT_TYPE : EXPLICIT
EDGE_WEIGHT_FORMAT : FULL_MATRIX
EDGE_WEIGHT_SECTION
0 2 7
2 0 4
7 4 0
)";
    Instance inst = parse_tsplib_text(text);
    CHECK(inst.n() == 3);
    CHECK(inst.metric() == Metric::explicit_matrix);
    CHECK(inst.distance(0, 2) == 7);
    CHECK(inst.distance(1, 2) == 4);
}

TEST_CASE("parser refuses what it cannot interpret") {
    CHECK_THROWS_AS(parse_tsplib_text("TYPE : TOUR\n"), ParseError);
    CHECK_THROWS_AS(parse_tsplib_text("NAME : x\nTYPE : TSP\nDIMENSION : 3\n"
                                      "EDGE_WEIGHT_TYPE : GEO\n"),
                    ParseError);
    // missing DIMENSION
    CHECK_THROWS_AS(parse_tsplib_text("TYPE : TSP\nEDGE_WEIGHT_TYPE : EUC_2D\n"
                                      "NODE_COORD_SECTION\n1 0 0\nEOF\n"),
                    ParseError);
    // truncated coordinate section
    CHECK_THROWS_AS(parse_tsplib_text("TYPE : TSP\nDIMENSION : 3\n"
                                      "EDGE_WEIGHT_TYPE : EUC_2D\n"
                                      "NODE_COORD_SECTION\n1 0 0\n2 1 1\nEOF\n"),
                    ParseError);
    // junk line
    CHECK_THROWS_AS(parse_tsplib_text("TYPE : TSP\nDIMENSION : 3\nwat\n"), ParseError);
    // duplicate label
    CHECK_THROWS_AS(parse_tsplib_text("TYPE : TSP\nDIMENSION : 2\n"
                                      "EDGE_WEIGHT_TYPE : EUC_2D\n"
                                      "NODE_COORD_SECTION\n1 0 0\n1 1 1\nEOF\n"),
                    ParseError);
    // asymmetric explicit matrix
    CHECK_THROWS_AS(parse_tsplib_text("TYPE : TSP\nDIMENSION : 2\n"
                                      "EDGE_WEIGHT_TYPE : EXPLICIT\n"
                                      "EDGE_WEIGHT_FORMAT : FULL_MATRIX\n"
                                      "EDGE_WEIGHT_SECTION\n0 1\n2 0\nEOF\n"),
                    ParseError);
    CHECK_THROWS_AS(parse_tsplib_file("/nonexistent/nowhere.tsp"), ParseError);
}

TEST_CASE("parse errors carry the offending line") {
    try {
        parse_tsplib_text("TYPE : TSP\nDIMENSION : 3\nwat\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        std::string msg = e.what();
        CHECK(msg.find("line 3") != std::string::npos);
        CHECK(msg.find("wat") != std::string::npos);
    }
}

TEST_CASE("bundled instances parse with the documented shapes") {
    Instance eil51 = parse_tsplib_file(testutil::data_path("eil51.tsp"));
    CHECK(eil51.name() == "eil51");
    CHECK(eil51.n() == 51);
    CHECK(eil51.metric() == Metric::euc2d);
    // city 1 at (37,52), city 2 at (49,49)
    CHECK(eil51.distance(0, 1) == 12);

    Instance att532 = parse_tsplib_file(testutil::data_path("att532.tsp"));
    CHECK(att532.n() == 532);
    CHECK(att532.metric() == Metric::att);

    // scientific-notation coordinates
    Instance pcb442 = parse_tsplib_file(testutil::data_path("pcb442.tsp"));
    CHECK(pcb442.n() == 442);

    // indented coordinate rows
    Instance rat783 = parse_tsplib_file(testutil::data_path("rat783.tsp"));
    CHECK(rat783.n() == 783);
}

TEST_CASE("serialization round-trips exactly") {
    Instance eil51 = parse_tsplib_file(testutil::data_path("eil51.tsp"));
    Instance again = parse_tsplib_text(to_tsplib(eil51));
    REQUIRE(again.n() == eil51.n());
    CHECK(again.name() == eil51.name());
    CHECK(again.metric() == eil51.metric());
    for (int i = 0; i < eil51.n(); ++i) {
        CHECK(again.x(i) == eil51.x(i));
        CHECK(again.y(i) == eil51.y(i));
    }

    // non-integer coordinates survive via shortest round-trip formatting
    Instance frac = Instance::from_coords("frac", Metric::euc2d,
                                          {0.1, 2.30000000000000004, -7.25},
                                          {9.999999999999999, 0.0, 1e-3});
    Instance frac2 = parse_tsplib_text(to_tsplib(frac));
    for (int i = 0; i < frac.n(); ++i) {
        CHECK(frac2.x(i) == frac.x(i));
        CHECK(frac2.y(i) == frac.y(i));
    }

    Instance demo2 = parse_tsplib_text(to_tsplib(demo8_instance()));
    CHECK(demo2.n() == 8);
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(demo2.distance(i, j) == demo8_instance().distance(i, j));
}

TEST_CASE("neighbor lists sort by distance then index") {
    Instance demo = demo8_instance();
    NeighborLists nl = nearest_neighbor_lists(demo, 3);
    REQUIRE(nl.size() == 8);
    // row 0 distances: 12,19,31,22,17,23,12 -> ties at 12 keep index order
    CHECK(nl[0] == std::vector<int>{1, 7, 5});

    NeighborLists full = nearest_neighbor_lists(demo, 100);
    CHECK(full[0].size() == 7);
    CHECK(full[0] == std::vector<int>{1, 7, 5, 2, 4, 6, 3});
}

TEST_CASE("distances stay exact beyond the matrix cache") {
    // same coordinates, one instance forced past the cache threshold via a
    // large n is impractical here; instead check the on-demand path by
    // comparing the two code paths on a coordinate instance
    antkit::Rng rng(7);
    Instance inst = testutil::random_euc_instance(rng, 40, "r40");
    for (int i = 0; i < inst.n(); ++i)
        for (int j = 0; j < inst.n(); ++j)
            CHECK(inst.distance(i, j) ==
                  euc2d_distance(inst.x(i), inst.y(i), inst.x(j), inst.y(j)));
}
