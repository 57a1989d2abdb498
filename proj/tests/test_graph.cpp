#include "randic/graph.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "randic/errors.hpp"
#include "test_util.hpp"

using namespace randic;

TEST_CASE("graph construction validates edges") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);  // duplicate
    Graph g(3, {{2, 0}, {0, 1}});
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}});
    CHECK(g.degree(0) == 2);
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(1, 2));
}

TEST_CASE("make_cycle") {
    Graph c3 = make_cycle(3);
    CHECK(c3.vertex_count() == 3);
    CHECK(c3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(c3.degree(v) == 2);

    Graph c4 = make_cycle(4);
    CHECK(c4.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(c4.regularity() == 2);
    CHECK(c4.is_connected());

    CHECK_THROWS_AS(make_cycle(2), std::invalid_argument);
}

TEST_CASE("make_dutch_windmill counts and degrees") {
    Graph d42 = make_dutch_windmill(4, 2);
    CHECK(d42.vertex_count() == 7);
    CHECK(d42.edge_count() == 8);
    CHECK(d42.degree(0) == 4);

    Graph d31 = make_dutch_windmill(3, 1);
    CHECK(d31 == make_cycle(3));

    Graph d53 = make_dutch_windmill(5, 3);
    CHECK(d53.vertex_count() == 13);
    CHECK(d53.edge_count() == 15);

    for (int m = 3; m <= 12; ++m) {
        for (int n = 1; n <= 12; ++n) {
            Graph d = make_dutch_windmill(m, n);
            CHECK(d.vertex_count() == (m - 1) * n + 1);
            CHECK(d.edge_count() == m * n);
            CHECK(d.degree(0) == 2 * n);
            for (int v = 1; v < d.vertex_count(); ++v) CHECK(d.degree(v) == 2);
            CHECK(d.is_connected());
        }
    }

    CHECK(make_friendship(5) == make_dutch_windmill(3, 5));
    CHECK_THROWS_AS(make_dutch_windmill(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(make_dutch_windmill(3, 0), std::invalid_argument);
}

TEST_CASE("make_complete_bipartite_minus_edge") {
    Graph p4 = make_complete_bipartite_minus_edge(2, 2);
    CHECK(p4.vertex_count() == 4);
    CHECK(p4.edge_count() == 3);
    std::vector<int> degs = p4.degrees();
    std::sort(degs.begin(), degs.end());
    CHECK(degs == std::vector<int>{1, 1, 2, 2});  // a path
    CHECK(p4.is_connected());

    CHECK(make_complete_bipartite_minus_edge(2, 3).vertex_count() == 5);
    CHECK(make_complete_bipartite_minus_edge(2, 3).edge_count() == 5);
    CHECK(make_complete_bipartite_minus_edge(3, 3).edge_count() == 8);

    CHECK_THROWS_AS(make_complete_bipartite_minus_edge(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_complete_bipartite_minus_edge(2, 1), std::invalid_argument);
}

TEST_CASE("make_petersen matches the printed matrix") {
    Graph p = make_petersen();
    CHECK(p.vertex_count() == 10);
    CHECK(p.edge_count() == 15);
    CHECK(p.neighbors(0) == std::vector<int>{1, 4, 5});
    for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
    // Full printed adjacency, row by row.
    const int want[10][10] = {
        {0, 1, 0, 0, 1, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0, 1, 0, 0, 0},
        {0, 1, 0, 1, 0, 0, 0, 1, 0, 0}, {0, 0, 1, 0, 1, 0, 0, 0, 1, 0},
        {1, 0, 0, 1, 0, 0, 0, 0, 0, 1}, {1, 0, 0, 0, 0, 0, 0, 1, 1, 0},
        {0, 1, 0, 0, 0, 0, 0, 0, 1, 1}, {0, 0, 1, 0, 0, 1, 0, 0, 0, 1},
        {0, 0, 0, 1, 0, 1, 1, 0, 0, 0}, {0, 0, 0, 0, 1, 0, 1, 1, 0, 0}};
    auto a = p.adjacency();
    for (int i = 0; i < 10; ++i)
        for (int j = 0; j < 10; ++j) CHECK(a[i][j] == want[i][j]);
}

TEST_CASE("disjoint_union") {
    Graph two_triangles = disjoint_union({make_cycle(3), make_cycle(3)});
    CHECK(two_triangles.vertex_count() == 6);
    CHECK(two_triangles.edge_count() == 6);
    CHECK(two_triangles.regularity() == 2);
    CHECK_FALSE(two_triangles.is_connected());

    Graph g = make_petersen();
    CHECK(disjoint_union({g}) == g);
    CHECK_THROWS_AS(disjoint_union({}), std::invalid_argument);

    // Degree sequence of a union is the concatenation of the inputs'.
    Graph a = make_cycle(5), b = make_complete_bipartite_minus_edge(2, 3);
    Graph u = disjoint_union({a, b});
    std::vector<int> expect = a.degrees();
    expect.insert(expect.end(), b.degrees().begin(), b.degrees().end());
    CHECK(u.degrees() == expect);
}

TEST_CASE("graph6 encoding") {
    CHECK(graph6_encode(make_cycle(3)) == "Bw");
    CHECK(graph6_decode("Bw") == make_cycle(3));
    CHECK(graph6_decode(graph6_encode(make_petersen())) == make_petersen());

    CHECK_THROWS_AS(graph6_encode(Graph(63)), std::invalid_argument);  // small format only
    CHECK_THROWS_AS(graph6_decode(""), ParseError);
    CHECK_THROWS_AS(graph6_decode("B"), ParseError);        // truncated
    CHECK_THROWS_AS(graph6_decode("Bw~"), ParseError);      // trailing garbage
    CHECK_THROWS_AS(graph6_decode("\x1f"), ParseError);     // char below range
    CHECK_THROWS_AS(graph6_decode("~??"), ParseError);      // long format
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 500; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = test::random_graph(rng, n, 0.4);
        Graph back = graph6_decode(graph6_encode(g));
        CHECK(back == g);
    }
}

TEST_CASE("format_adjacency") {
    CHECK(format_adjacency(make_cycle(3)) == "0 1 1\n1 0 1\n1 1 0\n");
}
