#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "starcover/graph.hpp"

using namespace starcover;

TEST_CASE("standard graphs") {
    const Graph k4 = complete_graph(4);
    CHECK(k4.vertex_count() == 4);
    CHECK(k4.edge_count() == 6);
    CHECK(k4.degrees() == std::vector<int>{3, 3, 3, 3});
    CHECK(cycle_graph(5).edge_count() == 5);
    CHECK(cube_graph().edge_count() == 12);
    CHECK(truncated_tetrahedron().vertex_count() == 12);
    CHECK(truncated_tetrahedron().edge_count() == 18);
    CHECK(is_connected(cube_graph()));
    CHECK(is_connected(Graph{}));
}

TEST_CASE("darts pair up and reverse") {
    Graph g(2);
    const int d = g.add_edge(0, 1);
    const int loop = g.add_edge(1, 1);
    CHECK(g.dart(d).pair == d + 1);
    CHECK(g.dart(d + 1).origin == 1);
    CHECK(g.dart(loop).pair == loop + 1);
    CHECK(g.loop_count() == 1);
    CHECK(g.degree(1) == 3);
    CHECK(g.invariant_violations().empty());
    const IntMatrix a = adjacency_matrix(g);
    CHECK(a(1, 1) == 2);
    CHECK(a(0, 1) == 1);
}

TEST_CASE("from_darts rejects broken pairings") {
    const Graph k3 = complete_graph(3);
    auto darts = k3.darts();
    CHECK_NOTHROW(Graph::from_darts(k3.labels(), darts));
    darts[0].pair = 2;
    CHECK_THROWS_AS(Graph::from_darts(k3.labels(), darts), std::invalid_argument);
    darts = k3.darts();
    darts[1].terminus = 2;
    CHECK_THROWS_AS(Graph::from_darts(k3.labels(), darts), std::invalid_argument);
}

TEST_CASE("JSON round trip keeps multiplicities and labels") {
    Graph g(3);
    g.set_label(0, "a");
    g.add_edge(0, 1);
    g.add_edge(0, 1);
    g.add_edge(2, 2);
    g.add_edge(1, 2);
    const Graph back = from_json(to_json(g));
    CHECK(back.label(0) == "a");
    CHECK(adjacency_matrix(back) == adjacency_matrix(g));
    CHECK(to_dot(g).find("graph G {") == 0);
}

TEST_CASE("JSON errors carry a location") {
    CHECK_THROWS_AS(from_json("{"), GraphFormatError);
    CHECK_THROWS_AS(from_json(R"({"vertices": []})"), GraphFormatError);
    try {
        from_json(R"({"vertices":[{"id":0}],"edges":[{"u":0,"v":7}]})");
        FAIL("expected an error");
    } catch (const GraphFormatError& e) {
        CHECK(e.where() == "/edges/0");
    }
    CHECK_THROWS_AS(from_json(R"({"vertices":[{"id":0},{"id":0}],"edges":[]})"), GraphFormatError);
}

TEST_CASE("isomorphism finds relabelings") {
    std::mt19937 rng(7);
    for (const Graph& g : {cube_graph(), truncated_tetrahedron(), complete_graph(5), cycle_graph(9)}) {
        std::vector<int> perm(g.vertex_count());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const Graph h = relabel(g, perm);
        CHECK(is_isomorphism(g, h, perm));
        const auto map = isomorphic(g, h);
        REQUIRE(map.has_value());
        CHECK(is_isomorphism(g, h, *map));
    }
}

TEST_CASE("isomorphism rejects same-degree non-isomorphic graphs") {
    // two disjoint K4s versus the cube: both 3-regular on 8 vertices
    Graph two_k4(8);
    for (int base : {0, 4}) {
        for (int i = 0; i < 4; ++i) {
            for (int j = i + 1; j < 4; ++j) {
                two_k4.add_edge(base + i, base + j);
            }
        }
    }
    CHECK_FALSE(isomorphic(two_k4, cube_graph()).has_value());
    CHECK_FALSE(is_connected(two_k4));
    CHECK_FALSE(isomorphic(cycle_graph(6), complete_graph(6)).has_value());
    // C6 versus two triangles
    Graph triangles(6);
    for (int base : {0, 3}) {
        triangles.add_edge(base, base + 1);
        triangles.add_edge(base + 1, base + 2);
        triangles.add_edge(base + 2, base);
    }
    CHECK_FALSE(isomorphic(cycle_graph(6), triangles).has_value());
}

TEST_CASE("multigraph isomorphism respects multiplicity") {
    Graph a(2), b(2);
    a.add_edge(0, 1);
    a.add_edge(0, 1);
    a.add_edge(0, 0);
    b.add_edge(1, 0);
    b.add_edge(1, 1);
    b.add_edge(0, 1);
    const auto map = isomorphic(a, b);
    REQUIRE(map.has_value());
    CHECK(*map == std::vector<int>{1, 0});
}

TEST_CASE("edge deletion") {
    const Graph g = delete_undirected_edge(complete_graph(4), 0, 1);
    CHECK(g.edge_count() == 5);
    CHECK(adjacency_matrix(g)(0, 1) == 0);
    CHECK_THROWS_AS(delete_undirected_edge(g, 0, 1), std::invalid_argument);
}
