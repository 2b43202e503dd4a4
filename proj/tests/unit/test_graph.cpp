#include <algorithm>
#include <tuple>

#include "doctest.h"

#include "gcs/graph.hpp"

using namespace gcs;

namespace {

bool regular(const Graph& g, int k) {
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != k) return false;
    return true;
}

}  // namespace

TEST_CASE("family sizes") {
    auto w = build_family("wheel:5");
    CHECK(w.num_vertices() == 5);
    CHECK(w.num_edges() == 8);
    auto t = build_family("theta:4");
    CHECK(t.num_vertices() == 2);
    CHECK(t.num_edges() == 4);
    auto p = build_family("petersen:10");
    CHECK(p.num_vertices() == 10);
    CHECK(p.num_edges() == 15);
    CHECK(regular(p, 3));
    CHECK(build_family("k33").essential_count() == 6);
    CHECK(build_family("petersen_family:K331").num_vertices() == 7);
    CHECK(build_family("complete_bipartite:4,4").num_edges() == 16);
}

TEST_CASE("family errors") {
    CHECK_THROWS_AS(build_family("wheel:3"), GraphError);
    CHECK_THROWS_AS(build_family("dodecahedron"), GraphError);
    CHECK_THROWS_AS(build_family("petersen:11"), GraphError);
}

TEST_CASE("build_family is deterministic") {
    CHECK(build_family("petersen:9") == build_family("petersen:9"));
    CHECK(build_family("wheel:7").to_json() == build_family("wheel:7").to_json());
    auto g = build_family("lasso");
    CHECK(Graph::from_json(g.to_json()) == g);
}

TEST_CASE("subdivide_for") {
    auto y = build_family("y");
    CHECK(subdivide_for(y, 2) == y);
    CHECK(sufficiency_violation(y, 2).empty());

    auto k4 = build_family("k4");
    CHECK_FALSE(sufficiency_violation(k4, 3).empty());
    auto s = subdivide_for(k4, 3);
    CHECK(subdivision_factor(k4, 3) == 2);
    CHECK(s.num_edges() == 12);
    CHECK(sufficiency_violation(s, 3).empty());
    CHECK(shortest_cycle(s).edges.size() == 6);

    auto k23 = build_family("complete_bipartite:2,3");
    CHECK(subdivide_for(k23, 2) == k23);
}

TEST_CASE("vertex order on the Y graph") {
    auto y = build_family("y");
    auto og = order_vertices(y, y.vertex("l1"));
    CHECK(og.label[y.vertex("l1")] == 1);
    CHECK(og.label[y.vertex("c")] == 2);
    CHECK(og.label[y.vertex("l2")] == 3);
    CHECK(og.label[y.vertex("l3")] == 4);
}

TEST_CASE("vertex order on a path") {
    Graph g;
    g.add_edge(g.add_vertex("a"), g.add_vertex("b"));
    g.add_edge(1, g.add_vertex("c"));
    auto og = order_vertices(g, 0);
    CHECK(og.label == std::vector<int>{1, 2, 3});
    CHECK_THROWS(order_vertices(g, 7));
    Graph two;
    two.add_vertex("a");
    two.add_vertex("b");
    CHECK_THROWS(order_vertices(two, 0));
}

TEST_CASE("vertex order on the lasso") {
    auto g = build_family("lasso");
    auto og = order_vertices(g, g.vertex("1"));
    // edges named by (tau, iota) labels: 1-2, 2-3, 3-4, 2-4
    std::vector<std::pair<int, int>> names;
    for (int e = 0; e < g.num_edges(); ++e) names.push_back({og.label[og.tau[e]], og.label[og.iota[e]]});
    std::sort(names.begin(), names.end());
    CHECK(names == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}, {2, 4}, {3, 4}});
}
