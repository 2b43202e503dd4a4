#include "doctest.h"

#include "gcs/abrams.hpp"
#include "gcs/homology.hpp"
#include "gcs/swiatkowski.hpp"

using namespace gcs;

TEST_CASE("Abrams complex of the Y graph") {
    auto A = build_abrams(build_family("y"), 2);
    CHECK(A.cx.count(0) == 6);
    CHECK(A.cx.count(1) == 6);
    CHECK(A.cx.count(2) == 0);
    CHECK(homology(A.cx).betti_vector() == std::vector<int64_t>{1, 1, 0});
}

TEST_CASE("Abrams complex of one edge") {
    auto A = build_abrams(build_family("star:1"), 1);
    CHECK(A.cx.cells == std::vector<int64_t>{2, 1});
}

TEST_CASE("Abrams rejects insufficient subdivision") {
    auto k4 = build_family("k4");
    CHECK_THROWS_AS(build_abrams(k4, 3), GraphError);
    try {
        build_abrams(k4, 3);
    } catch (const GraphError& e) {
        CHECK(std::string(e.what()).find("needs >= 2") != std::string::npos);
    }
}

TEST_CASE("Abrams boundary signs") {
    // path 1-2-3-4-5, cell {e(2,3), vertex 5}
    Graph g;
    for (auto s : {"1", "2", "3", "4", "5"}) g.add_vertex(s);
    for (int i = 0; i < 4; ++i) g.add_edge(i, i + 1);
    auto A = build_abrams(order_vertices(g, 0), 2);
    auto c = A.cell_of({4}, {1});
    auto faces = abrams_boundary(A, c);
    REQUIRE(faces.size() == 2);
    int64_t plus = 0, minus = 0;
    for (auto& [f, s] : faces) {
        auto idx = A.find(f);
        CHECK(idx >= 0);
        (s > 0 ? plus : minus) = idx;
        CHECK(std::abs(s) == 1);
    }
    CHECK(A.find(A.cell_of({1, 4}, {})) == plus);   // {2,5}
    CHECK(A.find(A.cell_of({2, 4}, {})) == minus);  // {3,5}
    CHECK(A.cx.check_dd() == -1);
}

TEST_CASE("Abrams 2-cells have four faces") {
    auto A = build_abrams(subdivide_for(build_family("k4"), 2), 2);
    REQUIRE(A.cx.count(2) > 0);
    auto faces = abrams_boundary(A, A.cells[2][0]);
    CHECK(faces.size() == 4);
    CHECK(A.cx.check_dd() == -1);
    // beta_1(Gamma) + 1 for a 3-connected planar graph
    CHECK(homology(A.cx).betti_vector() == std::vector<int64_t>{1, 4, 0});
}

TEST_CASE("Swiatkowski cell counts") {
    auto S = build_swiatkowski(build_family("theta:3"), 2);
    CHECK(S.cx.cells == std::vector<int64_t>{13, 24, 9});
    CHECK(S.cx.check_dd() == -1);
    auto T = build_swiatkowski(build_family("theta:3"), 3);
    CHECK(T.cx.euler() == -2);
}

TEST_CASE("Swiatkowski Y graph") {
    auto H = homology(build_swiatkowski(build_family("y"), 2).cx);
    CHECK(H.betti(1) == 1);
}

TEST_CASE("reduced at a vertex") {
    auto y = build_family("y");
    auto R = build_reduced_at(y, 1, y.vertex("c"));
    CHECK(R.cx.cells == std::vector<int64_t>{3, 2});
    auto H = homology(R.cx);
    CHECK(H.betti_vector() == std::vector<int64_t>{1, 0});
    CHECK_THROWS(build_reduced_at(y, 1, y.vertex("l1")));

    auto lasso = build_family("lasso");
    auto L = build_reduced_at(lasso, 2, lasso.vertex("2"));
    CHECK(homology(L.cx).betti(1) == 2);
}

TEST_CASE("reduced at a vertex keeps homology") {
    auto t = build_family("theta:3");
    for (int n : {2, 3})
        CHECK(homology(build_reduced_at(t, n, 0).cx).same_homology(homology(build_swiatkowski(t, n).cx)));
}

TEST_CASE("fully reduced complex keeps homology") {
    for (auto f : {"k4", "wheel:5", "theta:4", "lasso"}) {
        auto g = build_family(f);
        for (int n = 1; n <= 3; ++n) {
            auto a = homology(build_swiatkowski(g, n).cx);
            auto b = homology(build_fully_reduced(g, n).cx);
            CHECK(a.same_homology(b));
        }
    }
}

TEST_CASE("support") {
    auto y = build_family("y");
    auto c = SwChain::half(y, 0, 0) * SwChain::edge(y, 0, 2);
    auto s = support(y, c);
    CHECK(s.vertices == std::set<int>{0});
    CHECK(s.edges == std::set<int>{0});
    CHECK(support(y, SwChain(y.num_vertices(), y.num_edges())).empty());
}

TEST_CASE("Swiatkowski product needs disjoint vertices") {
    auto y = build_family("y");
    CHECK_THROWS(SwChain::vertex(y, 0) * SwChain::half(y, 0, 1));
}
