#include "doctest.h"

#include "gcs/abrams.hpp"
#include "gcs/homology.hpp"
#include "gcs/swiatkowski.hpp"

using namespace gcs;

namespace {

ChainComplex rp2_like() {
    // one 0-cell, one 1-cell, one 2-cell attached by degree 2
    ChainComplex c;
    c.cells = {1, 1, 1};
    c.bd.resize(3);
    c.bd[1] = SparseMatrix::from_dense({{0}});
    c.bd[2] = SparseMatrix::from_dense({{2}});
    return c;
}

}  // namespace

TEST_CASE("smith normal form") {
    auto s = smith_normal_form(SparseMatrix::from_dense({{2, 4}, {6, 8}}));
    CHECK(s.rank == 2);
    CHECK(s.divisors == std::vector<int64_t>{2, 4});

    auto z = smith_normal_form(SparseMatrix::from_dense({{0, 0}, {0, 0}, {0, 0}}));
    CHECK(z.rank == 0);
    CHECK(z.divisors.empty());

    auto e = smith_normal_form(SparseMatrix::from_dense({{2, 0, 0}, {0, 3, 0}, {0, 0, 5}}));
    CHECK(e.divisors == std::vector<int64_t>{1, 1, 30});
}

TEST_CASE("smith normal form promotes past 64 bits") {
    // entries near 2^40 force intermediate products above int64
    int64_t a = (int64_t(1) << 40) + 15, b = (int64_t(1) << 40) + 21;
    auto s = smith_normal_form(SparseMatrix::from_dense({{a, b}, {b, a + 6}}));
    CHECK(s.rank == 2);
    CHECK(s.divisors.size() == 2);
}

TEST_CASE("torsion from a degree-2 attaching map") {
    auto H = homology(rp2_like());
    CHECK(H.betti(0) == 1);
    CHECK(H.betti(1) == 0);
    CHECK(H.torsion(1) == std::vector<int64_t>{2});
    CHECK(H.betti(2) == 0);
}

TEST_CASE("homology rejects a non-complex") {
    ChainComplex c;
    c.cells = {1, 1, 1};
    c.bd.resize(3);
    c.bd[1] = SparseMatrix::from_dense({{1}});
    c.bd[2] = SparseMatrix::from_dense({{1}});
    CHECK_THROWS_AS(homology(c), BoundaryError);
}

TEST_CASE("morse_reduce on the Y circle") {
    auto A = build_abrams(build_family("y"), 2);
    CHECK(A.cx.count(0) == 6);
    CHECK(A.cx.count(1) == 6);
    auto M = morse_reduce(A.cx);
    CHECK(M.count(0) == 1);
    CHECK(M.count(1) == 1);
    auto H = homology(M);
    CHECK(H.betti(0) == 1);
    CHECK(H.betti(1) == 1);
}

TEST_CASE("morse_reduce contracts an edge power") {
    auto S = build_swiatkowski(build_family("star:1"), 3);
    auto M = morse_reduce(S.cx);
    CHECK(M.total_cells() == 1);
}

TEST_CASE("solve_boundary") {
    auto S = build_swiatkowski(build_family("theta:3"), 2);
    Chain cell;
    cell.dim = 2;
    cell.add(0, 1);
    auto b = S.cx.boundary(cell);
    auto pre = solve_boundary(S.cx, b);
    REQUIRE(pre.has_value());
    CHECK(S.cx.boundary(*pre) == b);

    auto A = build_abrams(build_family("y"), 2);
    Chain loop;
    loop.dim = 1;
    auto z = kernel_basis(A.cx.bd[1]);
    REQUIRE(z.size() == 1);
    loop.terms = z[0];
    CHECK_FALSE(solve_boundary(A.cx, loop).has_value());
}

TEST_CASE("span_rank") {
    auto A = build_abrams(build_family("y"), 2);
    Chain loop;
    loop.dim = 1;
    loop.terms = kernel_basis(A.cx.bd[1])[0];
    CHECK(span_rank(A.cx, {}, 1) == 0);
    CHECK(span_rank(A.cx, {loop, loop * 3}, 1) == 1);
}

TEST_CASE("table cells through both models") {
    auto k4 = build_family("k4");
    auto A = build_abrams(subdivide_for(k4, 3), 3);
    auto HA = homology(A.cx);
    CHECK(HA.betti(2) == 3);
    CHECK(HA.torsion(2).empty());

    auto H = homology(build_fully_reduced(build_family("k33"), 4).cx);
    CHECK(H.betti(3) == 1);
    CHECK(H.betti(2) == 19);
}

TEST_CASE("Petersen torsion" * doctest::timeout(600)) {
    auto H = homology(build_fully_reduced(build_family("petersen:10"), 4).cx);
    CHECK(H.betti(2) == 40);
    CHECK(H.torsion(2) == std::vector<int64_t>{2});
}

TEST_CASE("json round trip of a complex") {
    auto S = build_swiatkowski(build_family("theta:3"), 2);
    auto c = ChainComplex::from_json(S.cx.dump_json());
    CHECK(c.cells == S.cx.cells);
    CHECK(homology(c).same_homology(homology(S.cx)));
}
