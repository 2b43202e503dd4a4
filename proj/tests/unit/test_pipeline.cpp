#include "doctest.h"

#include "gcs/pipeline.hpp"
#include "gcs/suites.hpp"

using namespace gcs;

TEST_CASE("parse_dims") {
    CHECK(parse_dims("2") == std::pair<int, int>{2, 2});
    CHECK(parse_dims("1-3") == std::pair<int, int>{1, 3});
    CHECK(parse_dims("3,2") == std::pair<int, int>{2, 3});
    CHECK_THROWS(parse_dims("x"));
}

TEST_CASE("config validation") {
    RunConfig c;
    c.graph = "k4";
    c.n = 0;
    CHECK_THROWS(c.validate());
    c.n = 2;
    c.model = "cube";
    CHECK_THROWS(c.validate());
    c.model = "abrams";
    c.dmin = 3, c.dmax = 1;
    CHECK_THROWS(c.validate());
}

TEST_CASE("compute wheel:5 n=5") {
    RunConfig c;
    c.graph = "wheel:5";
    c.n = 5;
    auto r = compute(c);
    CHECK_FALSE(r.aborted);
    CHECK(r.H.betti(2) == 34);
    CHECK(r.H.betti(3) == 4);
    for (const auto& d : r.H.dims) CHECK(d.torsion.empty());
    CHECK(r.euler_consistent);
}

TEST_CASE("compute theta:4 n=3") {
    RunConfig c;
    c.graph = "theta:4";
    c.n = 3;
    CHECK(compute(c).H.betti_vector() == std::vector<int64_t>{1, 6, 1});
}

TEST_CASE("json output is deterministic apart from the timing field") {
    RunConfig c;
    c.graph = "k33";
    c.n = 3;
    c.dmin = 1, c.dmax = 2;
    auto strip = [](std::string s) { return s.substr(0, s.find("\"elapsed_ms\"")); };
    auto a = compute(c).to_json(), b = compute(c).to_json();
    CHECK(strip(a) == strip(b));
    CHECK(a.find("\"2\":{\"betti\":8,\"torsion\":[]}") != std::string::npos);
}

TEST_CASE("abrams subdivides automatically") {
    RunConfig c;
    c.graph = "k4";
    c.model = "abrams";
    c.n = 3;
    auto r = compute(c);
    CHECK(r.subdivision == 2);
    CHECK(r.H.betti(2) == 3);
    c.subdivide = false;
    CHECK_THROWS(compute(c));
}

TEST_CASE("resource limits mark the result as aborted") {
    RunConfig c;
    c.graph = "k5";
    c.n = 4;
    c.max_cells = 100;
    auto r = compute(c);
    CHECK(r.aborted);
    CHECK(r.to_json().find("\"aborted\":true") != std::string::npos);
}

TEST_CASE("reduce flag does not change the answer") {
    RunConfig c;
    c.graph = "lasso";
    c.n = 3;
    auto a = compute(c);
    c.reduce = false;
    auto b = compute(c);
    CHECK(a.H.same_homology(b.H));
}

TEST_CASE("run_tasks keeps task order") {
    std::vector<RowTask> tasks;
    for (int i = 0; i < 20; ++i)
        tasks.push_back([i] { return std::vector<CheckRow>{CheckRow{"row " + std::to_string(i), "", "x", "x", true}}; });
    auto r = run_tasks("order", tasks, 4);
    REQUIRE(r.rows.size() == 20);
    for (int i = 0; i < 20; ++i) CHECK(r.rows[i].id == "row " + std::to_string(i));
    CHECK(r.ok());
}

TEST_CASE("unknown suite") { CHECK_THROWS(run_suite("nope")); }
