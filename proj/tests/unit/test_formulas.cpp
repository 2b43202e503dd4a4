#include "doctest.h"

#include <map>

#include "gcs/formulas.hpp"

using namespace gcs;

namespace {

int64_t v(const FormulaPrediction& p) {
    REQUIRE(p.value.has_value());
    return *p.value;
}

}  // namespace

TEST_CASE("binomial conventions") {
    CHECK(binom(0, 0) == 1);
    CHECK(binom(0, -1) == 0);
    CHECK(binom(-1, -1) == 1);
    CHECK(binom(6, 3) == 20);
    std::vector<std::string> flags;
    CHECK(binom(-2, 1, &flags) == 0);
    CHECK(flags.size() == 1);
}

TEST_CASE("tree and net") {
    CHECK(betti_tree_linear(3, 4, 2) == 3);
    for (int m = 1; m <= 4; ++m) CHECK(betti_tree_linear(m, 5, 0) == 1);
    CHECK(betti_net(4, 4, 2) == 6);
    CHECK(betti_net(3, 3, 3) == 0);
    CHECK(v(predict("net:4", 6, 2)) == 60);
}

TEST_CASE("K4") {
    CHECK(v(betti_K4(5, 2)) == 15);
    CHECK(v(betti_K4(9, 3)) == 80);
    CHECK(v(betti_K4(8, 4)) == 1);
    CHECK(v(betti_K4(9, 5)) == 0);
    CHECK_FALSE(betti_K4(5, 1).in_range());
    CHECK(v(predict("k4", 3, 2)) == 3);
}

TEST_CASE("K33") {
    CHECK(v(betti_K33(6, 3)) == 39);
    CHECK(v(betti_K33(8, 4)) == 15);
    CHECK(v(betti_K33(4, 2)) == 19);
}

TEST_CASE("wheels") {
    CHECK(v(betti_wheel(5, 6, 2)) == 46);
    CHECK(v(betti_wheel(6, 5, 3)) == 15);
    CHECK(v(betti_wheel(7, 7, 4)) == 24);
    CHECK(v(predict("wheel:7", 7, 3)) == 527);
    CHECK_THROWS_AS(betti_wheel(3, 4, 2), FormulaError);
}

TEST_CASE("groupings") {
    auto g72 = enumerate_groupings(7, 2);
    REQUIRE(g72.size() == 2);
    std::map<std::vector<int>, std::pair<int64_t, int>> m;
    for (auto& g : g72) m[g.groups] = {g.count, g.mu};
    CHECK(m[{1, 1}] == std::pair<int64_t, int>{9, 4});
    CHECK(m[{2}] == std::pair<int64_t, int>{6, 3});

    auto g54 = enumerate_groupings(5, 4);
    REQUIRE(g54.size() == 1);
    CHECK(g54[0].groups == std::vector<int>{4});
    CHECK(g54[0].count == 1);
    CHECK(g54[0].mu == 4);

    std::map<std::vector<int>, std::pair<int64_t, int>> m63;
    for (auto& g : enumerate_groupings(6, 3)) m63[g.groups] = {g.count, g.mu};
    CHECK(m63.size() == 2);
    CHECK(m63[{2, 1}] == std::pair<int64_t, int>{5, 5});
    CHECK(m63[{3}] == std::pair<int64_t, int>{5, 4});
    CHECK_THROWS(enumerate_groupings(5, 5));
}

TEST_CASE("star first Betti numbers") {
    CHECK(star_beta1(3, 2) == 1);
    for (int mu = 3; mu <= 6; ++mu) CHECK(star_beta1(mu, 1) == 0);
    CHECK(star_beta1(4, 3) == 11);  // engine fixture
    CHECK(star_beta1(6, 6) == 799);
}

TEST_CASE("K_{2,p}") {
    auto a = k2p_values(4, 3);
    CHECK(a.beta2 == 1);
    CHECK(a.beta2_n3 == 1);
    CHECK(a.euler == -4);
    CHECK(k2p_values(3, 3).euler == -2);
    CHECK(k2p_values(5, 3).beta2_n3 == 4);
    auto t = predict("theta:4", 3, 1);
    CHECK(v(t) == 6);
    CHECK_FALSE(t.flags.empty());
}

TEST_CASE("prediction json") {
    auto j = predict("k33", 4, 3).to_json();
    CHECK(j.find("\"betti\":1") != std::string::npos);
    CHECK(j.find("provenance") != std::string::npos);
    CHECK(predict("k4", 5, 1).to_json().find("\"1\":\"out-of-range\"") != std::string::npos);
}
