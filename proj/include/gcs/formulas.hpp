#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gcs {

struct FormulaError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FormulaPrediction {
    std::string family;
    int n = 0, d = 0;
    std::optional<int64_t> value;  // empty: out of range
    std::string provenance;
    std::vector<std::string> flags;  // e.g. a negative binomial outside the stated conventions

    bool in_range() const { return value.has_value(); }
    // {"family":..,"n":..,"dims":{"d":{"betti":v,"torsion":[]}},"provenance":..}
    std::string to_json() const;
};

// C(a, b) with C(0,0)=1, C(0,-1)=0, C(-1,-1)=1; any other negative case is 0
// and pushes a flag
int64_t binom(int64_t a, int64_t b, std::vector<std::string>* flags = nullptr);

int64_t betti_tree_linear(int m, int n, int d);
int64_t betti_net(int m, int n, int d);
FormulaPrediction betti_K4(int n, int d);
FormulaPrediction betti_K33(int n, int d);
FormulaPrediction betti_wheel(int m, int n, int d);

struct Grouping {
    std::vector<int> groups;  // run lengths, descending
    int64_t count = 0;        // N
    int mu = 0;
};
// k of the m-1 perimeter Y-subgraphs chosen; grouped by circular runs
std::vector<Grouping> enumerate_groupings(int m, int k);

// first Betti number of C_n(S_mu), computed by the engine and memoized
int64_t star_beta1(int mu, int n);
// Y_h-cycles on a fan with mu leaves and `spokes` spokes
int64_t fan_y_count(int mu, int spokes, int n);

struct K2pValues {
    int p = 0, n = 0;
    int64_t euler = 0;
    int64_t beta1_lemma = 0;          // p(p-1)
    int64_t beta1_chi_consistent = 0;  // p(p-1)/2
    int64_t beta2 = 0;
    int64_t beta2_n3 = 0;  // C(p-1, 3)
};
K2pValues k2p_values(int p, int n);

// dispatch on a family DSL string: wheel:m, k4, k33, complete_bipartite:2,p, theta:p,
// linear_tree:m, net:m
FormulaPrediction predict(const std::string& family, int n, int d);

}  // namespace gcs
