#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gcs/complex.hpp"
#include "gcs/graph.hpp"
#include "gcs/swiatkowski.hpp"

namespace gcs {

struct BlowupContext {
    Graph g;
    int v = -1;
    int ref = 0;              // reference half-edge h_0 at v
    Graph gv;                 // incident edges detached to new leaves "v~<edge>"
    std::vector<int> vmap;    // vertex of g -> vertex of gv (-1 for v)
    std::vector<int> leaves;  // half-edge j at v -> its leaf in gv
    int degree() const { return g.degree(v); }
};

// v needs degree >= 2 (turning a net into a tree blows up a degree-2 vertex)
BlowupContext blowup(const Graph& g, int v, int ref = 0);

// the three complexes of the short exact sequence at particle number n
struct BlowupComplexes {
    SwComplex tilde;  // S~^v_n(g)
    SwComplex sn;     // S_n(gv)
    SwComplex sn1;    // S_{n-1}(gv)
};
BlowupComplexes blowup_complexes(const BlowupContext& ctx, int n, int max_dim = -1);

// S_n(gv) -> S~: the cells with v empty
Chain phi(const BlowupContext& ctx, const BlowupComplexes& B, const Chain& b);
// S~ -> one copy of S_{n-1}(gv) per non-reference half-edge (indexed by half-edge, the
// reference slot stays empty); lowers the dimension by one
std::vector<Chain> psi(const BlowupContext& ctx, const BlowupComplexes& B, const Chain& b);

struct ExactnessReport {
    bool phi_injective = false;
    bool psi_surjective = false;
    bool exact_middle = false;  // im phi = ker psi
    bool phi_chain_map = false;
    bool psi_chain_map = false;
    bool ok() const { return phi_injective && psi_surjective && exact_middle && phi_chain_map && psi_chain_map; }
};
ExactnessReport check_exactness(const BlowupContext& ctx, int n);

struct DeltaReport {
    int n = 0, d = 0;
    int64_t beta_tilde = 0;      // beta_d(S~^v_n)
    int64_t beta_n = 0;          // beta_d(S_n(gv))
    int64_t beta_n1 = 0;         // beta_d(S_{n-1}(gv))
    int64_t beta_n1_below = 0;   // beta_{d-1}(S_{n-1}(gv))
    int64_t rank_delta = 0;      // rk delta_{n,d}
    int64_t rank_delta_below = 0;
    int64_t predicted = 0;       // rk coker delta_{n,d} + rk ker delta_{n,d-1}
    bool holds = false;
    bool injective = false;      // delta_{n,d} injective
};
DeltaReport delta_rank_check(const BlowupContext& ctx, int n, int d);

}  // namespace gcs
