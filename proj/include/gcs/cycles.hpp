#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gcs/abrams.hpp"
#include "gcs/complex.hpp"
#include "gcs/graph.hpp"
#include "gcs/swiatkowski.hpp"

namespace gcs {

struct CycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class CycleKind { O, Y, Theta };

struct Dressing {
    std::vector<int> vertices;
    std::map<int, int> edges;  // edge -> multiplicity (Swiatkowski only)
    int particles() const;
};

struct CycleSpec {
    CycleKind kind = CycleKind::O;
    // O: closed walk (first vertex not repeated); Y: {hub}; Theta: {v, v'}
    std::vector<int> vertices;
    // O: walk edges; Y: three branches; Theta: four parallel edges i<j<k<l
    std::vector<int> edges;
    Dressing dressing;

    int carrier_particles() const;  // O 1, Y 2, Theta 3
    static CycleSpec O(const Graph& g, const std::vector<int>& walk, Dressing dr = {});
    static CycleSpec Y(const Graph& g, int hub, const std::vector<int>& branches, Dressing dr = {});
    static CycleSpec Theta(const Graph& g, int v, int w, const std::vector<int>& edges, Dressing dr = {});
    // {"kind":"Y","hub":"v2","branches":["e1","e2","e3"],"dressing":{"vertices":[],"edges":{"e4":1}}}
    static CycleSpec from_json(const Graph& g, const std::string& text);
};

// ---- Swiatkowski model: layout-free chains

// carrier chain without dressing
SwChain sw_carrier(const Graph& g, const CycleSpec& s);
SwChain sw_dressing(const Graph& g, const Dressing& d);
// checks disjointness and that the result is a cycle
SwChain make_cycle(const Graph& g, const CycleSpec& s);
SwChain product_cycle(const Graph& g, const std::vector<CycleSpec>& parts, const Dressing& dressing);
// c_{ijk} at v, indices are positions in the incidence list of v
SwChain y_cycle(const Graph& g, int v, int i, int j, int k);
// c_{ijkl} with Y-cycles at w
SwChain theta_cycle(const Graph& g, int v, int w, int i, int j, int k, int l);

// ---- Abrams model

using AbChain = std::vector<std::pair<AbramsCell, int64_t>>;
Chain make_cycle(const AbramsComplex& A, const CycleSpec& s);
Chain product_cycle(const AbramsComplex& A, const std::vector<CycleSpec>& parts, const Dressing& dressing);
AbChain abrams_carrier(const AbramsComplex& A, const CycleSpec& s);
AbChain abrams_product(const AbramsComplex& A, const AbChain& a, const AbChain& b);

// ---- relations

struct RelationReport {
    std::string name;
    bool holds = false;
    std::string level;  // "chain", "homology" or "none"
    std::string detail;
};

// y-ab, theta5, theta3, theta-dist, prod-rel
RelationReport verify_chain_identity(const std::string& name);
std::vector<std::string> relation_names();

// ---- product cycle enumeration for generation checks

struct Carrier {
    CycleSpec spec;
    std::vector<int> vertices;  // hub or cycle vertices
    std::vector<int> edges;
};

std::vector<Carrier> o_carriers(const Graph& g);
std::vector<Carrier> y_carriers(const Graph& g);
// carriers pairwise compatible: disjoint vertices, edges shared only by two Y carriers
bool compatible(const Carrier& a, const Carrier& b);

// all d-fold product cycles with every distribution of the free particles over
// the components left by the carriers
std::vector<SwChain> product_cycles(const Graph& g, int n, int d);

// span of the product d-cycles in H_d of the fully reduced complex
struct SpanReport {
    int64_t cycles = 0;
    int64_t span = 0;
    int64_t betti = 0;
};
SpanReport product_span(const Graph& g, int n, int d);

}  // namespace gcs
