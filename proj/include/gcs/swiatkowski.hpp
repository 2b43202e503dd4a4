#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "gcs/complex.hpp"
#include "gcs/graph.hpp"

namespace gcs {

// Full: states {empty, v, h_0..h_{d-1}}; Reduced: {empty, h_j - h_ref for j != ref}
enum class VMode : uint8_t { Full, Reduced };

struct SwLayout {
    Graph g;
    std::vector<VMode> mode;
    std::vector<int> ref;      // reference half-edge per vertex (Reduced)
    std::vector<int> nstates;  // per vertex

    static SwLayout canonical(const Graph& g);
    static SwLayout reduced_at(const Graph& g, int v, int ref = 0);
    static SwLayout fully_reduced(const Graph& g, const std::vector<int>& refs = {});

    // state code -> half-edge index it is built on (-1 for empty / vertex)
    int half_of(int v, int s) const;
    bool is_half(int v, int s) const { return half_of(v, s) >= 0; }
    // state code for half-edge j (Full) or difference h_j - h_ref (Reduced)
    int state_of_half(int v, int j) const;
    int vertex_state(int v) const { return mode[v] == VMode::Full ? 1 : -1; }
    int top_dim() const;

private:
    void finish();
};

struct SwCell {
    std::vector<uint8_t> st;     // per vertex state code
    std::vector<uint16_t> mono;  // per edge occupation
    int dim(const SwLayout& L) const;
    int particles() const;
};

// perfect integer keys for cells with at most n particles
class SwIndexer {
public:
    SwIndexer() = default;
    SwIndexer(const SwLayout& L, int n);
    uint64_t key(const SwCell& c) const;
    uint64_t mono_rank(const std::vector<uint16_t>& m) const;
    int n() const { return n_; }

private:
    int n_ = 0;
    int E_ = 0;
    std::vector<std::vector<uint64_t>> binom_;
    std::vector<uint64_t> radix_;  // mixed radix weight per vertex
    uint64_t M_ = 1;
    uint64_t total_ = 1;
    uint64_t C(int a, int b) const;

public:
    uint64_t key_space() const;  // number of distinct keys
};

struct SwComplex {
    SwLayout layout;
    int n = 0;
    int max_dim = -1;
    ChainComplex cx;
    std::vector<std::vector<SwCell>> cells;  // per dimension
    std::vector<std::unordered_map<uint64_t, int32_t>> index;
    SwIndexer idx;

    SwComplex() = default;
    SwComplex(const SwComplex&) = delete;
    SwComplex& operator=(const SwComplex&) = delete;
    SwComplex(SwComplex&&) = default;
    SwComplex& operator=(SwComplex&&) = default;

    int64_t find(const SwCell& c) const;  // -1 when absent
    std::string name(int d, int64_t i) const;
};

// boundary of one cell as (cell, coefficient) pairs, shared by all builders
void sw_boundary(const SwLayout& L, const SwCell& c, std::vector<std::pair<SwCell, int64_t>>& out);

SwComplex build_sw(const SwLayout& L, int n, int max_dim = -1);
SwComplex build_swiatkowski(const Graph& g, int n, int max_dim = -1);
SwComplex build_reduced_at(const Graph& g, int n, int v, int max_dim = -1);
SwComplex build_fully_reduced(const Graph& g, int n, int max_dim = -1);

// ---------------------------------------------------------------- algebra
// layout-free elements of S(G): per vertex -1 empty, -2 vertex, j >= 0 half-edge j

struct SwTerm {
    std::vector<int16_t> st;
    std::vector<int16_t> mono;
    auto operator<=>(const SwTerm&) const = default;
    int dim() const;
    int particles() const;
};

class SwChain {
public:
    std::map<SwTerm, int64_t> terms;
    int nv = 0, ne = 0;

    SwChain() = default;
    SwChain(int nv_, int ne_) : nv(nv_), ne(ne_) {}
    static SwChain one(const Graph& g);
    static SwChain edge(const Graph& g, int e, int power = 1);
    static SwChain vertex(const Graph& g, int v);
    static SwChain half(const Graph& g, int v, int j);
    // h_j - h_k at v
    static SwChain diff(const Graph& g, int v, int j, int k);

    bool empty() const { return terms.empty(); }
    int dim() const;  // -1 when empty
    void add(const SwTerm& t, int64_t c);
    SwChain& operator+=(const SwChain& o);
    SwChain& operator-=(const SwChain& o);
    SwChain operator+(const SwChain& o) const { SwChain r = *this; return r += o; }
    SwChain operator-(const SwChain& o) const { SwChain r = *this; return r -= o; }
    SwChain operator*(int64_t s) const;
    // graded product with the Koszul sign; throws if both factors use a vertex
    SwChain operator*(const SwChain& o) const;
    bool operator==(const SwChain& o) const { return terms == o.terms; }
    SwChain boundary(const Graph& g) const;
};

// expresses a layout-free chain in the basis of a built complex; throws
// when it does not lie in that (possibly reduced) complex
Chain to_chain(const SwComplex& S, const SwChain& c);
SwChain from_chain(const SwComplex& S, const Chain& c);
// the cell written in half-edges (differences expanded)
SwChain expand_cell(const SwLayout& L, const SwCell& c);

struct Support {
    std::set<int> vertices;
    std::set<int> edges;
    bool operator==(const Support& o) const { return vertices == o.vertices && edges == o.edges; }
    bool empty() const { return vertices.empty() && edges.empty(); }
};

Support support(const Graph& g, const SwChain& c);

}  // namespace gcs
