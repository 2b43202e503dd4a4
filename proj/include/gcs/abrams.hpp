#pragma once

#include <cstdint>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "gcs/complex.hpp"
#include "gcs/graph.hpp"

namespace gcs {

// items 0..V-1 are vertices by label-1, V.. are edges ranked by (tau, iota) labels
struct AbramsCell {
    std::vector<int> items;  // sorted
};

struct AbramsComplex {
    OrderedGraph og;
    int n = 0;
    ChainComplex cx;
    std::vector<std::vector<AbramsCell>> cells;
    std::vector<std::unordered_map<uint64_t, int32_t>> index;
    std::vector<int> edge_of_item;  // item - V -> edge id
    std::vector<int> item_of_edge;  // edge id -> item

    AbramsComplex() = default;
    AbramsComplex(const AbramsComplex&) = delete;
    AbramsComplex& operator=(const AbramsComplex&) = delete;
    AbramsComplex(AbramsComplex&&) = default;
    AbramsComplex& operator=(AbramsComplex&&) = default;

    int num_vertices() const { return og.base.num_vertices(); }
    bool is_edge_item(int it) const { return it >= num_vertices(); }
    int vertex_item(int v) const { return og.label.at(v) - 1; }
    int edge_item(int e) const { return item_of_edge.at(e); }
    int dim_of(const AbramsCell& c) const;
    uint64_t key(const AbramsCell& c) const;
    int64_t find(const AbramsCell& c) const;  // -1 when absent
    // cell from vertex names / edge ids, e.g. {"e2", "1"}
    AbramsCell cell_of(const std::vector<int>& vertices, const std::vector<int>& edges) const;
    std::string name(int d, int64_t i) const;

    uint64_t key_space_ = 0;
};

// sorted by the tau label of each edge; faces replace e_i by iota / tau
std::vector<std::pair<AbramsCell, int64_t>> abrams_boundary(const AbramsComplex& A, const AbramsCell& c);

// throws GraphError when g is not simple or not sufficiently subdivided for n
AbramsComplex build_abrams(const OrderedGraph& og, int n);
AbramsComplex build_abrams(const Graph& g, int n);

// chain from signed cells
Chain abrams_chain(const AbramsComplex& A, int d, const std::vector<std::pair<AbramsCell, int64_t>>& terms);

}  // namespace gcs
