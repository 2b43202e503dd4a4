#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gcs {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Edge {
    std::string id;
    int a = -1;
    int b = -1;
    int other(int v) const { return v == a ? b : a; }
};

// one incidence of an edge at a vertex; position in the incidence list
// is the half-edge index at that vertex
struct Incidence {
    int edge;
    int nbr;
};

class Graph {
public:
    Graph() = default;

    int add_vertex(const std::string& name);
    int add_edge(int a, int b, std::string id = {});
    int add_edge(const std::string& a, const std::string& b, std::string id = {});

    int num_vertices() const { return static_cast<int>(names_.size()); }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::string& name(int v) const { return names_.at(v); }
    const std::vector<std::string>& names() const { return names_; }
    const Edge& edge(int e) const { return edges_.at(e); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<Incidence>& incidences(int v) const { return inc_.at(v); }
    int degree(int v) const { return static_cast<int>(inc_.at(v).size()); }

    int find_vertex(const std::string& name) const;  // -1 if absent
    int vertex(const std::string& name) const;       // throws
    int find_edge(const std::string& id) const;
    // half-edge index of edge e at its endpoint v
    int half_edge(int v, int e) const;

    int essential_count() const;
    bool is_simple() const;
    bool is_connected() const;
    int components() const;

    std::string to_json() const;
    static Graph from_json(const std::string& text);

    bool operator==(const Graph& o) const;

private:
    std::vector<std::string> names_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Incidence>> inc_;
};

// "wheel:5", "complete_bipartite:2,4", "theta:4", "petersen:10", "lasso", ...
struct FamilySpec {
    std::string family;
    std::vector<int> params;
    static FamilySpec parse(const std::string& dsl);
    std::string str() const;
};

Graph build_family(const FamilySpec& spec);
Graph build_family(const std::string& dsl);
// family DSL or path to a graph JSON file
Graph load_graph(const std::string& source);

// smallest uniform subdivision factor satisfying the sufficiency conditions
int subdivision_factor(const Graph& g, int n);
Graph subdivide(const Graph& g, int k);
Graph subdivide_for(const Graph& g, int n);

// empty string when the graph is simple and sufficiently subdivided for n,
// otherwise a message naming the violated condition and a witness
std::string sufficiency_violation(const Graph& g, int n);

// shortest path (vertex sequence) between distinct vertices of degree != 2
std::vector<int> shortest_essential_path(const Graph& g);
// a shortest cycle as a closed vertex walk (first vertex not repeated); edges too
struct CycleWalk {
    std::vector<int> vertices;
    std::vector<int> edges;
};
CycleWalk shortest_cycle(const Graph& g);

struct OrderedGraph {
    Graph base;
    int root = -1;
    std::vector<int> label;         // vertex -> 1..|V|
    std::vector<int> by_label;      // label-1 -> vertex
    std::vector<char> in_tree;      // per edge
    std::vector<int> tau, iota;     // per edge, vertices with label(tau) < label(iota)
    std::vector<std::vector<int>> edge_order;  // per vertex: edges, tree edge towards root first
};

OrderedGraph order_vertices(const Graph& g, int root);
OrderedGraph order_vertices(const Graph& g);

}  // namespace gcs
