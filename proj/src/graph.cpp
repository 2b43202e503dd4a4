#include "gcs/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <functional>
#include <limits>
#include <set>
#include <sstream>

#include "json.hpp"

namespace gcs {

using nlohmann::json;

int Graph::add_vertex(const std::string& name) {
    if (find_vertex(name) >= 0) throw GraphError("duplicate vertex '" + name + "'");
    names_.push_back(name);
    inc_.emplace_back();
    return num_vertices() - 1;
}

int Graph::add_edge(int a, int b, std::string id) {
    if (a < 0 || b < 0 || a >= num_vertices() || b >= num_vertices())
        throw GraphError("edge endpoint out of range");
    if (a == b) throw GraphError("self-loop at '" + names_[a] + "' is not allowed");
    int e = num_edges();
    if (id.empty()) id = "e" + std::to_string(e + 1);
    if (find_edge(id) >= 0) throw GraphError("duplicate edge id '" + id + "'");
    edges_.push_back({std::move(id), a, b});
    inc_[a].push_back({e, b});
    inc_[b].push_back({e, a});
    return e;
}

int Graph::add_edge(const std::string& a, const std::string& b, std::string id) {
    return add_edge(vertex(a), vertex(b), std::move(id));
}

int Graph::find_vertex(const std::string& name) const {
    for (int v = 0; v < num_vertices(); ++v)
        if (names_[v] == name) return v;
    return -1;
}

int Graph::vertex(const std::string& name) const {
    int v = find_vertex(name);
    if (v < 0) throw GraphError("no vertex named '" + name + "'");
    return v;
}

int Graph::find_edge(const std::string& id) const {
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].id == id) return e;
    return -1;
}

int Graph::half_edge(int v, int e) const {
    const auto& in = inc_.at(v);
    for (int k = 0; k < static_cast<int>(in.size()); ++k)
        if (in[k].edge == e) return k;
    throw GraphError("edge is not incident to vertex");
}

int Graph::essential_count() const {
    int c = 0;
    for (int v = 0; v < num_vertices(); ++v) c += degree(v) >= 3;
    return c;
}

bool Graph::is_simple() const {
    std::set<std::pair<int, int>> seen;
    for (const auto& e : edges_) {
        auto key = std::minmax(e.a, e.b);
        if (!seen.insert(key).second) return false;
    }
    return true;
}

int Graph::components() const {
    std::vector<int> comp(num_vertices(), -1);
    int c = 0;
    for (int s = 0; s < num_vertices(); ++s) {
        if (comp[s] >= 0) continue;
        std::vector<int> st{s};
        comp[s] = c;
        while (!st.empty()) {
            int v = st.back();
            st.pop_back();
            for (auto [e, w] : inc_[v])
                if (comp[w] < 0) comp[w] = c, st.push_back(w);
        }
        ++c;
    }
    return c;
}

bool Graph::is_connected() const { return components() <= 1; }

std::string Graph::to_json() const {
    json j;
    j["vertices"] = names_;
    json es = json::array();
    bool default_ids = true;
    for (int e = 0; e < num_edges(); ++e)
        if (edges_[e].id != "e" + std::to_string(e + 1)) default_ids = false;
    for (const auto& e : edges_) {
        if (default_ids)
            es.push_back({names_[e.a], names_[e.b]});
        else
            es.push_back({names_[e.a], names_[e.b], e.id});
    }
    j["edges"] = es;
    return j.dump();
}

Graph Graph::from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& ex) {
        throw GraphError(std::string("bad graph json: ") + ex.what());
    }
    if (!j.contains("vertices") || !j.contains("edges")) throw GraphError("graph json needs 'vertices' and 'edges'");
    Graph g;
    for (const auto& v : j["vertices"]) g.add_vertex(v.is_string() ? v.get<std::string>() : v.dump());
    for (const auto& e : j["edges"]) {
        if (!e.is_array() || e.size() < 2) throw GraphError("edge entries must be [a, b] or [a, b, id]");
        auto nm = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
        g.add_edge(nm(e[0]), nm(e[1]), e.size() > 2 ? nm(e[2]) : std::string{});
    }
    return g;
}

bool Graph::operator==(const Graph& o) const {
    if (names_ != o.names_ || edges_.size() != o.edges_.size()) return false;
    for (size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id != o.edges_[i].id || edges_[i].a != o.edges_[i].a || edges_[i].b != o.edges_[i].b)
            return false;
    return true;
}

// ---------------------------------------------------------------- families

FamilySpec FamilySpec::parse(const std::string& dsl) {
    FamilySpec s;
    auto colon = dsl.find(':');
    s.family = dsl.substr(0, colon);
    std::transform(s.family.begin(), s.family.end(), s.family.begin(), ::tolower);
    if (colon != std::string::npos) {
        std::stringstream ss(dsl.substr(colon + 1));
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            if (s.family == "petersen_family" || s.family == "petersen") {
                // petersen_family:P8 style names are kept in family
                bool digits = std::all_of(tok.begin(), tok.end(), ::isdigit);
                if (!digits) {
                    s.family = "petersen_family:" + tok;
                    continue;
                }
            }
            try {
                s.params.push_back(std::stoi(tok));
            } catch (...) {
                throw GraphError("bad family parameter '" + tok + "' in '" + dsl + "'");
            }
        }
    }
    return s;
}

std::string FamilySpec::str() const {
    std::string r = family;
    for (size_t i = 0; i < params.size(); ++i) r += (i ? "," : ":") + std::to_string(params[i]);
    return r;
}

namespace {

void need(bool ok, const std::string& msg) {
    if (!ok) throw GraphError(msg);
}

Graph numbered(int nv) {
    Graph g;
    for (int i = 1; i <= nv; ++i) g.add_vertex(std::to_string(i));
    return g;
}

Graph from_pairs(int nv, const std::vector<std::pair<int, int>>& es) {
    Graph g = numbered(nv);
    for (auto [a, b] : es) g.add_edge(a - 1, b - 1);
    return g;
}

Graph petersen_member(const std::string& which) {
    // obtained from K6 by successive Delta-Y moves; P10 is the Petersen graph
    static const std::vector<std::pair<std::string, std::vector<std::pair<int, int>>>> table = {
        {"P7", {{1,4},{1,5},{1,6},{1,7},{2,4},{2,5},{2,6},{2,7},{3,4},{3,5},{3,6},{3,7},{4,5},{4,6},{5,6}}},
        {"K331", {{1,4},{1,5},{1,6},{1,7},{2,4},{2,5},{2,6},{2,7},{3,4},{3,5},{3,6},{3,7},{4,7},{5,7},{6,7}}},
        // the family member is K_{4,4} minus an edge; "K44" in the table is the full K_{4,4}
        {"K44E", {{1,4},{1,5},{1,6},{1,7},{2,4},{2,5},{2,6},{2,7},{3,4},{3,5},{3,6},{3,7},{4,8},{5,8},{6,8}}},
        {"P8", {{1,6},{1,7},{1,8},{2,4},{2,5},{2,6},{2,7},{3,4},{3,5},{3,6},{3,7},{4,6},{4,8},{5,6},{5,8}}},
        {"P9", {{1,6},{1,7},{1,8},{2,5},{2,7},{2,9},{3,4},{3,5},{3,6},{3,7},{4,8},{4,9},{5,6},{5,8},{6,9}}},
        {"P10", {{1,6},{1,7},{1,8},{2,5},{2,7},{2,9},{3,4},{3,7},{3,10},{4,8},{4,9},{5,8},{5,10},{6,9},{6,10}}},
    };
    for (const auto& [name, es] : table) {
        if (name != which) continue;
        int nv = 0;
        for (auto [a, b] : es) nv = std::max({nv, a, b});
        return from_pairs(nv, es);
    }
    throw GraphError("unknown Petersen family member '" + which + "'");
}

}  // namespace

Graph build_family(const FamilySpec& s) {
    const auto& f = s.family;
    const auto& p = s.params;
    auto nparams = [&](size_t k) {
        need(p.size() == k, "family '" + f + "' takes " + std::to_string(k) + " parameter(s)");
    };

    if (f == "star" || f == "y") {
        int k = 3;
        if (f == "star") nparams(1), k = p[0];
        need(k >= 1, "star needs at least one leaf");
        Graph g;
        g.add_vertex("c");
        for (int i = 1; i <= k; ++i) g.add_vertex("l" + std::to_string(i));
        for (int i = 1; i <= k; ++i) g.add_edge(0, i);
        return g;
    }
    if (f == "linear_tree") {
        nparams(1);
        int m = p[0];
        need(m >= 1, "linear_tree needs m >= 1");
        Graph g;
        for (int i = 0; i <= m + 1; ++i) g.add_vertex("p" + std::to_string(i));
        for (int i = 1; i <= m; ++i) g.add_vertex("q" + std::to_string(i));
        for (int i = 0; i <= m; ++i) g.add_edge(i, i + 1);
        for (int i = 1; i <= m; ++i) g.add_edge(i, m + 1 + i);
        return g;
    }
    if (f == "wheel") {
        nparams(1);
        int m = p[0];
        need(m >= 4, "wheel order must be >= 4");
        Graph g;
        g.add_vertex("h");
        for (int i = 1; i < m; ++i) g.add_vertex("r" + std::to_string(i));
        for (int i = 1; i < m; ++i) g.add_edge(0, i);
        for (int i = 1; i < m; ++i) g.add_edge(i, i % (m - 1) + 1);
        return g;
    }
    if (f == "net") {
        nparams(1);
        int m = p[0];
        need(m >= 1, "net needs m >= 1");
        Graph g;
        for (int i = 0; i <= m; ++i) g.add_vertex("c" + std::to_string(i));
        for (int i = 1; i <= m; ++i) g.add_vertex("l" + std::to_string(i));
        for (int i = 0; i <= m; ++i) g.add_edge(i, (i + 1) % (m + 1));
        for (int i = 1; i <= m; ++i) g.add_edge(i, m + i);
        return g;
    }
    if (f == "complete" || f == "k4" || f == "k5" || f == "k6") {
        int k = f == "complete" ? (nparams(1), p[0]) : f[1] - '0';
        need(k >= 1, "complete graph needs p >= 1");
        Graph g = numbered(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) g.add_edge(i, j);
        return g;
    }
    if (f == "complete_bipartite" || f == "k33") {
        int a = 3, b = 3;
        if (f == "complete_bipartite") nparams(2), a = p[0], b = p[1];
        need(a >= 1 && b >= 1, "complete_bipartite needs p, q >= 1");
        Graph g;
        for (int i = 1; i <= a; ++i) g.add_vertex("a" + std::to_string(i));
        for (int j = 1; j <= b; ++j) g.add_vertex("b" + std::to_string(j));
        for (int i = 0; i < a; ++i)
            for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
        return g;
    }
    if (f == "complete_tripartite") {
        nparams(3);
        need(p[0] >= 1 && p[1] >= 1 && p[2] >= 1, "complete_tripartite needs parts >= 1");
        Graph g;
        std::vector<int> part;
        const char* tag = "abc";
        for (int s = 0; s < 3; ++s)
            for (int i = 1; i <= p[s]; ++i) g.add_vertex(std::string(1, tag[s]) + std::to_string(i)), part.push_back(s);
        for (int i = 0; i < g.num_vertices(); ++i)
            for (int j = i + 1; j < g.num_vertices(); ++j)
                if (part[i] != part[j]) g.add_edge(i, j);
        return g;
    }
    if (f == "theta") {
        nparams(1);
        need(p[0] >= 1, "theta needs p >= 1");
        Graph g;
        g.add_vertex("u");
        g.add_vertex("w");
        for (int i = 0; i < p[0]; ++i) g.add_edge(0, 1);
        return g;
    }
    if (f == "lasso") {
        nparams(0);
        return from_pairs(4, {{1, 2}, {2, 3}, {3, 4}, {2, 4}});
    }
    if (f == "petersen" || f == "petersen_family") {
        nparams(1);
        switch (p[0]) {
            case 6: return build_family(FamilySpec{"complete", {6}});
            case 7: return petersen_member("P7");
            case 8: return petersen_member("P8");
            case 9: return petersen_member("P9");
            case 10: return petersen_member("P10");
        }
        throw GraphError("petersen:N needs N in 6..10 (or petersen_family:K331 / :K44)");
    }
    if (f.rfind("petersen_family:", 0) == 0) {
        std::string w = f.substr(16);
        std::transform(w.begin(), w.end(), w.begin(), ::toupper);
        if (w == "K6") return build_family(FamilySpec{"complete", {6}});
        if (w == "K3,3,1" || w == "K_331") w = "K331";
        if (w == "K44") return build_family(FamilySpec{"complete_bipartite", {4, 4}});
        return petersen_member(w);
    }
    throw GraphError("unknown family '" + f + "'");
}

Graph build_family(const std::string& dsl) { return build_family(FamilySpec::parse(dsl)); }

Graph load_graph(const std::string& source) {
    std::ifstream in(source);
    if (in) {
        std::stringstream ss;
        ss << in.rdbuf();
        return Graph::from_json(ss.str());
    }
    if (!source.empty() && source.front() == '{') return Graph::from_json(source);
    return build_family(source);
}

// ------------------------------------------------------------ subdivision

namespace {

// BFS distances in edges from s
std::vector<int> bfs(const Graph& g, int s, std::vector<int>* parent = nullptr) {
    std::vector<int> d(g.num_vertices(), -1);
    if (parent) parent->assign(g.num_vertices(), -1);
    std::deque<int> q{s};
    d[s] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        for (auto [e, w] : g.incidences(v))
            if (d[w] < 0) {
                d[w] = d[v] + 1;
                if (parent) (*parent)[w] = v;
                q.push_back(w);
            }
    }
    return d;
}

}  // namespace

std::vector<int> shortest_essential_path(const Graph& g) {
    std::vector<int> best;
    for (int s = 0; s < g.num_vertices(); ++s) {
        if (g.degree(s) == 2) continue;
        std::vector<int> par;
        auto d = bfs(g, s, &par);
        for (int t = s + 1; t < g.num_vertices(); ++t) {
            if (g.degree(t) == 2 || d[t] < 0) continue;
            if (best.empty() || d[t] + 1 < static_cast<int>(best.size())) {
                best.clear();
                for (int x = t; x != -1; x = par[x]) best.push_back(x);
                std::reverse(best.begin(), best.end());
            }
        }
    }
    return best;
}

CycleWalk shortest_cycle(const Graph& g) {
    CycleWalk best;
    // parallel edges give 2-cycles
    for (int e = 0; e < g.num_edges(); ++e)
        for (int f = e + 1; f < g.num_edges(); ++f) {
            const auto &x = g.edge(e), &y = g.edge(f);
            if (std::minmax(x.a, x.b) == std::minmax(y.a, y.b)) return {{x.a, x.b}, {e, f}};
        }
    // shortest cycle through each edge: remove it and BFS between endpoints
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        std::vector<int> d(g.num_vertices(), -1), pe(g.num_vertices(), -1);
        std::deque<int> q{ed.a};
        d[ed.a] = 0;
        while (!q.empty()) {
            int v = q.front();
            q.pop_front();
            for (auto [f, w] : g.incidences(v))
                if (f != e && d[w] < 0) d[w] = d[v] + 1, pe[w] = f, q.push_back(w);
        }
        if (d[ed.b] < 0) continue;
        if (!best.vertices.empty() && d[ed.b] + 1 >= static_cast<int>(best.edges.size())) continue;
        CycleWalk c;
        for (int x = ed.b; x != ed.a;) {
            c.vertices.push_back(x);
            c.edges.push_back(pe[x]);
            x = g.edge(pe[x]).other(x);
        }
        c.vertices.push_back(ed.a);
        c.edges.push_back(e);
        std::reverse(c.vertices.begin(), c.vertices.end());
        std::reverse(c.edges.begin(), c.edges.end() - 1);
        best = std::move(c);
    }
    return best;
}

int subdivision_factor(const Graph& g, int n) {
    int k = 1;
    auto path = shortest_essential_path(g);
    if (!path.empty()) {
        int len = static_cast<int>(path.size()) - 1;
        k = std::max(k, (n - 1 + len - 1) / len);
    }
    auto cyc = shortest_cycle(g);
    if (!cyc.edges.empty()) {
        int girth = static_cast<int>(cyc.edges.size());
        k = std::max(k, (n + 1 + girth - 1) / girth);
        if (!g.is_simple()) k = std::max(k, 2);
    }
    return k;
}

Graph subdivide(const Graph& g, int k) {
    if (k <= 1) return g;
    Graph s;
    for (const auto& nm : g.names()) s.add_vertex(nm);
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        int prev = ed.a;
        for (int i = 1; i < k; ++i) {
            int mid = s.add_vertex(ed.id + "." + std::to_string(i));
            s.add_edge(prev, mid, ed.id + "/" + std::to_string(i));
            prev = mid;
        }
        s.add_edge(prev, ed.b, ed.id + "/" + std::to_string(k));
    }
    return s;
}

Graph subdivide_for(const Graph& g, int n) { return subdivide(g, subdivision_factor(g, n)); }

std::string sufficiency_violation(const Graph& g, int n) {
    auto walk = [&](const std::vector<int>& vs) {
        std::string r;
        for (size_t i = 0; i < vs.size(); ++i) r += (i ? "-" : "") + g.name(vs[i]);
        return r;
    };
    if (!g.is_simple()) {
        auto c = shortest_cycle(g);
        return "graph is not simple (parallel edges between " + g.name(c.vertices[0]) + " and " +
               g.name(c.vertices[1]) + ")";
    }
    auto path = shortest_essential_path(g);
    if (!path.empty() && static_cast<int>(path.size()) - 1 < n - 1)
        return "path between vertices of degree != 2 has " + std::to_string(path.size() - 1) + " edge(s), needs >= " +
               std::to_string(n - 1) + ": " + walk(path);
    auto cyc = shortest_cycle(g);
    if (!cyc.edges.empty() && static_cast<int>(cyc.edges.size()) < n + 1) {
        auto vs = cyc.vertices;
        vs.push_back(vs.front());
        return "loop has " + std::to_string(cyc.edges.size()) + " edge(s), needs >= " + std::to_string(n + 1) + ": " +
               walk(vs);
    }
    return {};
}

// ------------------------------------------------------------ ordering

namespace {

bool try_order(const Graph& g, int root, OrderedGraph& og) {
    int nv = g.num_vertices();
    og.label.assign(nv, 0);
    og.in_tree.assign(g.num_edges(), 0);
    std::vector<int> parent_edge(nv, -1);
    int next = 1;
    // iterative preorder DFS following incidence order
    std::vector<std::pair<int, size_t>> st;
    og.label[root] = next++;
    st.push_back({root, 0});
    int root_children = 0;
    while (!st.empty()) {
        auto& [v, k] = st.back();
        const auto& in = g.incidences(v);
        if (k >= in.size()) {
            st.pop_back();
            continue;
        }
        auto [e, w] = in[k++];
        if (og.label[w]) continue;
        og.label[w] = next++;
        og.in_tree[e] = 1;
        parent_edge[w] = e;
        if (v == root) ++root_children;
        st.push_back({w, 0});
    }
    if (root_children > 1) return false;
    og.root = root;
    og.by_label.assign(nv, -1);
    for (int v = 0; v < nv; ++v) og.by_label[og.label[v] - 1] = v;
    og.tau.resize(g.num_edges());
    og.iota.resize(g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) {
        const auto& ed = g.edge(e);
        bool lo = og.label[ed.a] < og.label[ed.b];
        og.tau[e] = lo ? ed.a : ed.b;
        og.iota[e] = lo ? ed.b : ed.a;
    }
    og.edge_order.assign(nv, {});
    for (int v = 0; v < nv; ++v) {
        int towards = v == root ? -1 : parent_edge[v];
        if (v == root)
            for (auto [e, w] : g.incidences(v))
                if (og.in_tree[e]) towards = e;
        if (towards >= 0) og.edge_order[v].push_back(towards);
        for (auto [e, w] : g.incidences(v))
            if (e != towards) og.edge_order[v].push_back(e);
    }
    return true;
}

}  // namespace

OrderedGraph order_vertices(const Graph& g, int root) {
    if (root < 0 || root >= g.num_vertices()) throw GraphError("root not in graph");
    if (!g.is_connected()) throw GraphError("graph is disconnected");
    OrderedGraph og;
    og.base = g;
    if (try_order(g, root, og)) return og;
    // re-root at a vertex whose depth-first tree leaves it with a single branch
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 1 && try_order(g, v, og)) return og;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (v != root && try_order(g, v, og)) return og;
    throw GraphError("no suitable root found");
}

OrderedGraph order_vertices(const Graph& g) {
    int root = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 1) {
            root = v;
            break;
        }
    return order_vertices(g, root);
}

}  // namespace gcs
