#include "gcs/abrams.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gcs {

namespace {

uint64_t binom_checked(int a, int b) {
    if (b < 0 || a < 0 || b > a) return 0;
    unsigned __int128 r = 1;
    for (int i = 1; i <= b; ++i) {
        r = r * static_cast<unsigned>(a - b + i) / static_cast<unsigned>(i);
        if (r > (static_cast<unsigned __int128>(1) << 63)) throw std::overflow_error("Abrams key space exceeds 63 bits");
    }
    return static_cast<uint64_t>(r);
}

}  // namespace

int AbramsComplex::dim_of(const AbramsCell& c) const {
    int d = 0;
    for (int it : c.items) d += is_edge_item(it);
    return d;
}

uint64_t AbramsComplex::key(const AbramsCell& c) const {
    // combinatorial number system over sorted items
    uint64_t k = 0;
    for (size_t i = 0; i < c.items.size(); ++i) k += binom_checked(c.items[i], static_cast<int>(i) + 1);
    return k;
}

int64_t AbramsComplex::find(const AbramsCell& c) const {
    if (static_cast<int>(c.items.size()) != n) return -1;
    if (!std::is_sorted(c.items.begin(), c.items.end())) return -1;
    int d = dim_of(c);
    if (d >= static_cast<int>(index.size())) return -1;
    auto it = index[d].find(key(c));
    return it == index[d].end() ? -1 : it->second;
}

AbramsCell AbramsComplex::cell_of(const std::vector<int>& vertices, const std::vector<int>& edges) const {
    AbramsCell c;
    for (int v : vertices) c.items.push_back(vertex_item(v));
    for (int e : edges) c.items.push_back(edge_item(e));
    std::sort(c.items.begin(), c.items.end());
    return c;
}

std::string AbramsComplex::name(int d, int64_t i) const {
    const auto& c = cells.at(d).at(i);
    const Graph& g = og.base;
    std::string r = "{";
    for (size_t k = 0; k < c.items.size(); ++k) {
        if (k) r += ",";
        int it = c.items[k];
        if (is_edge_item(it)) {
            int e = edge_of_item[it - num_vertices()];
            r += "e_" + std::to_string(og.label[og.tau[e]]) + "^" + std::to_string(og.label[og.iota[e]]);
        } else {
            r += g.name(og.by_label[it]);
        }
    }
    return r + "}";
}

std::vector<std::pair<AbramsCell, int64_t>> abrams_boundary(const AbramsComplex& A, const AbramsCell& c) {
    std::vector<std::pair<AbramsCell, int64_t>> out;
    int i = 0;
    for (size_t k = 0; k < c.items.size(); ++k) {
        int it = c.items[k];
        if (!A.is_edge_item(it)) continue;
        ++i;
        int64_t s = i % 2 ? -1 : 1;
        int e = A.edge_of_item[it - A.num_vertices()];
        for (auto [v, sign] : {std::pair{A.og.iota[e], s}, std::pair{A.og.tau[e], -s}}) {
            AbramsCell f = c;
            f.items[k] = A.vertex_item(v);
            std::sort(f.items.begin(), f.items.end());
            out.push_back({std::move(f), sign});
        }
    }
    return out;
}

AbramsComplex build_abrams(const OrderedGraph& og, int n) {
    if (n < 1) throw std::invalid_argument("need at least one particle");
    const Graph& g = og.base;
    if (auto why = sufficiency_violation(g, n); !why.empty())
        throw GraphError("graph not sufficiently subdivided for n=" + std::to_string(n) + ": " + why);
    AbramsComplex A;
    A.og = og;
    A.n = n;
    int V = g.num_vertices(), E = g.num_edges();
    A.key_space_ = binom_checked(V + E, n);

    std::vector<int> ord(E);
    std::iota(ord.begin(), ord.end(), 0);
    std::sort(ord.begin(), ord.end(), [&](int x, int y) {
        return std::pair{og.label[og.tau[x]], og.label[og.iota[x]]} < std::pair{og.label[og.tau[y]], og.label[og.iota[y]]};
    });
    A.edge_of_item = ord;
    A.item_of_edge.assign(E, 0);
    for (int r = 0; r < E; ++r) A.item_of_edge[ord[r]] = V + r;

    A.cells.assign(n + 1, {});
    std::vector<char> used(V, 0);
    AbramsCell cur;
    auto rec = [&](auto&& self, int from, int d) -> void {
        if (static_cast<int>(cur.items.size()) == n) {
            A.cells[d].push_back(cur);
            return;
        }
        int left = n - static_cast<int>(cur.items.size());
        for (int it = from; it + left <= V + E; ++it) {
            if (it < V) {
                int v = og.by_label[it];
                if (used[v]) continue;
                used[v] = 1;
                cur.items.push_back(it);
                self(self, it + 1, d);
                cur.items.pop_back();
                used[v] = 0;
            } else {
                int e = ord[it - V];
                int a = g.edge(e).a, b = g.edge(e).b;
                if (used[a] || used[b]) continue;
                used[a] = used[b] = 1;
                cur.items.push_back(it);
                self(self, it + 1, d + 1);
                cur.items.pop_back();
                used[a] = used[b] = 0;
            }
        }
    };
    rec(rec, 0, 0);
    const int maxd = n;  // empty top dimensions are kept so counts read (c0, ..., cn)
    A.index.assign(maxd + 1, {});
    for (int d = 0; d <= maxd; ++d)
        for (size_t i = 0; i < A.cells[d].size(); ++i) A.index[d].emplace(A.key(A.cells[d][i]), static_cast<int32_t>(i));

    ChainComplex& cx = A.cx;
    cx.cells.resize(maxd + 1);
    for (int d = 0; d <= maxd; ++d) cx.cells[d] = static_cast<int64_t>(A.cells[d].size());
    cx.bd.assign(maxd + 1, {});
    for (int d = 1; d <= maxd; ++d) {
        cx.bd[d].rows = cx.cells[d - 1];
        cx.bd[d].cols.resize(cx.cells[d]);
        for (int64_t i = 0; i < cx.cells[d]; ++i) {
            Column col;
            for (auto& [f, s] : abrams_boundary(A, A.cells[d][i])) {
                auto it = A.index[d - 1].find(A.key(f));
                if (it == A.index[d - 1].end()) throw std::logic_error("Abrams face not enumerated");
                col.push_back({it->second, s});
            }
            normalize_column(col);
            cx.bd[d].cols[i] = std::move(col);
        }
    }
    cx.exact_to = -1;
    return A;
}

AbramsComplex build_abrams(const Graph& g, int n) { return build_abrams(order_vertices(g), n); }

Chain abrams_chain(const AbramsComplex& A, int d, const std::vector<std::pair<AbramsCell, int64_t>>& terms) {
    std::vector<Entry> raw;
    for (const auto& [c, x] : terms) {
        if (A.dim_of(c) != d) throw std::invalid_argument("cell of wrong dimension in chain");
        int64_t i = A.find(c);
        if (i < 0) throw std::invalid_argument("cell not in the Abrams complex");
        raw.push_back({static_cast<int32_t>(i), x});
    }
    return Chain::from_map(d, raw);
}

}  // namespace gcs
