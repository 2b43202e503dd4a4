#include "gcs/swiatkowski.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace gcs {

// ------------------------------------------------------------------ layout

void SwLayout::finish() {
    int nv = g.num_vertices();
    nstates.assign(nv, 1);
    for (int v = 0; v < nv; ++v) {
        int d = g.degree(v);
        if (mode[v] == VMode::Full)
            nstates[v] = 2 + d;
        else
            nstates[v] = d >= 1 ? d : 1;  // empty + (d-1) differences
        if (nstates[v] > 255) throw GraphError("vertex degree too large");
    }
}

SwLayout SwLayout::canonical(const Graph& g) {
    SwLayout L;
    L.g = g;
    L.mode.assign(g.num_vertices(), VMode::Full);
    L.ref.assign(g.num_vertices(), 0);
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) == 1) L.mode[v] = VMode::Reduced;
    L.finish();
    return L;
}

SwLayout SwLayout::reduced_at(const Graph& g, int v, int ref) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("vertex out of range");
    if (g.degree(v) < 2) throw GraphError("vertex '" + g.name(v) + "' has degree below 2");
    if (ref < 0 || ref >= g.degree(v)) throw GraphError("reference half-edge out of range");
    SwLayout L = canonical(g);
    L.mode[v] = VMode::Reduced;
    L.ref[v] = ref;
    L.finish();
    return L;
}

SwLayout SwLayout::fully_reduced(const Graph& g, const std::vector<int>& refs) {
    SwLayout L;
    L.g = g;
    int nv = g.num_vertices();
    L.mode.assign(nv, VMode::Reduced);
    L.ref.assign(nv, 0);
    for (int v = 0; v < nv; ++v) {
        if (g.degree(v) == 0) L.mode[v] = VMode::Full;
        if (!refs.empty()) L.ref[v] = refs.at(v);
    }
    L.finish();
    return L;
}

int SwLayout::half_of(int v, int s) const {
    if (s == 0) return -1;
    if (mode[v] == VMode::Full) return s >= 2 ? s - 2 : -1;
    // differences: s = 1.. enumerates j != ref in increasing order
    int j = s - 1;
    return j >= ref[v] ? j + 1 : j;
}

int SwLayout::state_of_half(int v, int j) const {
    if (mode[v] == VMode::Full) return j + 2;
    if (j == ref[v]) return -1;
    return j < ref[v] ? j + 1 : j;
}

int SwLayout::top_dim() const {
    int t = 0;
    for (int v = 0; v < g.num_vertices(); ++v) t += nstates[v] > (mode[v] == VMode::Full ? 2 : 1);
    return t;
}

int SwCell::dim(const SwLayout& L) const {
    int d = 0;
    for (int v = 0; v < static_cast<int>(st.size()); ++v) d += L.is_half(v, st[v]);
    return d;
}

int SwCell::particles() const {
    int p = 0;
    for (auto s : st) p += s != 0;
    for (auto m : mono) p += m;
    return p;
}


// ----------------------------------------------------------------- indexer

SwIndexer::SwIndexer(const SwLayout& L, int n) : n_(n), E_(L.g.num_edges()) {
    int top = n + E_ + 1;
    binom_.assign(top + 1, std::vector<uint64_t>(E_ + 2, 0));
    for (int a = 0; a <= top; ++a) {
        binom_[a][0] = 1;
        for (int b = 1; b <= std::min(a, E_ + 1); ++b) {
            unsigned __int128 s = static_cast<unsigned __int128>(binom_[a - 1][b - 1]) + (b <= a - 1 ? binom_[a - 1][b] : 0);
            binom_[a][b] = s > UINT64_MAX ? UINT64_MAX : static_cast<uint64_t>(s);
        }
    }
    M_ = E_ == 0 ? 1 : C(n + E_, E_);
    radix_.resize(L.g.num_vertices());
    unsigned __int128 w = 1;
    for (int v = 0; v < L.g.num_vertices(); ++v) {
        radix_[v] = static_cast<uint64_t>(w);
        w *= L.nstates[v];
        if (w > UINT64_MAX) throw std::overflow_error("cell key space exceeds 64 bits");
    }
    if (M_ == UINT64_MAX || w * M_ > UINT64_MAX) throw std::overflow_error("cell key space exceeds 64 bits");
    total_ = static_cast<uint64_t>(w * M_);
}

uint64_t SwIndexer::C(int a, int b) const {
    if (b < 0 || a < 0 || b > a) return 0;
    return binom_.at(a).at(b);
}

uint64_t SwIndexer::key_space() const { return total_; }

uint64_t SwIndexer::mono_rank(const std::vector<uint16_t>& m) const {
    if (E_ == 0) return 0;
    int k = 0;
    for (auto x : m) k += x;
    uint64_t r = k == 0 ? 0 : C(k - 1 + E_, E_);
    int s = 0;
    for (int i = 1; i <= E_ - 1; ++i) {
        s += m[i - 1];
        r += C(s + i - 1, i);
    }
    return r;
}

uint64_t SwIndexer::key(const SwCell& c) const {
    uint64_t code = 0;
    for (size_t v = 0; v < c.st.size(); ++v) code += radix_[v] * c.st[v];
    return code * M_ + mono_rank(c.mono);
}

// ---------------------------------------------------------------- builders

void sw_boundary(const SwLayout& L, const SwCell& c, std::vector<std::pair<SwCell, int64_t>>& out) {
    out.clear();
    int k = 0;
    const Graph& g = L.g;
    for (int v = 0; v < static_cast<int>(c.st.size()); ++v) {
        int j = L.half_of(v, c.st[v]);
        if (j < 0) continue;
        int64_t sign = k % 2 ? -1 : 1;
        ++k;
        SwCell a = c;
        a.st[v] = 0;
        a.mono[g.incidences(v)[j].edge]++;
        out.push_back({std::move(a), sign});
        SwCell b = c;
        if (L.mode[v] == VMode::Full) {
            b.st[v] = 1;
        } else {
            b.st[v] = 0;
            b.mono[g.incidences(v)[L.ref[v]].edge]++;
        }
        out.push_back({std::move(b), -sign});
    }
}

int64_t SwComplex::find(const SwCell& c) const {
    int d = c.dim(layout);
    if (d < 0 || d >= static_cast<int>(index.size())) return -1;
    if (c.particles() != n) return -1;
    auto it = index[d].find(idx.key(c));
    return it == index[d].end() ? -1 : it->second;
}

std::string SwComplex::name(int d, int64_t i) const {
    const SwCell& c = cells.at(d).at(i);
    const Graph& g = layout.g;
    std::string r;
    auto sep = [&] {
        if (!r.empty()) r += " ";
    };
    for (int v = 0; v < g.num_vertices(); ++v) {
        int s = c.st[v];
        if (!s) continue;
        sep();
        int j = layout.half_of(v, s);
        if (j < 0) {
            r += g.name(v);
        } else if (layout.mode[v] == VMode::Full) {
            r += "h(" + g.name(v) + ":" + g.edge(g.incidences(v)[j].edge).id + ")";
        } else {
            r += "(h(" + g.name(v) + ":" + g.edge(g.incidences(v)[j].edge).id + ")-h(" + g.name(v) + ":" +
                 g.edge(g.incidences(v)[layout.ref[v]].edge).id + "))";
        }
    }
    for (int e = 0; e < g.num_edges(); ++e) {
        if (!c.mono[e]) continue;
        sep();
        r += g.edge(e).id;
        if (c.mono[e] > 1) r += "^" + std::to_string(c.mono[e]);
    }
    return r.empty() ? "1" : r;
}

SwComplex build_sw(const SwLayout& L, int n, int max_dim) {
    SwComplex S;
    S.layout = L;
    S.n = n;
    S.max_dim = max_dim;
    S.idx = SwIndexer(S.layout, n);
    const Graph& g = S.layout.g;
    const int nv = g.num_vertices(), ne = g.num_edges();
    int top = S.layout.top_dim();
    int maxd = max_dim < 0 ? top : std::min(top, max_dim + 1);
    if (n < 0) throw std::invalid_argument("negative particle count");
    maxd = std::min(maxd, n);
    S.cells.assign(maxd + 1, {});
    S.index.assign(maxd + 1, {});

    SwCell cur;
    cur.st.assign(nv, 0);
    cur.mono.assign(ne, 0);
    // monomials of degree p on edges e..ne-1
    std::function<void(int, int, int)> monos = [&](int e, int p, int d) {
        if (e == ne - 1 || ne == 0) {
            if (ne == 0 && p > 0) return;
            if (ne) cur.mono[e] = static_cast<uint16_t>(p);
            S.index[d].emplace(S.idx.key(cur), static_cast<int32_t>(S.cells[d].size()));
            S.cells[d].push_back(cur);
            if (ne) cur.mono[e] = 0;
            return;
        }
        for (int k = p; k >= 0; --k) {
            cur.mono[e] = static_cast<uint16_t>(k);
            monos(e + 1, p - k, d);
        }
        cur.mono[e] = 0;
    };
    std::function<void(int, int, int)> states = [&](int v, int p, int d) {
        if (v == nv) {
            monos(0, p, d);
            return;
        }
        for (int s = 0; s < S.layout.nstates[v]; ++s) {
            int dp = s != 0, dd = S.layout.is_half(v, s);
            if (dp > p || d + dd > maxd) continue;
            cur.st[v] = static_cast<uint8_t>(s);
            states(v + 1, p - dp, d + dd);
        }
        cur.st[v] = 0;
    };
    states(0, n, 0);

    ChainComplex& cx = S.cx;
    cx.cells.resize(maxd + 1);
    for (int d = 0; d <= maxd; ++d) cx.cells[d] = static_cast<int64_t>(S.cells[d].size());
    cx.bd.assign(maxd + 1, {});
    std::vector<std::pair<SwCell, int64_t>> faces;
    for (int d = 1; d <= maxd; ++d) {
        cx.bd[d].rows = cx.cells[d - 1];
        cx.bd[d].cols.resize(cx.cells[d]);
        for (int64_t i = 0; i < cx.cells[d]; ++i) {
            sw_boundary(S.layout, S.cells[d][i], faces);
            Column col;
            for (auto& [f, c] : faces) {
                auto it = S.index[d - 1].find(S.idx.key(f));
                if (it == S.index[d - 1].end()) throw std::logic_error("face not enumerated");
                col.push_back({it->second, c});
            }
            normalize_column(col);
            cx.bd[d].cols[i] = std::move(col);
        }
    }
    cx.exact_to = (max_dim < 0 || max_dim >= top) ? -1 : max_dim;
    if (maxd < top && max_dim >= 0 && maxd == n) cx.exact_to = -1;
    return S;
}

SwComplex build_swiatkowski(const Graph& g, int n, int max_dim) { return build_sw(SwLayout::canonical(g), n, max_dim); }

SwComplex build_reduced_at(const Graph& g, int n, int v, int max_dim) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("vertex out of range");
    if (g.degree(v) < 3) throw GraphError("vertex '" + g.name(v) + "' is not essential");
    return build_sw(SwLayout::reduced_at(g, v), n, max_dim);
}

SwComplex build_fully_reduced(const Graph& g, int n, int max_dim) {
    return build_sw(SwLayout::fully_reduced(g), n, max_dim);
}

// ----------------------------------------------------------------- algebra

int SwTerm::dim() const {
    int d = 0;
    for (auto s : st) d += s >= 0;
    return d;
}

int SwTerm::particles() const {
    int p = 0;
    for (auto s : st) p += s != -1;
    for (auto m : mono) p += m;
    return p;
}

namespace {

SwTerm blank(int nv, int ne) { return SwTerm{std::vector<int16_t>(nv, -1), std::vector<int16_t>(ne, 0)}; }

}  // namespace

SwChain SwChain::one(const Graph& g) {
    SwChain c(g.num_vertices(), g.num_edges());
    c.add(blank(c.nv, c.ne), 1);
    return c;
}

SwChain SwChain::edge(const Graph& g, int e, int power) {
    SwChain c(g.num_vertices(), g.num_edges());
    auto t = blank(c.nv, c.ne);
    t.mono.at(e) = static_cast<int16_t>(power);
    c.add(t, 1);
    return c;
}

SwChain SwChain::vertex(const Graph& g, int v) {
    SwChain c(g.num_vertices(), g.num_edges());
    auto t = blank(c.nv, c.ne);
    t.st.at(v) = -2;
    c.add(t, 1);
    return c;
}

SwChain SwChain::half(const Graph& g, int v, int j) {
    if (j < 0 || j >= g.degree(v)) throw GraphError("half-edge index out of range");
    SwChain c(g.num_vertices(), g.num_edges());
    auto t = blank(c.nv, c.ne);
    t.st.at(v) = static_cast<int16_t>(j);
    c.add(t, 1);
    return c;
}

SwChain SwChain::diff(const Graph& g, int v, int j, int k) { return half(g, v, j) - half(g, v, k); }

int SwChain::dim() const { return terms.empty() ? -1 : terms.begin()->first.dim(); }

void SwChain::add(const SwTerm& t, int64_t c) {
    if (!c) return;
    auto [it, fresh] = terms.emplace(t, c);
    if (!fresh) {
        it->second += c;
        if (!it->second) terms.erase(it);
    }
}

SwChain& SwChain::operator+=(const SwChain& o) {
    if (!nv && !ne) nv = o.nv, ne = o.ne;
    for (const auto& [t, c] : o.terms) add(t, c);
    return *this;
}

SwChain& SwChain::operator-=(const SwChain& o) {
    if (!nv && !ne) nv = o.nv, ne = o.ne;
    for (const auto& [t, c] : o.terms) add(t, -c);
    return *this;
}

SwChain SwChain::operator*(int64_t s) const {
    SwChain r(nv, ne);
    if (s)
        for (const auto& [t, c] : terms) r.terms.emplace(t, c * s);
    return r;
}

SwChain SwChain::operator*(const SwChain& o) const {
    SwChain r(std::max(nv, o.nv), std::max(ne, o.ne));
    for (const auto& [a, ca] : terms)
        for (const auto& [b, cb] : o.terms) {
            SwTerm t = a;
            int swaps = 0, later_a = 0;
            // count pairs (x in a, y in b) with y before x
            for (int v = static_cast<int>(a.st.size()) - 1; v >= 0; --v) {
                if (a.st[v] != -1 && b.st[v] != -1)
                    throw GraphError("product of chains sharing a vertex factor");
                if (b.st[v] >= 0) swaps += later_a;
                if (a.st[v] >= 0) ++later_a;
                if (b.st[v] != -1) t.st[v] = b.st[v];
            }
            for (size_t e = 0; e < t.mono.size(); ++e) t.mono[e] = static_cast<int16_t>(t.mono[e] + b.mono[e]);
            r.add(t, (swaps % 2 ? -1 : 1) * ca * cb);
        }
    return r;
}

SwChain SwChain::boundary(const Graph& g) const {
    SwChain r(nv, ne);
    for (const auto& [t, c] : terms) {
        int k = 0;
        for (int v = 0; v < static_cast<int>(t.st.size()); ++v) {
            int j = t.st[v];
            if (j < 0) continue;
            int64_t sign = k % 2 ? -1 : 1;
            ++k;
            SwTerm a = t;
            a.st[v] = -1;
            a.mono[g.incidences(v)[j].edge]++;
            r.add(a, sign * c);
            SwTerm b = t;
            b.st[v] = -2;
            r.add(b, -sign * c);
        }
    }
    return r;
}

SwChain expand_cell(const SwLayout& L, const SwCell& c) {
    const Graph& g = L.g;
    SwChain acc = SwChain::one(g);
    acc.terms.clear();
    SwTerm base = blank(g.num_vertices(), g.num_edges());
    for (int e = 0; e < g.num_edges(); ++e) base.mono[e] = static_cast<int16_t>(c.mono[e]);
    acc.add(base, 1);
    for (int v = 0; v < g.num_vertices(); ++v) {
        int s = c.st[v];
        if (!s) continue;
        SwChain next(acc.nv, acc.ne);
        int j = L.half_of(v, s);
        for (const auto& [t, x] : acc.terms) {
            SwTerm a = t;
            if (j < 0) {
                a.st[v] = -2;
                next.add(a, x);
            } else {
                a.st[v] = static_cast<int16_t>(j);
                next.add(a, x);
                if (L.mode[v] == VMode::Reduced) {
                    SwTerm b = t;
                    b.st[v] = static_cast<int16_t>(L.ref[v]);
                    next.add(b, -x);
                }
            }
        }
        acc = std::move(next);
    }
    return acc;
}

Chain to_chain(const SwComplex& S, const SwChain& c) {
    const SwLayout& L = S.layout;
    int dim = c.dim();
    Chain out{std::max(dim, 0), {}};
    if (c.empty()) return out;
    std::vector<Entry> raw;
    SwCell cell;
    for (const auto& [t, x] : c.terms) {
        if (t.dim() != dim) throw std::invalid_argument("chain mixes dimensions");
        if (t.particles() != S.n) throw std::invalid_argument("chain has wrong particle count");
        cell.st.assign(t.st.size(), 0);
        cell.mono.assign(t.mono.begin(), t.mono.end());
        bool drop = false;
        for (int v = 0; v < static_cast<int>(t.st.size()); ++v) {
            int s = t.st[v];
            if (s == -1) continue;
            if (s == -2) {
                if (L.mode[v] != VMode::Full)
                    throw std::invalid_argument("vertex factor at a reduced vertex");
                cell.st[v] = 1;
                continue;
            }
            int code = L.state_of_half(v, s);
            if (code < 0) {
                drop = true;  // reference half-edge: must cancel, checked below
                break;
            }
            cell.st[v] = static_cast<uint8_t>(code);
        }
        if (drop) continue;
        int64_t i = S.find(cell);
        if (i < 0) throw std::invalid_argument("chain uses a cell outside the complex");
        raw.push_back({static_cast<int32_t>(i), x});
    }
    out = Chain::from_map(dim, raw);
    if (!(from_chain(S, out) == c)) throw std::invalid_argument("chain does not lie in the reduced complex");
    return out;
}

SwChain from_chain(const SwComplex& S, const Chain& c) {
    const Graph& g = S.layout.g;
    SwChain r(g.num_vertices(), g.num_edges());
    for (auto [i, x] : c.terms) r += expand_cell(S.layout, S.cells.at(c.dim).at(i)) * x;
    return r;
}

Support support(const Graph& g, const SwChain& c) {
    Support s;
    for (const auto& [t, x] : c.terms) {
        for (int v = 0; v < static_cast<int>(t.st.size()); ++v) {
            if (t.st[v] == -1) continue;
            s.vertices.insert(v);
            if (t.st[v] >= 0) s.edges.insert(g.incidences(v)[t.st[v]].edge);
        }
        for (int e = 0; e < static_cast<int>(t.mono.size()); ++e)
            if (t.mono[e]) s.edges.insert(e);
    }
    return s;
}

}  // namespace gcs
