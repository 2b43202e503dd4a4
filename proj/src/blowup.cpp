#include "gcs/blowup.hpp"

#include <stdexcept>

#include "gcs/homology.hpp"

namespace gcs {

BlowupContext blowup(const Graph& g, int v, int ref) {
    if (v < 0 || v >= g.num_vertices()) throw GraphError("vertex out of range");
    if (g.degree(v) < 2) throw GraphError("cannot blow up '" + g.name(v) + "': degree below 2");
    if (ref < 0 || ref >= g.degree(v)) throw GraphError("reference half-edge out of range");
    for (const auto& in : g.incidences(v))
        if (in.nbr == v) throw GraphError("cannot blow up a vertex with a loop");
    BlowupContext ctx;
    ctx.g = g;
    ctx.v = v;
    ctx.ref = ref;
    ctx.vmap.assign(g.num_vertices(), -1);
    for (int w = 0; w < g.num_vertices(); ++w)
        if (w != v) ctx.vmap[w] = ctx.gv.add_vertex(g.name(w));
    for (const auto& in : g.incidences(v)) {
        std::string nm = g.name(v) + "~" + g.edge(in.edge).id;
        if (g.find_vertex(nm) >= 0) throw GraphError("leaf name '" + nm + "' already used");
        ctx.leaves.push_back(ctx.gv.add_vertex(nm));
    }
    // same edge order and ids, so half-edge indices away from v do not move
    for (int e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        auto end = [&](int x) { return x == v ? ctx.leaves[g.half_edge(v, e)] : ctx.vmap[x]; };
        ctx.gv.add_edge(end(ed.a), end(ed.b), ed.id);
    }
    return ctx;
}

BlowupComplexes blowup_complexes(const BlowupContext& ctx, int n, int max_dim) {
    if (n < 1) throw std::invalid_argument("need at least one particle");
    BlowupComplexes B{build_sw(SwLayout::reduced_at(ctx.g, ctx.v, ctx.ref), n, max_dim),
                      build_swiatkowski(ctx.gv, n, max_dim), SwComplex{}};
    if (n >= 2) B.sn1 = build_swiatkowski(ctx.gv, n - 1, max_dim);
    return B;
}

namespace {

// gv cell -> S~ cell with v empty
SwCell lift(const BlowupContext& ctx, const SwCell& c) {
    SwCell r;
    r.st.assign(ctx.g.num_vertices(), 0);
    for (int w = 0; w < ctx.g.num_vertices(); ++w)
        if (w != ctx.v) r.st[w] = c.st[ctx.vmap[w]];
    r.mono = c.mono;
    return r;
}

// S~ cell -> gv cell, dropping the state at v
SwCell drop(const BlowupContext& ctx, const SwCell& c) {
    SwCell r;
    r.st.assign(ctx.gv.num_vertices(), 0);
    for (int w = 0; w < ctx.g.num_vertices(); ++w)
        if (w != ctx.v) r.st[ctx.vmap[w]] = c.st[w];
    r.mono = c.mono;
    return r;
}

// half-edge at v and sign of psi on one cell; half = -1 when v is empty
struct PsiCell {
    int half = -1;
    int64_t sign = 0;
};

PsiCell psi_cell(const BlowupContext& ctx, const SwLayout& L, const SwCell& c) {
    PsiCell p;
    p.half = L.half_of(ctx.v, c.st[ctx.v]);
    if (p.half < 0) return p;
    int after = 0;
    for (int w = ctx.v + 1; w < ctx.g.num_vertices(); ++w) after += L.is_half(w, c.st[w]);
    p.sign = after % 2 ? 1 : -1;
    return p;
}

const SwCell& cell_at(const SwComplex& S, int d, int32_t i) { return S.cells.at(d).at(i); }

int dims_of(const SwComplex& S) { return static_cast<int>(S.cells.size()); }

}  // namespace

Chain phi(const BlowupContext& ctx, const BlowupComplexes& B, const Chain& b) {
    std::vector<Entry> raw;
    for (auto [i, x] : b.terms) {
        int64_t k = B.tilde.find(lift(ctx, cell_at(B.sn, b.dim, i)));
        if (k < 0) throw std::logic_error("phi: cell missing from the blown-up complex");
        raw.push_back({static_cast<int32_t>(k), x});
    }
    return Chain::from_map(b.dim, std::move(raw));
}

std::vector<Chain> psi(const BlowupContext& ctx, const BlowupComplexes& B, const Chain& b) {
    int deg = ctx.degree();
    std::vector<std::vector<Entry>> raw(deg);
    for (auto [i, x] : b.terms) {
        const SwCell& c = cell_at(B.tilde, b.dim, i);
        PsiCell p = psi_cell(ctx, B.tilde.layout, c);
        if (p.half < 0) continue;
        int64_t k = B.sn1.find(drop(ctx, c));
        if (k < 0) throw std::logic_error("psi: cell missing from S_{n-1}");
        raw[p.half].push_back({static_cast<int32_t>(k), p.sign * x});
    }
    std::vector<Chain> out;
    for (int j = 0; j < deg; ++j) out.push_back(Chain::from_map(b.dim - 1, std::move(raw[j])));
    return out;
}

ExactnessReport check_exactness(const BlowupContext& ctx, int n) {
    ExactnessReport r;
    BlowupComplexes B = blowup_complexes(ctx, n);
    const SwLayout& L = B.tilde.layout;
    int deg = ctx.degree();

    // phi: every S_n(gv) cell lands on a distinct v-empty cell
    bool inj = true;
    std::vector<std::vector<char>> hit(dims_of(B.tilde));
    for (int d = 0; d < dims_of(B.tilde); ++d) hit[d].assign(B.tilde.cells[d].size(), 0);
    for (int d = 0; d < dims_of(B.sn); ++d)
        for (const auto& c : B.sn.cells[d]) {
            int64_t k = d < dims_of(B.tilde) ? B.tilde.find(lift(ctx, c)) : -1;
            if (k < 0 || hit[d][k]) {
                inj = false;
                continue;
            }
            hit[d][k] = 1;
        }
    r.phi_injective = inj;

    // psi: the remaining cells biject onto deg-1 copies of S_{n-1}(gv)
    bool exact = true, surj = true;
    std::vector<std::vector<std::vector<char>>> got(deg, std::vector<std::vector<char>>(dims_of(B.sn1)));
    for (int j = 0; j < deg; ++j)
        for (int d = 0; d < dims_of(B.sn1); ++d) got[j][d].assign(B.sn1.cells[d].size(), 0);
    for (int d = 0; d < dims_of(B.tilde); ++d)
        for (size_t i = 0; i < B.tilde.cells[d].size(); ++i) {
            const SwCell& c = B.tilde.cells[d][i];
            PsiCell p = psi_cell(ctx, L, c);
            if (p.half < 0) {
                if (!hit[d][i]) exact = false;  // in ker psi but not in im phi
                continue;
            }
            if (hit[d][i]) exact = false;
            int64_t k = d - 1 < dims_of(B.sn1) && n >= 2 ? B.sn1.find(drop(ctx, c)) : -1;
            if (k < 0 || got[p.half][d - 1][k]) {
                surj = false;
                continue;
            }
            got[p.half][d - 1][k] = 1;
        }
    for (int j = 0; j < deg; ++j) {
        if (j == ctx.ref) continue;
        for (const auto& v : got[j])
            for (char x : v) surj = surj && x;
    }
    r.psi_surjective = surj;
    r.exact_middle = exact;

    bool pc = true;
    for (int d = 1; d < dims_of(B.sn) && pc; ++d)
        for (int64_t i = 0; i < B.sn.cx.count(d); ++i) {
            Chain c;
            c.dim = d;
            c.add(static_cast<int32_t>(i), 1);
            if (!(phi(ctx, B, B.sn.cx.boundary(c)) == B.tilde.cx.boundary(phi(ctx, B, c)))) {
                pc = false;
                break;
            }
        }
    r.phi_chain_map = pc;

    bool qc = true;
    for (int d = 2; d < dims_of(B.tilde) && qc && n >= 2; ++d)
        for (int64_t i = 0; i < B.tilde.cx.count(d); ++i) {
            Chain c;
            c.dim = d;
            c.add(static_cast<int32_t>(i), 1);
            auto lhs = psi(ctx, B, B.tilde.cx.boundary(c));
            auto rhs = psi(ctx, B, c);
            for (int j = 0; j < deg && qc; ++j) {
                Chain b = rhs[j].empty() ? Chain{d - 2, {}} : B.sn1.cx.boundary(rhs[j]);
                b.dim = d - 2;
                if (!(lhs[j] == b)) qc = false;
            }
            if (!qc) break;
        }
    r.psi_chain_map = qc;
    return r;
}

namespace {

// rank of delta on H_d of the copies of S_{n-1}(gv), measured inside H_d(S_n(gv))
int64_t delta_rank(const BlowupContext& ctx, const SwComplex& sn, const SwComplex& sn1, int d) {
    if (d < 0 || d >= dims_of(sn1) || d >= dims_of(sn)) return 0;
    std::vector<Column> z;
    if (d == 0) {
        for (int64_t i = 0; i < sn1.cx.count(0); ++i) z.push_back({{static_cast<int32_t>(i), 1}});
    } else {
        z = kernel_basis(sn1.cx.bd[d]);
    }
    const Graph& g = ctx.g;
    int e0 = g.incidences(ctx.v)[ctx.ref].edge;
    std::vector<Chain> imgs;
    auto times = [&](const Column& col, int e) {
        std::vector<Entry> raw;
        for (auto [i, x] : col) {
            SwCell c = sn1.cells[d][i];
            c.mono[e]++;
            int64_t k = sn.find(c);
            if (k < 0) throw std::logic_error("delta: cell missing from S_n");
            raw.push_back({static_cast<int32_t>(k), x});
        }
        return Chain::from_map(d, std::move(raw));
    };
    for (int j = 0; j < g.degree(ctx.v); ++j) {
        if (j == ctx.ref) continue;
        int ej = g.incidences(ctx.v)[j].edge;
        for (const auto& col : z) {
            Chain c = times(col, e0) - times(col, ej);
            if (d % 2) c = c * -1;
            if (!c.empty()) imgs.push_back(std::move(c));
        }
    }
    if (imgs.empty()) return 0;
    return span_rank(sn.cx, imgs, d);
}

}  // namespace

DeltaReport delta_rank_check(const BlowupContext& ctx, int n, int d) {
    if (n < 2) throw std::invalid_argument("the blowup sequence needs n >= 2");
    if (d < 0) throw std::invalid_argument("negative dimension");
    DeltaReport r;
    r.n = n;
    r.d = d;
    SwComplex tilde = build_sw(SwLayout::reduced_at(ctx.g, ctx.v, ctx.ref), n, d);
    SwComplex sn = build_swiatkowski(ctx.gv, n, d);
    SwComplex sn1 = build_swiatkowski(ctx.gv, n - 1, d);
    auto ht = homology(tilde.cx), hn = homology(sn.cx), hn1 = homology(sn1.cx);
    r.beta_tilde = ht.betti(d);
    r.beta_n = hn.betti(d);
    r.beta_n1 = hn1.betti(d);
    r.beta_n1_below = hn1.betti(d - 1);
    r.rank_delta = delta_rank(ctx, sn, sn1, d);
    r.rank_delta_below = d >= 1 ? delta_rank(ctx, sn, sn1, d - 1) : 0;
    int64_t copies = ctx.degree() - 1;
    r.predicted = (r.beta_n - r.rank_delta) + (copies * r.beta_n1_below - r.rank_delta_below);
    r.holds = r.predicted == r.beta_tilde;
    r.injective = r.rank_delta == copies * r.beta_n1;
    return r;
}

}  // namespace gcs
