#include "gcs/homology.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <numeric>
#include <queue>
#include <tuple>

#include "json.hpp"

namespace gcs {

namespace {

using Big = boost::multiprecision::cpp_int;

struct Overflow {};

// checked machine arithmetic; Big versions never throw
inline int64_t add_(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int64_t sub_(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int64_t mul_(int64_t a, int64_t b) {
    int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow{};
    return r;
}
inline int64_t neg_(int64_t a) { return sub_(0, a); }
inline int64_t abs_(int64_t a) { return a < 0 ? neg_(a) : a; }
inline Big add_(const Big& a, const Big& b) { return a + b; }
inline Big sub_(const Big& a, const Big& b) { return a - b; }
inline Big mul_(const Big& a, const Big& b) { return a * b; }
inline Big neg_(const Big& a) { return -a; }
inline Big abs_(const Big& a) { return a < 0 ? Big(-a) : a; }

inline int64_t to_i64(int64_t a) { return a; }
inline int64_t to_i64(const Big& a) {
    if (a > std::numeric_limits<int64_t>::max() || a < std::numeric_limits<int64_t>::min())
        throw std::overflow_error("integer exceeds 64 bits");
    return static_cast<int64_t>(a);
}

template <class T>
bool is_unit(const T& x) {
    return x == 1 || x == -1;
}

template <class T>
T gcd_(T a, T b) {
    a = abs_(a), b = abs_(b);
    while (b != 0) {
        T t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// nonunit part of a diagonal, normalized to a divisibility chain
template <class T>
std::vector<T> chain_form(std::vector<T> d) {
    std::vector<T> r;
    for (auto& x : d) {
        x = abs_(x);
        if (x != 1) r.push_back(x);
    }
    for (size_t i = 0; i < r.size(); ++i)
        for (size_t j = i + 1; j < r.size(); ++j) {
            T g = gcd_(r[i], r[j]);
            T l = r[i] / g * r[j];
            r[i] = g;
            r[j] = l;
        }
    std::vector<T> out;
    for (auto& x : r)
        if (x != 1) out.push_back(x);
    return out;
}

// ------------------------------------------------------------ dense SNF

template <class T>
struct Dense {
    int64_t m = 0, n = 0;
    std::vector<T> a;
    Dense() = default;
    Dense(int64_t m_, int64_t n_) : m(m_), n(n_), a(static_cast<size_t>(m_ * n_), T(0)) {}
    T& at(int64_t i, int64_t j) { return a[static_cast<size_t>(i * n + j)]; }
};

// diagonalizes A by unimodular operations; row operations are mirrored on
// rhs, column operations accumulated into V (A_final = U A V)
template <class T>
std::vector<T> snf_dense(Dense<T>& A, std::vector<T>* rhs, Dense<T>* V) {
    const int64_t m = A.m, n = A.n;
    std::vector<T> diag;
    auto swap_rows = [&](int64_t i, int64_t k) {
        if (i == k) return;
        for (int64_t j = 0; j < n; ++j) std::swap(A.at(i, j), A.at(k, j));
        if (rhs) std::swap((*rhs)[i], (*rhs)[k]);
    };
    auto swap_cols = [&](int64_t j, int64_t k) {
        if (j == k) return;
        for (int64_t i = 0; i < m; ++i) std::swap(A.at(i, j), A.at(i, k));
        if (V)
            for (int64_t i = 0; i < V->m; ++i) std::swap(V->at(i, j), V->at(i, k));
    };
    // row_i += q row_k
    auto row_axpy = [&](int64_t i, int64_t k, const T& q, int64_t from) {
        for (int64_t j = from; j < n; ++j)
            if (A.at(k, j) != 0) A.at(i, j) = add_(A.at(i, j), mul_(q, A.at(k, j)));
        if (rhs) (*rhs)[i] = add_((*rhs)[i], mul_(q, (*rhs)[k]));
    };
    auto col_axpy = [&](int64_t j, int64_t k, const T& q, int64_t from) {
        for (int64_t i = from; i < m; ++i)
            if (A.at(i, k) != 0) A.at(i, j) = add_(A.at(i, j), mul_(q, A.at(i, k)));
        if (V)
            for (int64_t i = 0; i < V->m; ++i)
                if (V->at(i, k) != 0) V->at(i, j) = add_(V->at(i, j), mul_(q, V->at(i, k)));
    };

    for (int64_t t = 0; t < std::min(m, n); ++t) {
        int64_t bi = -1, bj = -1;
        T best(0);
        for (int64_t i = t; i < m; ++i)
            for (int64_t j = t; j < n; ++j) {
                const T& x = A.at(i, j);
                if (x == 0) continue;
                T ax = abs_(x);
                if (bi < 0 || ax < best) bi = i, bj = j, best = ax;
                if (best == 1) break;
            }
        if (bi < 0) break;
        swap_rows(t, bi);
        swap_cols(t, bj);
        while (true) {
            bool clean = true;
            for (int64_t i = t + 1; i < m; ++i) {
                if (A.at(i, t) == 0) continue;
                T q = A.at(i, t) / A.at(t, t);
                if (q != 0) row_axpy(i, t, neg_(q), t);
                if (A.at(i, t) != 0) clean = false;
            }
            for (int64_t j = t + 1; j < n; ++j) {
                if (A.at(t, j) == 0) continue;
                T q = A.at(t, j) / A.at(t, t);
                if (q != 0) col_axpy(j, t, neg_(q), t);
                if (A.at(t, j) != 0) clean = false;
            }
            if (clean) break;
            int64_t ri = -1, cj = -1;
            T small = abs_(A.at(t, t));
            for (int64_t i = t + 1; i < m; ++i)
                if (A.at(i, t) != 0 && abs_(A.at(i, t)) < small) small = abs_(A.at(i, t)), ri = i, cj = -1;
            for (int64_t j = t + 1; j < n; ++j)
                if (A.at(t, j) != 0 && abs_(A.at(t, j)) < small) small = abs_(A.at(t, j)), cj = j, ri = -1;
            if (ri >= 0) swap_rows(t, ri);
            if (cj >= 0) swap_cols(t, cj);
        }
        diag.push_back(A.at(t, t));
    }
    return diag;
}

// ---------------------------------------------------- complex elimination

template <class T>
class Eliminator {
public:
    using E = std::pair<int32_t, T>;
    using Col = std::vector<E>;

    int D = 0;
    std::vector<std::vector<Col>> col;             // col[d][j], 1 <= d <= D
    std::vector<std::vector<char>> alive;          // 0 <= d <= D
    std::vector<std::vector<int32_t>> rowcnt;      // rowcnt[d][r]
    std::vector<std::vector<std::vector<int32_t>>> rowcols;
    int64_t pivots = 0;

    explicit Eliminator(const ChainComplex& c) {
        D = c.top_dim();
        alive.resize(D + 1);
        for (int d = 0; d <= D; ++d) alive[d].assign(c.cells[d], 1);
        col.resize(D + 1);
        rowcnt.resize(D + 1);
        rowcols.resize(D + 1);
        for (int d = 1; d <= D; ++d) {
            col[d].resize(c.cells[d]);
            rowcnt[d].assign(c.cells[d - 1], 0);
            rowcols[d].resize(c.cells[d - 1]);
            for (int64_t j = 0; j < c.cells[d]; ++j) {
                const auto& src = c.bd[d].cols[j];
                auto& dst = col[d][j];
                dst.reserve(src.size());
                for (auto [r, v] : src) {
                    dst.push_back({r, T(v)});
                    rowcnt[d][r]++;
                    rowcols[d][r].push_back(static_cast<int32_t>(j));
                }
            }
        }
    }

    void run() {
        for (int d = 1; d <= D; ++d)
            for (int32_t j = 0; j < static_cast<int32_t>(col[d].size()); ++j) schedule(d, j);
        while (!pq_.empty()) {
            auto [k, d, j] = pq_.top();
            pq_.pop();
            if (!alive[d][j]) continue;
            int32_t r = -1;
            int64_t cost = 0;
            if (!best(d, j, r, cost)) continue;
            if (cost > k) {
                pq_.push({cost, d, j});
                continue;
            }
            pivot(d, j, r);
        }
    }

    std::vector<int64_t> counts() const {
        std::vector<int64_t> r(D + 1, 0);
        for (int d = 0; d <= D; ++d) r[d] = std::count(alive[d].begin(), alive[d].end(), 1);
        return r;
    }

    // residual matrix for dimension d as a dense block
    Dense<T> residual(int d, std::vector<int32_t>* colmap = nullptr, std::vector<int32_t>* rowmap = nullptr) const {
        std::vector<int32_t> ri(alive[d - 1].size(), -1);
        int32_t nr = 0, nc = 0;
        for (size_t r = 0; r < ri.size(); ++r)
            if (alive[d - 1][r]) ri[r] = nr++;
        for (size_t j = 0; j < col[d].size(); ++j) nc += alive[d][j];
        if (static_cast<double>(nr) * nc > 4e8) throw ResourceError("residual matrix too large for dense SNF");
        Dense<T> M(nr, nc);
        int32_t cj = 0;
        for (size_t j = 0; j < col[d].size(); ++j) {
            if (!alive[d][j]) continue;
            if (colmap) colmap->push_back(static_cast<int32_t>(j));
            for (const auto& [r, v] : col[d][j]) M.at(ri[r], cj) = v;
            ++cj;
        }
        if (rowmap)
            for (size_t r = 0; r < ri.size(); ++r)
                if (alive[d - 1][r]) rowmap->push_back(static_cast<int32_t>(r));
        return M;
    }

private:
    using Item = std::tuple<int64_t, int, int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq_;

    static const T* find(const Col& c, int32_t r) {
        auto it = std::lower_bound(c.begin(), c.end(), r, [](const E& e, int32_t x) { return e.first < x; });
        return it != c.end() && it->first == r ? &it->second : nullptr;
    }

    bool best(int d, int32_t j, int32_t& row, int64_t& cost) const {
        const Col& c = col[d][j];
        int64_t sz = static_cast<int64_t>(c.size());
        bool found = false;
        for (const auto& [r, x] : c) {
            if (!is_unit(x)) continue;
            int64_t k = static_cast<int64_t>(rowcnt[d][r] - 1) * (sz - 1);
            if (!found || k < cost) found = true, cost = k, row = r;
            if (cost == 0) break;
        }
        return found;
    }

    void schedule(int d, int32_t j) {
        int32_t r = -1;
        int64_t cost = 0;
        if (alive[d][j] && best(d, j, r, cost)) pq_.push({cost, d, j});
    }

    // a row dropped to a single entry: its column is now a zero-cost candidate
    void schedule_row(int d, int32_t r) {
        auto& lst = rowcols[d][r];
        std::vector<int32_t> keep;
        for (int32_t c : lst)
            if (alive[d][c] && find(col[d][c], r)) keep.push_back(c);
        std::sort(keep.begin(), keep.end());
        keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
        lst = keep;
        for (int32_t c : keep) schedule(d, c);
    }

    void pivot(int d, int32_t s, int32_t t) {
        ++pivots;
        Col P = std::move(col[d][s]);
        col[d][s].clear();
        col[d][s].shrink_to_fit();
        alive[d][s] = 0;
        T u = *find(P, t);

        std::vector<int32_t> others = rowcols[d][t];
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        std::vector<int32_t> pending;
        for (int32_t c : others) {
            if (c == s || !alive[d][c]) continue;
            const T* ap = find(col[d][c], t);
            if (!ap) continue;
            T f = mul_(*ap, u);  // col_c -= f * P
            Col& C = col[d][c];
            Col out;
            out.reserve(C.size() + P.size());
            size_t i = 0, k = 0;
            while (i < C.size() || k < P.size()) {
                if (k == P.size() || (i < C.size() && C[i].first < P[k].first)) {
                    out.push_back(std::move(C[i++]));
                } else if (i == C.size() || P[k].first < C[i].first) {
                    int32_t r = P[k].first;
                    out.push_back({r, neg_(mul_(f, P[k].second))});
                    rowcnt[d][r]++;
                    rowcols[d][r].push_back(c);
                    ++k;
                } else {
                    int32_t r = C[i].first;
                    T v = sub_(C[i].second, mul_(f, P[k].second));
                    if (v != 0)
                        out.push_back({r, std::move(v)});
                    else if (--rowcnt[d][r] == 1)
                        pending.push_back(r);
                    ++i, ++k;
                }
            }
            C = std::move(out);
            schedule(d, c);
        }
        for (const auto& [r, x] : P)
            if (r != t && --rowcnt[d][r] == 1) pending.push_back(r);
        rowcnt[d][t] = 0;
        rowcols[d][t].clear();
        rowcols[d][t].shrink_to_fit();
        alive[d - 1][t] = 0;

        // drop row s from the next boundary matrix
        if (d + 1 <= D) {
            std::vector<int32_t> up = rowcols[d + 1][s];
            std::sort(up.begin(), up.end());
            up.erase(std::unique(up.begin(), up.end()), up.end());
            for (int32_t c : up) {
                if (!alive[d + 1][c]) continue;
                Col& C = col[d + 1][c];
                auto it = std::lower_bound(C.begin(), C.end(), s, [](const E& e, int32_t x) { return e.first < x; });
                if (it != C.end() && it->first == s) {
                    C.erase(it);
                    schedule(d + 1, c);
                }
            }
            rowcnt[d + 1][s] = 0;
            rowcols[d + 1][s].clear();
            rowcols[d + 1][s].shrink_to_fit();
        }
        // drop column t from the previous one
        if (d - 1 >= 1) {
            Col Q = std::move(col[d - 1][t]);
            col[d - 1][t].clear();
            col[d - 1][t].shrink_to_fit();
            for (const auto& [r, x] : Q)
                if (--rowcnt[d - 1][r] == 1) schedule_row(d - 1, r);
        }
        for (int32_t r : pending)
            if (alive[d - 1][r] && rowcnt[d][r] == 1) schedule_row(d, r);
    }
};

template <class T>
HomologyResult homology_impl(const ChainComplex& c, const HomologyOptions& opt) {
    HomologyResult res;
    res.cells = c.cells;
    const int D = c.top_dim();
    if (D < 0) return res;
    std::vector<int64_t> rank(D + 2, 0);
    std::vector<std::vector<T>> tors(D + 2);
    std::vector<int64_t> left;

    if (opt.reduce) {
        Eliminator<T> E(c);
        E.run();
        left = E.counts();
        for (int d = 1; d <= D; ++d) {
            Dense<T> M = E.residual(d);
            if (M.m * M.n > opt.max_residual) throw ResourceError("residual matrix exceeds the dense SNF budget");
            auto diag = snf_dense<T>(M, nullptr, nullptr);
            rank[d] = static_cast<int64_t>(diag.size());
            tors[d] = chain_form(diag);
        }
    } else {
        left = c.cells;
        for (int d = 1; d <= D; ++d) {
            ChainComplex two;
            two.cells = {c.bd[d].rows, c.bd[d].num_cols()};
            two.bd = {SparseMatrix{}, c.bd[d]};
            Eliminator<T> E(two);
            E.run();
            Dense<T> M = E.residual(1);
            if (M.m * M.n > opt.max_residual) throw ResourceError("residual matrix exceeds the dense SNF budget");
            auto diag = snf_dense<T>(M, nullptr, nullptr);
            rank[d] = E.pivots + static_cast<int64_t>(diag.size());
            tors[d] = chain_form(diag);
        }
    }
    res.reduced_cells = left;
    int exact = c.exact_to < 0 ? D : std::min(D, c.exact_to);
    res.dims.resize(exact + 1);
    for (int d = 0; d <= exact; ++d) {
        res.dims[d].betti = left[d] - rank[d] - rank[d + 1];
        for (const auto& x : tors[d + 1]) res.dims[d].torsion.push_back(to_i64(x));
    }
    return res;
}

template <class T>
ChainComplex reduce_impl(const ChainComplex& c) {
    Eliminator<T> E(c);
    E.run();
    ChainComplex r;
    int D = c.top_dim();
    r.cells = E.counts();
    r.exact_to = c.exact_to;
    r.bd.assign(D + 1, {});
    std::vector<std::vector<int32_t>> idx(D + 1);
    for (int d = 0; d <= D; ++d) {
        idx[d].assign(E.alive[d].size(), -1);
        int32_t k = 0;
        for (size_t i = 0; i < idx[d].size(); ++i)
            if (E.alive[d][i]) idx[d][i] = k++;
    }
    for (int d = 1; d <= D; ++d) {
        r.bd[d].rows = r.cells[d - 1];
        for (size_t j = 0; j < E.col[d].size(); ++j) {
            if (!E.alive[d][j]) continue;
            Column out;
            for (const auto& [row, v] : E.col[d][j]) out.push_back({idx[d - 1][row], to_i64(v)});
            r.bd[d].cols.push_back(std::move(out));
        }
    }
    return r;
}

// ------------------------------------------------------------- solving

template <class T>
std::optional<std::vector<T>> solve_impl(const SparseMatrix& A, const Column& b) {
    using E = std::pair<int32_t, T>;
    using Row = std::vector<E>;
    const int64_t m = A.rows, n = A.num_cols();
    std::vector<Row> R(m);
    std::vector<int32_t> colcnt(n, 0);
    std::vector<std::vector<int32_t>> colrows(n);
    for (int64_t j = 0; j < n; ++j)
        for (auto [r, v] : A.cols[j]) {
            R[r].push_back({static_cast<int32_t>(j), T(v)});
            colcnt[j]++;
            colrows[j].push_back(r);
        }
    std::vector<T> rhs(m, T(0));
    for (auto [r, v] : b) {
        if (r < 0 || r >= m) throw std::invalid_argument("chain index out of range");
        rhs[r] = T(v);
    }
    std::vector<char> row_alive(m, 1), col_alive(n, 1);
    struct Rec {
        int32_t r, c;
        T u;
        Row row;
        T rhs;
    };
    std::vector<Rec> recs;
    auto find = [](const Row& row, int32_t c) -> const T* {
        auto it = std::lower_bound(row.begin(), row.end(), c, [](const E& e, int32_t x) { return e.first < x; });
        return it != row.end() && it->first == c ? &it->second : nullptr;
    };
    using Item = std::tuple<int64_t, int32_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<Item>> pq;
    auto best = [&](int32_t r, int32_t& c, int64_t& cost) {
        bool found = false;
        int64_t sz = static_cast<int64_t>(R[r].size());
        for (const auto& [j, x] : R[r]) {
            if (!is_unit(x)) continue;
            int64_t k = (colcnt[j] - 1) * (sz - 1);
            if (!found || k < cost) found = true, cost = k, c = j;
        }
        return found;
    };
    auto schedule = [&](int32_t r) {
        int32_t c = -1;
        int64_t cost = 0;
        if (row_alive[r] && best(r, c, cost)) pq.push({cost, r});
    };
    for (int32_t r = 0; r < m; ++r) schedule(r);
    while (!pq.empty()) {
        auto [k, r] = pq.top();
        pq.pop();
        if (!row_alive[r]) continue;
        int32_t c = -1;
        int64_t cost = 0;
        if (!best(r, c, cost)) continue;
        if (cost > k) {
            pq.push({cost, r});
            continue;
        }
        const Row P = R[r];
        T u = *find(P, c);
        std::vector<int32_t> others = colrows[c];
        std::sort(others.begin(), others.end());
        others.erase(std::unique(others.begin(), others.end()), others.end());
        for (int32_t i : others) {
            if (i == r || !row_alive[i]) continue;
            const T* ap = find(R[i], c);
            if (!ap) continue;
            T f = mul_(*ap, u);
            Row out;
            size_t x = 0, y = 0;
            Row& C = R[i];
            while (x < C.size() || y < P.size()) {
                if (y == P.size() || (x < C.size() && C[x].first < P[y].first)) {
                    out.push_back(C[x++]);
                } else if (x == C.size() || P[y].first < C[x].first) {
                    out.push_back({P[y].first, neg_(mul_(f, P[y].second))});
                    colcnt[P[y].first]++;
                    colrows[P[y].first].push_back(i);
                    ++y;
                } else {
                    T v = sub_(C[x].second, mul_(f, P[y].second));
                    if (v != 0)
                        out.push_back({C[x].first, v});
                    else
                        colcnt[C[x].first]--;
                    ++x, ++y;
                }
            }
            C = std::move(out);
            rhs[i] = sub_(rhs[i], mul_(f, rhs[r]));
            schedule(i);
        }
        for (const auto& [j, v] : P) colcnt[j]--;
        row_alive[r] = 0;
        col_alive[c] = 0;
        recs.push_back({r, c, u, P, rhs[r]});
        R[r].clear();
    }
    // residual system on surviving rows and columns
    std::vector<int32_t> rows, cols, cidx(n, -1);
    for (int32_t r = 0; r < m; ++r) {
        if (!row_alive[r]) continue;
        if (R[r].empty()) {
            if (rhs[r] != 0) return std::nullopt;
            continue;
        }
        rows.push_back(r);
    }
    for (int32_t j = 0; j < n; ++j)
        if (col_alive[j] && colcnt[j] > 0) cidx[j] = static_cast<int32_t>(cols.size()), cols.push_back(j);
    std::vector<T> x(n, T(0));
    if (!rows.empty()) {
        if (static_cast<double>(rows.size()) * cols.size() > 4e7) throw ResourceError("residual system too large");
        Dense<T> M(rows.size(), cols.size());
        std::vector<T> c(rows.size());
        for (size_t i = 0; i < rows.size(); ++i) {
            c[i] = rhs[rows[i]];
            for (const auto& [j, v] : R[rows[i]]) M.at(i, cidx[j]) = v;
        }
        Dense<T> V(cols.size(), cols.size());
        for (size_t i = 0; i < cols.size(); ++i) V.at(i, i) = 1;
        auto diag = snf_dense<T>(M, &c, &V);
        std::vector<T> z(cols.size(), T(0));
        for (size_t t = 0; t < c.size(); ++t) {
            if (t < diag.size()) {
                if (c[t] % diag[t] != 0) return std::nullopt;
                z[t] = c[t] / diag[t];
            } else if (c[t] != 0) {
                return std::nullopt;
            }
        }
        for (size_t i = 0; i < cols.size(); ++i) {
            T s(0);
            for (size_t k = 0; k < cols.size(); ++k)
                if (V.at(i, k) != 0 && z[k] != 0) s = add_(s, mul_(V.at(i, k), z[k]));
            x[cols[i]] = s;
        }
    }
    for (auto it = recs.rbegin(); it != recs.rend(); ++it) {
        T s = it->rhs;
        for (const auto& [j, v] : it->row)
            if (j != it->c) s = sub_(s, mul_(v, x[j]));
        x[it->c] = mul_(it->u, s);
    }
    return x;
}

template <class F>
auto with_promotion(F&& f, bool* promoted = nullptr) {
    try {
        return f(int64_t{});
    } catch (const Overflow&) {
        if (promoted) *promoted = true;
        return f(Big{});
    }
}

}  // namespace

// ------------------------------------------------------------- public API

std::vector<int64_t> SnfResult::torsion() const {
    std::vector<int64_t> r;
    for (auto d : divisors)
        if (d > 1) r.push_back(d);
    return r;
}

SnfResult smith_normal_form(const SparseMatrix& m) {
    SnfResult res;
    auto run = [&](auto zero) {
        using T = decltype(zero);
        ChainComplex two;
        two.cells = {m.rows, m.num_cols()};
        two.bd = {SparseMatrix{}, m};
        Eliminator<T> E(two);
        E.run();
        Dense<T> M = E.residual(1);
        auto diag = snf_dense<T>(M, nullptr, nullptr);
        auto ch = chain_form(diag);
        SnfResult r;
        r.rank = E.pivots + static_cast<int64_t>(diag.size());
        r.divisors.assign(r.rank - ch.size(), 1);
        for (const auto& x : ch) r.divisors.push_back(to_i64(x));
        return r;
    };
    bool promoted = false;
    res = with_promotion(run, &promoted);
    res.promoted = promoted;
    return res;
}

const std::vector<int64_t>& HomologyResult::torsion(int d) const {
    static const std::vector<int64_t> none;
    return d >= 0 && d < static_cast<int>(dims.size()) ? dims[d].torsion : none;
}

std::vector<int64_t> HomologyResult::betti_vector() const {
    std::vector<int64_t> r;
    for (const auto& d : dims) r.push_back(d.betti);
    return r;
}

int64_t HomologyResult::betti_euler() const {
    int64_t s = 0;
    for (size_t d = 0; d < dims.size(); ++d) s += (d % 2 ? -1 : 1) * dims[d].betti;
    return s;
}

bool HomologyResult::same_homology(const HomologyResult& o) const {
    size_t n = std::min(dims.size(), o.dims.size());
    for (size_t d = 0; d < n; ++d)
        if (!(dims[d] == o.dims[d])) return false;
    return true;
}

std::string HomologyResult::to_json(int dmin, int dmax) const {
    nlohmann::ordered_json j, ds = nlohmann::ordered_json::object();
    int hi = dmax < 0 ? static_cast<int>(dims.size()) - 1 : std::min<int>(dmax, static_cast<int>(dims.size()) - 1);
    for (int d = std::max(0, dmin); d <= hi; ++d) {
        nlohmann::ordered_json x;
        x["betti"] = dims[d].betti;
        x["torsion"] = dims[d].torsion;
        ds[std::to_string(d)] = x;
    }
    j["dims"] = ds;
    return j.dump();
}

HomologyResult homology(const ChainComplex& c, const HomologyOptions& opt) {
    if (opt.check_boundary) {
        int bad = c.check_dd();
        if (bad >= 0) throw BoundaryError("boundary of boundary is nonzero in dimension " + std::to_string(bad));
    }
    bool promoted = false;
    auto r = with_promotion([&](auto zero) { return homology_impl<decltype(zero)>(c, opt); }, &promoted);
    r.promoted = promoted;
    return r;
}

ChainComplex morse_reduce(const ChainComplex& c) {
    return with_promotion([&](auto zero) { return reduce_impl<decltype(zero)>(c); });
}

std::optional<Chain> solve_boundary(const ChainComplex& c, const Chain& b) {
    int d = b.dim + 1;
    if (d < 1) throw std::invalid_argument("no boundary map into dimension " + std::to_string(b.dim));
    if (d > c.top_dim()) {
        if (b.empty()) return Chain{d, {}};
        return std::nullopt;  // no cells above: only zero bounds
    }
    auto sol = with_promotion([&](auto zero) -> std::optional<std::vector<int64_t>> {
        using T = decltype(zero);
        auto x = solve_impl<T>(c.bd[d], b.terms);
        if (!x) return std::nullopt;
        std::vector<int64_t> out(x->size());
        for (size_t i = 0; i < x->size(); ++i) out[i] = to_i64((*x)[i]);
        return out;
    });
    if (!sol) return std::nullopt;
    Chain x{d, {}};
    for (size_t i = 0; i < sol->size(); ++i)
        if ((*sol)[i]) x.terms.push_back({static_cast<int32_t>(i), (*sol)[i]});
    if (!(c.boundary(x) == b)) throw std::logic_error("solve_boundary produced a wrong preimage");
    return x;
}

namespace {

// rank over F_p by column reduction on the lowest row; a lower bound for the rank over Q
int64_t rank_mod_p(const std::vector<const Column*>& cols, int64_t rows) {
    constexpr uint64_t P = 2147483647ULL;  // 2^31 - 1
    auto md = [](int64_t x) { int64_t r = x % static_cast<int64_t>(P); return static_cast<uint64_t>(r < 0 ? r + P : r); };
    auto inv = [](uint64_t a) {
        uint64_t r = 1, e = P - 2;
        while (e) {
            if (e & 1) r = r * a % P;
            a = a * a % P;
            e >>= 1;
        }
        return r;
    };
    using PCol = std::vector<std::pair<int32_t, uint64_t>>;  // sorted by row, pivot normalized to 1
    std::vector<PCol> piv(rows);
    std::vector<char> has(rows, 0);
    int64_t rank = 0;
    PCol cur, tmp;
    for (const Column* c : cols) {
        cur.clear();
        for (auto [r, x] : *c)
            if (md(x)) cur.push_back({r, md(x)});
        while (!cur.empty()) {
            int32_t low = cur.back().first;
            if (!has[low]) {
                uint64_t f = inv(cur.back().second);
                for (auto& e : cur) e.second = e.second * f % P;
                piv[low] = cur;
                has[low] = 1;
                ++rank;
                break;
            }
            // cur -= cur[low] * piv[low]
            uint64_t f = cur.back().second;
            const PCol& q = piv[low];
            tmp.clear();
            size_t i = 0, k = 0;
            while (i < cur.size() || k < q.size()) {
                if (k == q.size() || (i < cur.size() && cur[i].first < q[k].first)) {
                    tmp.push_back(cur[i++]);
                } else if (i == cur.size() || q[k].first < cur[i].first) {
                    tmp.push_back({q[k].first, (P - f * q[k].second % P) % P});
                    ++k;
                } else {
                    uint64_t v = (cur[i].second + P - f * q[k].second % P) % P;
                    if (v) tmp.push_back({cur[i].first, v});
                    ++i, ++k;
                }
            }
            std::swap(cur, tmp);
        }
    }
    return rank;
}

}  // namespace

int64_t span_rank(const ChainComplex& c, const std::vector<Chain>& cycles, int d, int64_t* betti) {
    for (const auto& z : cycles) {
        if (z.dim != d) throw std::invalid_argument("span_rank: chain of wrong dimension");
        if (!c.is_cycle(z)) throw BoundaryError("span_rank: input chain is not a cycle");
    }
    HomologyOptions opt;
    opt.check_boundary = false;
    auto before = homology(c, opt);
    int64_t beta = before.betti(d);
    if (betti) *betti = beta;
    if (beta == 0 || cycles.empty()) return 0;
    // certified shortcut: rk_p [B | Z] - rk_Q B is a lower bound for the rank of the classes over Q,
    // and beta_d an upper bound; rk_Q B follows from the exact Betti numbers below d
    int64_t rkB = 0;  // rank of bd[k], k = 1..d+1
    for (int k = 0; k <= d; ++k) rkB = c.count(k) - before.betti(k) - rkB;
    std::vector<const Column*> cols;
    if (d + 1 <= c.top_dim())
        for (const auto& col : c.bd[d + 1].cols) cols.push_back(&col);
    std::vector<Column> zc;
    zc.reserve(cycles.size());
    for (const auto& z : cycles) zc.push_back(z.terms);
    for (const auto& col : zc) cols.push_back(&col);
    int64_t lower = rank_mod_p(cols, c.count(d)) - rkB;
    if (lower >= beta) return beta;
    auto after = homology(c.with_extra_cells(d, cycles), opt);
    return beta - after.betti(d);
}

int64_t matrix_rank(const SparseMatrix& m) { return smith_normal_form(m).rank; }

std::vector<Column> kernel_basis(const SparseMatrix& m) {
    // fraction-free column echelon form with the column operations tracked
    using BCol = std::vector<std::pair<int32_t, Big>>;
    auto lincomb = [](const BCol& a, const Big& x, const BCol& b, const Big& y) {
        BCol out;  // x*a + y*b
        size_t i = 0, k = 0;
        while (i < a.size() || k < b.size()) {
            if (k == b.size() || (i < a.size() && a[i].first < b[k].first)) {
                out.push_back({a[i].first, x * a[i].second});
                ++i;
            } else if (i == a.size() || b[k].first < a[i].first) {
                out.push_back({b[k].first, y * b[k].second});
                ++k;
            } else {
                Big v = x * a[i].second + y * b[k].second;
                if (v != 0) out.push_back({a[i].first, v});
                ++i, ++k;
            }
        }
        return out;
    };
    std::map<int32_t, size_t> low;
    std::vector<BCol> R, V;
    std::vector<Column> basis;
    for (int64_t j = 0; j < m.num_cols(); ++j) {
        BCol r, v{{static_cast<int32_t>(j), Big(1)}};
        for (auto [row, x] : m.cols[j]) r.push_back({row, Big(x)});
        while (!r.empty()) {
            auto it = low.find(r.back().first);
            if (it == low.end()) break;
            const BCol& pr = R[it->second];
            Big a = r.back().second, p = pr.back().second;
            Big g = gcd_(a, p);
            Big x = p / g, y = -(a / g);
            r = lincomb(r, x, pr, y);
            v = lincomb(v, x, V[it->second], y);
        }
        if (r.empty()) {
            Big g = 0;
            for (auto& [i, x] : v) g = gcd_(g, x);
            Column out;
            for (auto& [i, x] : v) out.push_back({i, to_i64(Big(x / g))});
            basis.push_back(std::move(out));
        } else {
            low[r.back().first] = R.size();
            R.push_back(std::move(r));
            V.push_back(std::move(v));
        }
    }
    return basis;
}

}  // namespace gcs
