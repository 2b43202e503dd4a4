#include "gcs/complex.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "json.hpp"

namespace gcs {

void normalize_column(Column& c) {
    std::sort(c.begin(), c.end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
    size_t w = 0;
    for (size_t i = 0; i < c.size();) {
        int32_t r = c[i].first;
        int64_t s = 0;
        for (; i < c.size() && c[i].first == r; ++i) s += c[i].second;
        if (s) c[w++] = {r, s};
    }
    c.resize(w);
}

int64_t SparseMatrix::nnz() const {
    int64_t s = 0;
    for (const auto& c : cols) s += static_cast<int64_t>(c.size());
    return s;
}

SparseMatrix SparseMatrix::transposed() const {
    SparseMatrix t;
    t.rows = num_cols();
    t.cols.assign(rows, {});
    for (int64_t j = 0; j < num_cols(); ++j)
        for (auto [r, v] : cols[j]) t.cols[r].push_back({static_cast<int32_t>(j), v});
    return t;
}

std::vector<std::vector<int64_t>> SparseMatrix::dense() const {
    std::vector<std::vector<int64_t>> m(rows, std::vector<int64_t>(num_cols(), 0));
    for (int64_t j = 0; j < num_cols(); ++j)
        for (auto [r, v] : cols[j]) m[r][j] = v;
    return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<int64_t>>& m) {
    SparseMatrix s;
    s.rows = static_cast<int64_t>(m.size());
    size_t nc = m.empty() ? 0 : m[0].size();
    s.cols.assign(nc, {});
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < nc; ++j)
            if (m[i][j]) s.cols[j].push_back({static_cast<int32_t>(i), m[i][j]});
    return s;
}

// ------------------------------------------------------------------ Chain

int64_t Chain::coeff(int32_t cell) const {
    auto it = std::lower_bound(terms.begin(), terms.end(), Entry{cell, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    return it != terms.end() && it->first == cell ? it->second : 0;
}

void Chain::add(int32_t cell, int64_t c) {
    if (!c) return;
    auto it = std::lower_bound(terms.begin(), terms.end(), Entry{cell, 0},
                               [](const Entry& a, const Entry& b) { return a.first < b.first; });
    if (it != terms.end() && it->first == cell) {
        it->second += c;
        if (!it->second) terms.erase(it);
    } else {
        terms.insert(it, {cell, c});
    }
}

Chain& Chain::operator+=(const Chain& o) {
    Column m = terms;
    m.insert(m.end(), o.terms.begin(), o.terms.end());
    normalize_column(m);
    terms = std::move(m);
    return *this;
}

Chain& Chain::operator-=(const Chain& o) { return *this += o * -1; }

Chain Chain::operator*(int64_t s) const {
    Chain r{dim, {}};
    if (!s) return r;
    r.terms = terms;
    for (auto& t : r.terms) t.second *= s;
    return r;
}

Chain Chain::from_map(int dim, std::vector<Entry> raw) {
    normalize_column(raw);
    return Chain{dim, std::move(raw)};
}

// ----------------------------------------------------------- ChainComplex

int64_t ChainComplex::euler() const {
    int64_t s = 0;
    for (size_t d = 0; d < cells.size(); ++d) s += (d % 2 ? -1 : 1) * cells[d];
    return s;
}

int64_t ChainComplex::total_cells() const {
    int64_t s = 0;
    for (auto c : cells) s += c;
    return s;
}

Chain ChainComplex::boundary(const Chain& c) const {
    Chain r{c.dim - 1, {}};
    if (c.dim <= 0 || c.dim > top_dim()) return r;
    Column acc;
    for (auto [i, v] : c.terms)
        for (auto [row, x] : bd[c.dim].cols.at(i)) acc.push_back({row, x * v});
    normalize_column(acc);
    r.terms = std::move(acc);
    return r;
}

Chain ChainComplex::boundary_of_cell(int d, int64_t idx) const {
    Chain c{d, {{static_cast<int32_t>(idx), 1}}};
    return boundary(c);
}

int ChainComplex::check_dd() const {
    for (int d = 2; d <= top_dim(); ++d) {
        for (int64_t j = 0; j < cells[d]; ++j) {
            auto b = boundary(boundary_of_cell(d, j));
            if (!b.empty()) return d;
        }
    }
    return -1;
}

bool ChainComplex::is_cycle(const Chain& c) const { return boundary(c).empty(); }

ChainComplex ChainComplex::with_extra_cells(int d, const std::vector<Chain>& cycles) const {
    ChainComplex r = *this;
    r.cell_name = nullptr;
    while (r.top_dim() < d + 1) {
        r.cells.push_back(0);
        r.bd.push_back(SparseMatrix{r.cells[r.cells.size() - 2], {}});
    }
    if (r.bd.size() < r.cells.size()) r.bd.resize(r.cells.size());
    for (const auto& z : cycles) {
        if (z.dim != d) throw std::invalid_argument("extra cell boundary has wrong dimension");
        r.bd[d + 1].cols.push_back(z.terms);
        r.cells[d + 1]++;
    }
    r.bd[d + 1].rows = r.cells[d];
    return r;
}

ChainComplex ChainComplex::dual() const {
    ChainComplex r;
    int D = top_dim();
    r.cells.assign(D + 1, 0);
    r.bd.assign(D + 1, {});
    for (int k = 0; k <= D; ++k) r.cells[k] = cells[D - k];
    // dual bd_k : C*_k = C_{D-k} -> C*_{k-1} = C_{D-k+1}, transpose of bd_{D-k+1}
    for (int k = 1; k <= D; ++k) r.bd[k] = bd[D - k + 1].transposed();
    r.exact_to = -1;
    return r;
}

std::string ChainComplex::dump_json() const {
    nlohmann::ordered_json j;
    j["dims"] = cells;
    nlohmann::ordered_json b = nlohmann::ordered_json::object();
    for (int d = 1; d <= top_dim(); ++d) {
        nlohmann::ordered_json t = nlohmann::ordered_json::array();
        for (int64_t c = 0; c < bd[d].num_cols(); ++c)
            for (auto [r, v] : bd[d].cols[c]) t.push_back({r, c, v});
        b[std::to_string(d)] = t;
    }
    j["boundary"] = b;
    return j.dump();
}

ChainComplex ChainComplex::from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    ChainComplex c;
    c.cells = j.at("dims").get<std::vector<int64_t>>();
    c.bd.assign(c.cells.size(), {});
    for (int d = 1; d <= c.top_dim(); ++d) {
        c.bd[d].rows = c.cells[d - 1];
        c.bd[d].cols.assign(c.cells[d], {});
        auto key = std::to_string(d);
        if (!j["boundary"].contains(key)) continue;
        for (const auto& t : j["boundary"][key]) {
            int64_t r = t[0], col = t[1], v = t[2];
            if (r < 0 || r >= c.cells[d - 1] || col < 0 || col >= c.cells[d])
                throw std::invalid_argument("boundary triplet out of range");
            c.bd[d].cols[col].push_back({static_cast<int32_t>(r), v});
        }
        for (auto& col : c.bd[d].cols) normalize_column(col);
    }
    return c;
}

}  // namespace gcs
