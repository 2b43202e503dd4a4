#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace gcs {

using Entry = std::pair<int32_t, int64_t>;
using Column = std::vector<Entry>;  // sorted by row, no zeros

struct SparseMatrix {
    int64_t rows = 0;
    std::vector<Column> cols;

    int64_t num_cols() const { return static_cast<int64_t>(cols.size()); }
    int64_t nnz() const;
    SparseMatrix transposed() const;
    // dense row-major copy, for tests and tiny matrices
    std::vector<std::vector<int64_t>> dense() const;
    static SparseMatrix from_dense(const std::vector<std::vector<int64_t>>& m);
};

// finitely supported integer combination of cells of one dimension
struct Chain {
    int dim = 0;
    std::vector<Entry> terms;  // sorted by cell index, nonzero coefficients

    bool empty() const { return terms.empty(); }
    int64_t coeff(int32_t cell) const;
    void add(int32_t cell, int64_t c);  // keeps terms sorted
    Chain& operator+=(const Chain& o);
    Chain& operator-=(const Chain& o);
    Chain operator+(const Chain& o) const { Chain r = *this; return r += o; }
    Chain operator-(const Chain& o) const { Chain r = *this; return r -= o; }
    Chain operator*(int64_t s) const;
    bool operator==(const Chain& o) const { return dim == o.dim && terms == o.terms; }
    static Chain from_map(int dim, std::vector<Entry> raw);  // sums duplicates
};

// graded free chain complex; bd[d] maps d-cells to (d-1)-cells (bd[0] unused)
struct ChainComplex {
    std::vector<int64_t> cells;
    std::vector<SparseMatrix> bd;
    // homology is exact in dimensions <= exact_to (-1: all dimensions)
    int exact_to = -1;
    // optional human readable cell names
    std::function<std::string(int, int64_t)> cell_name;

    int top_dim() const { return static_cast<int>(cells.size()) - 1; }
    int64_t count(int d) const { return d >= 0 && d < static_cast<int>(cells.size()) ? cells[d] : 0; }
    int64_t euler() const;
    int64_t total_cells() const;

    Chain boundary(const Chain& c) const;
    Chain boundary_of_cell(int d, int64_t idx) const;
    // first dimension where bd[d-1]*bd[d] != 0, or -1
    int check_dd() const;
    bool is_cycle(const Chain& c) const;

    // appends cycles as new (d+1)-cells
    ChainComplex with_extra_cells(int d, const std::vector<Chain>& cycles) const;
    // cochain complex viewed as a chain complex: dimension k <-> top-k, transposed maps
    ChainComplex dual() const;

    // {"dims":[...],"boundary":{"1":[[row,col,val],...]}}
    std::string dump_json() const;
    static ChainComplex from_json(const std::string& text);
};

void normalize_column(Column& c);

}  // namespace gcs
