#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gcs/complex.hpp"

namespace gcs {

struct BoundaryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SnfResult {
    int64_t rank = 0;
    std::vector<int64_t> divisors;  // d_1 | d_2 | ... (all nonzero diagonal entries)
    bool promoted = false;          // arbitrary precision was needed
    std::vector<int64_t> torsion() const;
};

SnfResult smith_normal_form(const SparseMatrix& m);

struct DimHomology {
    int64_t betti = 0;
    std::vector<int64_t> torsion;
    bool operator==(const DimHomology& o) const { return betti == o.betti && torsion == o.torsion; }
};

struct HomologyResult {
    std::vector<DimHomology> dims;  // index = dimension, up to the last exact one
    std::vector<int64_t> cells;     // input cell counts
    std::vector<int64_t> reduced_cells;
    bool promoted = false;

    int64_t betti(int d) const { return d >= 0 && d < static_cast<int>(dims.size()) ? dims[d].betti : 0; }
    const std::vector<int64_t>& torsion(int d) const;
    std::vector<int64_t> betti_vector() const;
    int64_t betti_euler() const;
    bool same_homology(const HomologyResult& o) const;
    // {"dims":{"2":{"betti":40,"torsion":[2]}}}
    std::string to_json(int dmin = 0, int dmax = -1) const;
};

struct HomologyOptions {
    bool check_boundary = true;  // assert d∘d = 0 first
    bool reduce = true;          // whole-complex elimination before SNF
    int64_t max_residual = 40'000'000;  // dense SNF entry budget
};

HomologyResult homology(const ChainComplex& c, const HomologyOptions& opt = {});

// unit-pivot elimination over the whole complex; homology is unchanged
ChainComplex morse_reduce(const ChainComplex& c);

std::optional<Chain> solve_boundary(const ChainComplex& c, const Chain& b);

// rank of the classes of the given d-cycles in H_d (over Q)
int64_t span_rank(const ChainComplex& c, const std::vector<Chain>& cycles, int d, int64_t* betti = nullptr);

int64_t matrix_rank(const SparseMatrix& m);

// basis of ker(m) over Q, scaled to primitive integer vectors
std::vector<Column> kernel_basis(const SparseMatrix& m);

}  // namespace gcs
