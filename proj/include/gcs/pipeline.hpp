#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gcs/complex.hpp"
#include "gcs/homology.hpp"

namespace gcs {

struct RunConfig {
    std::string graph;                  // family DSL, inline JSON or a JSON file
    std::string model = "swiatkowski";  // or "abrams"
    int n = 1;
    int dmin = 0, dmax = -1;  // -1: up to the top dimension
    bool reduce = true;
    bool subdivide = true;    // abrams: subdivide automatically
    int64_t max_cells = 0;    // 0: unlimited
    double time_budget = 0;   // seconds, 0: unlimited
    int64_t max_memory_mb = 0;  // bounds the boundary matrices and the dense SNF residual, 0: default

    void validate() const;
};

// "2", "1-3", "2,3" -> [lo, hi]
std::pair<int, int> parse_dims(const std::string& s);

struct BuiltModel {
    ChainComplex cx;
    int subdivision = 1;
    int essential = 0;
};

BuiltModel build_model(const RunConfig& cfg);

struct ComputeResult {
    RunConfig cfg;
    int subdivision = 1;
    int essential = 0;
    std::vector<int64_t> cells;
    std::optional<int64_t> euler;  // cell-count Euler characteristic (full complex only)
    HomologyResult H;
    bool aborted = false;
    std::string abort_reason;
    int64_t elapsed_ms = 0;
    bool euler_consistent = true;  // cell-count Euler == Betti Euler (when both known)

    std::string to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

ComputeResult compute(const RunConfig& cfg);

// thread count from GCS_THREADS, else the hardware concurrency
int thread_count();

}  // namespace gcs
