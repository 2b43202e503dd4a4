#pragma once

#include <functional>
#include <string>
#include <vector>

#include "gcs/homology.hpp"

namespace gcs {

struct CheckRow {
    std::string id;        // e.g. "K4 n=6 beta_3"
    std::string citation;  // the table cell or statement checked
    std::string expected;
    std::string computed;
    bool pass = false;
    double seconds = 0;
};

struct SuiteReport {
    std::string suite;
    std::vector<CheckRow> rows;

    bool ok() const;
    int failures() const;
    std::string to_json() const;
    std::string to_text() const;
    std::string to_csv() const;
};

// paper-tables-core, paper-tables-extended, relations, cross-model, formula-engine
std::vector<std::string> suite_names();
SuiteReport run_suite(const std::string& name, int threads = 0);

// pieces shared with the acceptance binary; each returns its rows
using RowTask = std::function<std::vector<CheckRow>()>;
SuiteReport run_tasks(const std::string& name, const std::vector<RowTask>& tasks, int threads = 0);

// full homology of the fully reduced Swiatkowski complex, memoized per (graph, n)
const HomologyResult& engine(const std::string& graph, int n);

std::vector<RowTask> table_tasks(const std::string& group);  // k4, k33, k5, wheel, petersen, extended
std::vector<RowTask> formula_tasks(const std::string& group);  // k4, k33, wheel, groupings, tree-net, k2p
std::vector<RowTask> relation_tasks();
std::vector<RowTask> cross_model_tasks();
std::vector<RowTask> generation_tasks();
std::vector<RowTask> property_tasks();    // dd, Euler, reduction invariance, SNF
std::vector<RowTask> structural_tasks();  // vanishing above min(n, N), torsion orders

}  // namespace gcs
