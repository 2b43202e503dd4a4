// acceptance harness: one pass/fail line per criterion
//   gcs_acceptance            all criteria
//   gcs_acceptance 4 9        selected ones
//   -v                        print every row, --extended adds the opt-in table rows
#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <string>
#include <vector>

#include "gcs/suites.hpp"

using namespace gcs;

namespace {

struct Criterion {
    int id;
    const char* title;
    std::function<std::vector<RowTask>()> tasks;
};

std::vector<RowTask> cat(std::initializer_list<std::vector<RowTask>> parts) {
    std::vector<RowTask> out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

bool extended = false;

const std::vector<Criterion>& criteria() {
    static const std::vector<Criterion> c = {
        {1, "K4 Betti table, n = 3..9", [] { return table_tasks("k4"); }},
        {2, "K4 closed forms vs engine, H_5 = 0", [] { return formula_tasks("k4"); }},
        {3, "K33 Betti table and closed forms, n = 2..8", [] { return cat({table_tasks("k33"), formula_tasks("k33")}); }},
        {4, "wheel table W5, W6, W7: engine and wheel formula",
         [] { return cat({table_tasks("wheel"), formula_tasks("wheel")}); }},
        {5, "grouping table for m = 5, 6, 7", [] { return formula_tasks("groupings"); }},
        {6, "Petersen family torsion (P10, P9 at n = 4; --extended for the rest)",
         [] { return extended ? cat({table_tasks("petersen"), table_tasks("extended")}) : table_tasks("petersen"); }},
        {7, "K_{2,p}: Euler characteristic, beta_2, Theta_4 surface, H_1", [] { return formula_tasks("k2p"); }},
        {8, "tree and net closed forms, m = 2..4, n <= 6", [] { return formula_tasks("tree-net"); }},
        {9, "relations among O, Y, Theta and product cycles", [] { return relation_tasks(); }},
        {10, "product cycles generate H_2; one non-product 3-cycle for K33", [] { return generation_tasks(); }},
        {11, "property suites: dd, Euler, reduction, Abrams = Swiatkowski, SNF",
         [] { return cat({property_tasks(), cross_model_tasks()}); }},
        {12, "vanishing above min(n, N) and torsion orders", [] { return structural_tasks(); }},
    };
    return c;
}

}  // namespace

int main(int argc, char** argv) {
    bool verbose = false;
    std::vector<int> pick;
    for (int i = 1; i < argc; ++i) {
        if (!std::strcmp(argv[i], "-v")) verbose = true;
        else if (!std::strcmp(argv[i], "--extended")) extended = true;
        else {
            int k = std::atoi(argv[i]);
            if (k < 1 || k > 12) {
                std::fprintf(stderr, "unknown criterion '%s'\n", argv[i]);
                return 2;
            }
            pick.push_back(k);
        }
    }
    if (pick.empty())
        for (int k = 1; k <= 12; ++k) pick.push_back(k);

    int failed = 0;
    for (int k : pick) {
        const auto& c = criteria()[k - 1];
        auto t0 = std::chrono::steady_clock::now();
        auto rep = run_tasks("criterion " + std::to_string(k), c.tasks());
        double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool ok = rep.ok() && !rep.rows.empty();
        failed += !ok;
        std::printf("criterion %2d: %s  %zu/%zu rows  %.1fs  %s\n", k, ok ? "PASS" : "FAIL",
                    rep.rows.size() - rep.failures(), rep.rows.size(), s, c.title);
        for (const auto& r : rep.rows)
            if (verbose || !r.pass)
                std::printf("    %s %s: expected %s, got %s  [%s]\n", r.pass ? "ok  " : "FAIL", r.id.c_str(),
                            r.expected.c_str(), r.computed.c_str(), r.citation.c_str());
        std::fflush(stdout);
    }
    return failed ? 1 : 0;
}
