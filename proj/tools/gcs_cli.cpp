// gcs: homology of graph configuration spaces from the command line
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gcs/abrams.hpp"
#include "gcs/blowup.hpp"
#include "gcs/cycles.hpp"
#include "gcs/formulas.hpp"
#include "gcs/graph.hpp"
#include "gcs/pipeline.hpp"
#include "gcs/suites.hpp"
#include "gcs/swiatkowski.hpp"

using namespace gcs;
using json = nlohmann::ordered_json;

namespace {

std::string emit(const SuiteReport& r, const std::string& fmt) {
    if (fmt == "json") return r.to_json() + "\n";
    if (fmt == "csv") return r.to_csv();
    return r.to_text();
}

int report_exit(const SuiteReport& r) {
    if (r.ok()) return 0;
    // nonzero, and names the failing rows on stderr
    for (const auto& row : r.rows)
        if (!row.pass) std::cerr << "failed: " << row.id << "\n";
    return 1;
}

std::string prediction_text(const FormulaPrediction& p) {
    std::ostringstream o;
    o << p.family << " n=" << p.n << " d=" << p.d << ": ";
    if (p.value) o << *p.value;
    else o << "out-of-range";
    o << "  (" << p.provenance << ")\n";
    for (const auto& f : p.flags) o << "  flag: " << f << "\n";
    return o.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Homology of configuration spaces of graphs"};
    app.require_subcommand(1);
    std::string fmt = "json";

    // compute
    RunConfig cfg;
    std::string dims;
    auto* compute_cmd = app.add_subcommand("compute", "homology of C_n(graph)");
    compute_cmd->add_option("--graph", cfg.graph, "family DSL (wheel:5, k33, petersen:10, ...) or graph JSON file")->required();
    compute_cmd->add_option("--model", cfg.model, "swiatkowski or abrams")->check(CLI::IsMember({"swiatkowski", "abrams"}));
    compute_cmd->add_option("-n", cfg.n, "number of particles")->required();
    compute_cmd->add_option("--dims", dims, "dimensions to report: 2, 1-3 or 2,3");
    compute_cmd->add_flag("--reduce,!--no-reduce", cfg.reduce, "fully reduced complex and elimination (default on)");
    compute_cmd->add_flag("--subdivide,!--no-subdivide", cfg.subdivide, "abrams: subdivide automatically (default on)");
    compute_cmd->add_option("--max-cells", cfg.max_cells, "abort above this many cells");
    compute_cmd->add_option("--max-memory", cfg.max_memory_mb, "approximate memory bound in MB");
    compute_cmd->add_option("--time-budget", cfg.time_budget, "seconds");
    compute_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "csv", "text"}));

    // predict
    std::string family;
    int pn = 0, pd = 0;
    auto* predict_cmd = app.add_subcommand("predict", "closed-form Betti number");
    predict_cmd->add_option("family", family, "wheel:m, k4, k33, linear_tree:m, net:m, theta:p, complete_bipartite:2,p")
        ->required();
    predict_cmd->add_option("-n", pn)->required();
    predict_cmd->add_option("-d", pd)->required();
    predict_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));

    // verify
    std::string suite;
    int threads = 0;
    auto* verify_cmd = app.add_subcommand("verify", "regression suites against the published tables");
    verify_cmd->add_option("suite", suite)->required()->check(CLI::IsMember(suite_names()));
    verify_cmd->add_option("--threads", threads, "worker threads (default: GCS_THREADS or all cores)");
    verify_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "csv", "text"}));

    // cycles
    auto* cycles_cmd = app.add_subcommand("cycles", "relations among distinguished cycles");
    cycles_cmd->require_subcommand(1);
    std::string rel = "all";
    auto* rel_cmd = cycles_cmd->add_subcommand("relations", "chain- or homology-level relation checks");
    rel_cmd->add_option("name", rel, "y-ab, theta5, theta3, theta-dist, prod-rel or all");
    rel_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));
    std::string cg;
    int cn = 0, cd = 0;
    auto* span_cmd = cycles_cmd->add_subcommand("span", "rank of the product d-cycles in H_d");
    span_cmd->add_option("--graph", cg)->required();
    span_cmd->add_option("-n", cn)->required();
    span_cmd->add_option("-d", cd)->required();
    span_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));
    std::string vname;
    int bd = -1;
    auto* blow_cmd = cycles_cmd->add_subcommand("blowup", "exactness and connecting-map rank at a vertex");
    blow_cmd->add_option("--graph", cg)->required();
    blow_cmd->add_option("--vertex", vname, "vertex name")->required();
    blow_cmd->add_option("-n", cn)->required();
    blow_cmd->add_option("-d", bd, "also compare beta_d against the connecting-map ranks");
    blow_cmd->add_option("--format", fmt)->check(CLI::IsMember({"json", "text"}));

    // dump-complex
    auto* dump_cmd = app.add_subcommand("dump-complex", "boundary matrices as JSON");
    dump_cmd->add_option("--graph", cfg.graph)->required();
    dump_cmd->add_option("--model", cfg.model)->check(CLI::IsMember({"swiatkowski", "abrams"}));
    dump_cmd->add_option("-n", cfg.n)->required();
    dump_cmd->add_flag("--reduce,!--no-reduce", cfg.reduce, "fully reduced Swiatkowski complex (default on)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*compute_cmd) {
            if (!dims.empty()) std::tie(cfg.dmin, cfg.dmax) = parse_dims(dims);
            auto r = compute(cfg);
            if (fmt == "json") std::cout << r.to_json() << "\n";
            else if (fmt == "csv") std::cout << r.to_csv();
            else std::cout << r.to_text();
            if (!r.euler_consistent) std::cerr << "Euler characteristic mismatch\n";
            return r.aborted ? 3 : (r.euler_consistent ? 0 : 1);
        }
        if (*predict_cmd) {
            auto p = predict(family, pn, pd);
            std::cout << (fmt == "text" ? prediction_text(p) : p.to_json() + "\n");
            return p.in_range() ? 0 : 4;
        }
        if (*verify_cmd) {
            if (fmt == "json" && verify_cmd->count("--format") == 0) fmt = "text";
            auto r = run_suite(suite, threads);
            std::cout << emit(r, fmt);
            return report_exit(r);
        }
        if (*rel_cmd) {
            std::vector<std::string> names = rel == "all" ? relation_names() : std::vector<std::string>{rel};
            bool ok = true;
            json out = json::array();
            for (const auto& nm : names) {
                auto r = verify_chain_identity(nm);
                ok = ok && r.holds;
                if (fmt == "text")
                    std::cout << (r.holds ? "PASS  " : "FAIL  ") << r.name << " [" << r.level << "]  " << r.detail << "\n";
                else
                    out.push_back({{"name", r.name}, {"holds", r.holds}, {"level", r.level}, {"detail", r.detail}});
            }
            if (fmt != "text") std::cout << out.dump() << "\n";
            return ok ? 0 : 1;
        }
        if (*span_cmd) {
            auto r = product_span(load_graph(cg), cn, cd);
            if (fmt == "text")
                std::cout << cg << " n=" << cn << " d=" << cd << ": " << r.cycles << " product cycles span " << r.span
                          << " of beta_" << cd << " = " << r.betti << "\n";
            else
                std::cout << json{{"graph", cg}, {"n", cn}, {"d", cd}, {"cycles", r.cycles}, {"span", r.span},
                                  {"betti", r.betti}}.dump()
                          << "\n";
            return 0;
        }
        if (*blow_cmd) {
            Graph g = load_graph(cg);
            auto ctx = blowup(g, g.vertex(vname));
            auto ex = check_exactness(ctx, cn);
            json out{{"graph", cg},
                     {"vertex", vname},
                     {"n", cn},
                     {"phi_injective", ex.phi_injective},
                     {"psi_surjective", ex.psi_surjective},
                     {"exact_middle", ex.exact_middle},
                     {"phi_chain_map", ex.phi_chain_map},
                     {"psi_chain_map", ex.psi_chain_map}};
            bool ok = ex.ok();
            if (bd >= 0) {
                auto dr = delta_rank_check(ctx, cn, bd);
                out["d"] = bd;
                out["beta_tilde"] = dr.beta_tilde;
                out["predicted"] = dr.predicted;
                out["rank_delta"] = dr.rank_delta;
                out["rank_delta_below"] = dr.rank_delta_below;
                out["delta_injective"] = dr.injective;
                out["holds"] = dr.holds;
                ok = ok && dr.holds;
            }
            if (fmt == "text") {
                for (auto& [k, v] : out.items()) std::cout << k << ": " << v.dump() << "\n";
            } else {
                std::cout << out.dump() << "\n";
            }
            return ok ? 0 : 1;
        }
        if (*dump_cmd) {
            cfg.dmax = -1;
            auto b = build_model(cfg);
            std::cout << b.cx.dump_json() << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
