#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "gcs/blowup.hpp"
#include "gcs/cycles.hpp"
#include "gcs/formulas.hpp"
#include "gcs/graph.hpp"
#include "gcs/homology.hpp"
#include "gcs/pipeline.hpp"
#include "gcs/suites.hpp"

namespace py = pybind11;
using namespace gcs;

namespace {

// results cross the boundary as JSON text; the python side parses them
std::string compute_json(const std::string& graph, int n, const std::string& model, const std::string& dims, bool reduce,
                         int64_t max_cells, double time_budget) {
    RunConfig cfg;
    cfg.graph = graph;
    cfg.n = n;
    cfg.model = model;
    cfg.reduce = reduce;
    cfg.max_cells = max_cells;
    cfg.time_budget = time_budget;
    if (!dims.empty()) std::tie(cfg.dmin, cfg.dmax) = parse_dims(dims);
    py::gil_scoped_release nogil;
    return compute(cfg).to_json();
}

py::dict relation(const std::string& name) {
    RelationReport r;
    {
        py::gil_scoped_release nogil;
        r = verify_chain_identity(name);
    }
    py::dict d;
    d["name"] = r.name;
    d["holds"] = r.holds;
    d["level"] = r.level;
    d["detail"] = r.detail;
    return d;
}

py::dict span(const std::string& graph, int n, int d) {
    SpanReport r;
    {
        py::gil_scoped_release nogil;
        r = product_span(load_graph(graph), n, d);
    }
    py::dict out;
    out["cycles"] = r.cycles;
    out["span"] = r.span;
    out["betti"] = r.betti;
    return out;
}

py::dict snf(const std::vector<std::vector<int64_t>>& m) {
    auto s = smith_normal_form(SparseMatrix::from_dense(m));
    py::dict d;
    d["rank"] = s.rank;
    d["divisors"] = s.divisors;
    d["promoted"] = s.promoted;
    return d;
}

py::list groupings(int m, int k) {
    py::list out;
    for (const auto& g : enumerate_groupings(m, k)) {
        py::dict d;
        d["groups"] = g.groups;
        d["count"] = g.count;
        d["mu"] = g.mu;
        out.append(d);
    }
    return out;
}

py::dict blowup_check(const std::string& graph, const std::string& vertex, int n, int d) {
    Graph g = load_graph(graph);
    auto ctx = blowup(g, g.vertex(vertex));
    py::dict out;
    auto ex = check_exactness(ctx, n);
    out["exact"] = ex.ok();
    if (d >= 0) {
        auto r = delta_rank_check(ctx, n, d);
        out["beta_tilde"] = r.beta_tilde;
        out["predicted"] = r.predicted;
        out["holds"] = r.holds;
    }
    return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "homology of configuration spaces of graphs";

    py::register_exception<GraphError>(m, "GraphError", PyExc_ValueError);
    py::register_exception<FormulaError>(m, "FormulaError", PyExc_ValueError);
    py::register_exception<CycleError>(m, "CycleError", PyExc_ValueError);

    m.def("compute_json", &compute_json, py::arg("graph"), py::arg("n"), py::arg("model") = "swiatkowski",
          py::arg("dims") = "", py::arg("reduce") = true, py::arg("max_cells") = 0, py::arg("time_budget") = 0.0);
    m.def("predict_json", [](const std::string& f, int n, int d) { return predict(f, n, d).to_json(); },
          py::arg("family"), py::arg("n"), py::arg("d"));
    m.def("verify_json", [](const std::string& suite, int threads) {
        py::gil_scoped_release nogil;
        return run_suite(suite, threads).to_json();
    }, py::arg("suite"), py::arg("threads") = 0);
    m.def("suite_names", &suite_names);
    m.def("relation_names", &relation_names);
    m.def("relation", &relation, py::arg("name"));
    m.def("product_span", &span, py::arg("graph"), py::arg("n"), py::arg("d"));
    m.def("smith_normal_form", &snf, py::arg("matrix"));
    m.def("enumerate_groupings", &groupings, py::arg("m"), py::arg("k"));
    m.def("blowup_check", &blowup_check, py::arg("graph"), py::arg("vertex"), py::arg("n"), py::arg("d") = -1);
    m.def("graph_json", [](const std::string& src) { return load_graph(src).to_json(); }, py::arg("source"));
    m.def("dump_complex", [](const std::string& graph, int n, const std::string& model, bool reduce) {
        RunConfig cfg;
        cfg.graph = graph, cfg.n = n, cfg.model = model, cfg.reduce = reduce;
        return build_model(cfg).cx.dump_json();
    }, py::arg("graph"), py::arg("n"), py::arg("model") = "swiatkowski", py::arg("reduce") = true);
}
