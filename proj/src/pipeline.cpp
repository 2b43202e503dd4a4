#include "gcs/pipeline.hpp"

#include <chrono>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "json.hpp"

#include "gcs/abrams.hpp"
#include "gcs/graph.hpp"
#include "gcs/swiatkowski.hpp"

namespace gcs {

void RunConfig::validate() const {
    if (n < 1) throw std::invalid_argument("n must be >= 1");
    if (max_cells < 0 || max_memory_mb < 0 || time_budget < 0) throw std::invalid_argument("negative resource limit");
    if (model != "swiatkowski" && model != "abrams") throw std::invalid_argument("unknown model '" + model + "'");
    if (dmin < 0) throw std::invalid_argument("negative dimension");
    if (dmax >= 0 && dmax < dmin) throw std::invalid_argument("empty dimension range");
}

std::pair<int, int> parse_dims(const std::string& s) {
    auto num = [&](const std::string& t) {
        size_t pos = 0;
        int v = std::stoi(t, &pos);
        if (pos != t.size() || v < 0) throw std::invalid_argument("bad dimension '" + t + "'");
        return v;
    };
    try {
        if (auto k = s.find('-'); k != std::string::npos) return {num(s.substr(0, k)), num(s.substr(k + 1))};
        if (auto k = s.find(','); k != std::string::npos) {
            int lo = INT32_MAX, hi = -1;
            std::stringstream ss(s);
            std::string t;
            while (std::getline(ss, t, ',')) {
                int v = num(t);
                lo = std::min(lo, v), hi = std::max(hi, v);
            }
            return {lo, hi};
        }
        int v = num(s);
        return {v, v};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad --dims '" + s + "' (use 2, 1-3 or 2,3)");
    }
}

BuiltModel build_model(const RunConfig& cfg) {
    cfg.validate();
    Graph g = load_graph(cfg.graph);
    BuiltModel b;
    b.essential = g.essential_count();
    if (cfg.model == "abrams") {
        Graph h = g;
        if (cfg.subdivide) {
            b.subdivision = subdivision_factor(g, cfg.n);
            h = subdivide_for(g, cfg.n);
        }
        auto A = build_abrams(h, cfg.n);
        b.cx = std::move(A.cx);
        return b;
    }
    // always the whole complex: truncating above the requested dimensions leaves the top
    // cells unpaired and makes the elimination residual much larger
    auto S = cfg.reduce ? build_fully_reduced(g, cfg.n) : build_swiatkowski(g, cfg.n);
    b.cx = std::move(S.cx);
    return b;
}

int thread_count() {
    if (const char* e = std::getenv("GCS_THREADS")) {
        int t = std::atoi(e);
        if (t >= 1) return t;
    }
    unsigned h = std::thread::hardware_concurrency();
    return h ? static_cast<int>(h) : 1;
}

ComputeResult compute(const RunConfig& cfg) {
    auto t0 = std::chrono::steady_clock::now();
    auto secs = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
    ComputeResult r;
    r.cfg = cfg;
    BuiltModel b = build_model(cfg);
    r.subdivision = b.subdivision;
    r.essential = b.essential;
    r.cells = b.cx.cells;
    bool full = b.cx.exact_to < 0;
    if (full) r.euler = b.cx.euler();
    auto stop = [&](std::string why) {
        r.aborted = true;
        r.abort_reason = std::move(why);
        r.elapsed_ms = static_cast<int64_t>(secs() * 1000);
        return r;
    };
    if (cfg.max_cells > 0 && b.cx.total_cells() > cfg.max_cells)
        return stop("complex has " + std::to_string(b.cx.total_cells()) + " cells, above --max-cells");
    if (cfg.time_budget > 0 && secs() > cfg.time_budget) return stop("time budget exhausted after building the complex");
    HomologyOptions opt;
    opt.reduce = cfg.reduce;
    if (cfg.max_memory_mb > 0) {
        int64_t budget = cfg.max_memory_mb << 20, nnz = 0;
        for (const auto& m : b.cx.bd) nnz += m.nnz();
        if (nnz * static_cast<int64_t>(sizeof(Entry)) > budget)
            return stop("boundary matrices need about " + std::to_string((nnz * static_cast<int64_t>(sizeof(Entry))) >> 20) +
                        " MB, above --max-memory");
        opt.max_residual = budget / static_cast<int64_t>(sizeof(int64_t));
    }
    try {
        r.H = homology(b.cx, opt);
    } catch (const ResourceError& e) {
        return stop(e.what());
    }
    if (r.euler && static_cast<int>(r.H.dims.size()) == b.cx.top_dim() + 1) r.euler_consistent = *r.euler == r.H.betti_euler();
    r.elapsed_ms = static_cast<int64_t>(secs() * 1000);
    if (cfg.time_budget > 0 && secs() > cfg.time_budget) {
        r.aborted = true;
        r.abort_reason = "time budget exceeded during homology (result is complete)";
    }
    return r;
}

namespace {

int hi_dim(const ComputeResult& r) {
    int top = static_cast<int>(r.H.dims.size()) - 1;
    return r.cfg.dmax < 0 ? top : std::min(top, r.cfg.dmax);
}

}  // namespace

std::string ComputeResult::to_json() const {
    nlohmann::ordered_json j;
    j["graph"] = cfg.graph;
    j["model"] = cfg.model;
    j["n"] = cfg.n;
    if (cfg.model == "abrams") j["subdivision"] = subdivision;
    nlohmann::ordered_json ds = nlohmann::ordered_json::object();
    if (!H.dims.empty())
        for (int d = cfg.dmin; d <= hi_dim(*this); ++d)
            ds[std::to_string(d)] = {{"betti", H.dims[d].betti}, {"torsion", H.dims[d].torsion}};
    j["dims"] = ds;
    j["cells"] = cells;
    if (euler) j["euler"] = *euler;
    else j["euler"] = nullptr;
    j["reduced_cells"] = H.reduced_cells;
    j["euler_consistent"] = euler_consistent;
    if (H.promoted) j["promoted"] = true;
    if (aborted) {
        j["aborted"] = true;
        j["reason"] = abort_reason;
    }
    j["elapsed_ms"] = elapsed_ms;
    return j.dump();
}

std::string ComputeResult::to_text() const {
    std::ostringstream o;
    o << cfg.graph << "  model=" << cfg.model << "  n=" << cfg.n;
    if (cfg.model == "abrams") o << "  subdivision=" << subdivision;
    o << "\ncells:";
    for (auto c : cells) o << " " << c;
    if (euler) o << "   euler " << *euler;
    o << "\n";
    if (aborted) o << "ABORTED: " << abort_reason << "\n";
    if (!H.dims.empty())
        for (int d = cfg.dmin; d <= hi_dim(*this); ++d) {
            o << "H_" << d << " = Z^" << H.dims[d].betti;
            for (auto t : H.dims[d].torsion) o << " + Z_" << t;
            o << "\n";
        }
    o << "elapsed " << elapsed_ms << " ms\n";
    return o.str();
}

std::string ComputeResult::to_csv() const {
    std::ostringstream o;
    o << "graph,model,n,d,betti,torsion,cells\n";
    if (H.dims.empty()) return o.str();
    for (int d = cfg.dmin; d <= hi_dim(*this); ++d) {
        o << '"' << cfg.graph << "\"," << cfg.model << "," << cfg.n << "," << d << "," << H.dims[d].betti << ",";
        for (size_t i = 0; i < H.dims[d].torsion.size(); ++i) o << (i ? ";" : "") << H.dims[d].torsion[i];
        o << "," << (d < static_cast<int>(cells.size()) ? cells[d] : 0) << "\n";
    }
    return o.str();
}

}  // namespace gcs
