#include "gcs/suites.hpp"

#include <atomic>
#include <chrono>
#include <future>
#include <map>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>

#include "json.hpp"

#include "gcs/abrams.hpp"
#include "gcs/blowup.hpp"
#include "gcs/cycles.hpp"
#include "gcs/formulas.hpp"
#include "gcs/graph.hpp"
#include "gcs/pipeline.hpp"
#include "gcs/swiatkowski.hpp"

namespace gcs {

// ------------------------------------------------------------ reports

bool SuiteReport::ok() const { return failures() == 0; }

int SuiteReport::failures() const {
    int f = 0;
    for (const auto& r : rows) f += !r.pass;
    return f;
}

std::string SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["pass"] = ok();
    j["failures"] = failures();
    auto rs = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json x;
        x["id"] = r.id;
        x["citation"] = r.citation;
        x["expected"] = r.expected;
        x["computed"] = r.computed;
        x["pass"] = r.pass;
        rs.push_back(x);
    }
    j["rows"] = rs;
    return j.dump();
}

std::string SuiteReport::to_text() const {
    std::ostringstream o;
    for (const auto& r : rows)
        o << (r.pass ? "PASS  " : "FAIL  ") << r.id << "  expected " << r.expected << "  got " << r.computed << "  ["
          << r.citation << "]\n";
    o << suite << ": " << rows.size() - failures() << "/" << rows.size() << " rows pass\n";
    return o.str();
}

std::string SuiteReport::to_csv() const {
    auto q = [](std::string s) {
        std::string r = "\"";
        for (char c : s) r += c == '"' ? std::string("\"\"") : std::string(1, c);
        return r + "\"";
    };
    std::ostringstream o;
    o << "suite,id,expected,computed,pass,citation\n";
    for (const auto& r : rows)
        o << suite << "," << q(r.id) << "," << q(r.expected) << "," << q(r.computed) << "," << (r.pass ? 1 : 0) << ","
          << q(r.citation) << "\n";
    return o.str();
}

SuiteReport run_tasks(const std::string& name, const std::vector<RowTask>& tasks, int threads) {
    if (threads <= 0) threads = thread_count();
    std::vector<std::vector<CheckRow>> out(tasks.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next++) < tasks.size();) {
            auto t0 = std::chrono::steady_clock::now();
            try {
                out[i] = tasks[i]();
            } catch (const std::exception& e) {
                out[i] = {CheckRow{"task " + std::to_string(i), "", "no error", std::string("error: ") + e.what(), false}};
            }
            double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            for (auto& r : out[i]) r.seconds = s;
        }
    };
    std::vector<std::thread> pool;
    int k = std::min<int>(threads, static_cast<int>(tasks.size()));
    for (int t = 1; t < k; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    SuiteReport rep;
    rep.suite = name;
    for (auto& v : out)  // task order, independent of scheduling
        for (auto& r : v) rep.rows.push_back(std::move(r));
    return rep;
}

// ------------------------------------------------------------ engine cache

namespace {

std::mutex cache_mtx;
std::map<std::string, std::shared_future<HomologyResult>> cache;

// ", torsion [2,2]"; long runs of one order are written "[2 x 73]"
std::string torsion_of(const std::vector<int64_t>& t) {
    if (t.empty()) return ", no torsion";
    std::string s = ", torsion [";
    for (size_t i = 0; i < t.size();) {
        size_t j = i;
        while (j < t.size() && t[j] == t[i]) ++j;
        if (i) s += ",";
        if (j - i > 3) s += std::to_string(t[i]) + " x " + std::to_string(j - i);
        else
            for (size_t k = i; k < j; ++k) s += (k > i ? "," : "") + std::to_string(t[k]);
        i = j;
    }
    return s + "]";
}

std::string fmt_h(const HomologyResult& H, int d) {
    static const std::vector<int64_t> none;
    return std::to_string(H.betti(d)) + torsion_of(d < static_cast<int>(H.dims.size()) ? H.dims[d].torsion : none);
}

std::string torsion_str(int64_t order, int copies) { return torsion_of(std::vector<int64_t>(copies, order)); }

CheckRow row(std::string id, std::string cit, std::string exp, std::string got) {
    bool pass = exp == got;
    return CheckRow{std::move(id), std::move(cit), std::move(exp), std::move(got), pass};
}

CheckRow row_num(std::string id, std::string cit, int64_t exp, int64_t got) {
    return row(std::move(id), std::move(cit), std::to_string(exp), std::to_string(got));
}

// trailing zero groups dropped, so complexes of different top dimension compare
std::string betti_vec(const HomologyResult& H) {
    size_t top = H.dims.size();
    while (top > 1 && H.dims[top - 1].betti == 0 && H.dims[top - 1].torsion.empty()) --top;
    std::string s = "(";
    for (size_t d = 0; d < top; ++d) {
        s += (d ? "," : "") + std::to_string(H.dims[d].betti);
        for (auto t : H.dims[d].torsion) s += "+Z" + std::to_string(t);
    }
    return s + ")";
}

}  // namespace

const HomologyResult& engine(const std::string& graph, int n) {
    std::string key = graph + "|" + std::to_string(n);
    std::promise<HomologyResult> prom;
    std::shared_future<HomologyResult> fut;
    bool mine = false;
    {
        std::lock_guard lk(cache_mtx);
        auto it = cache.find(key);
        if (it == cache.end()) {
            fut = prom.get_future().share();
            cache.emplace(key, fut);
            mine = true;
        } else {
            fut = it->second;
        }
    }
    if (mine) {
        try {
            auto R = build_fully_reduced(load_graph(graph), n);
            prom.set_value(homology(R.cx));
        } catch (...) {
            prom.set_exception(std::current_exception());
        }
    }
    return fut.get();
}

namespace {

std::vector<std::pair<std::string, int>> cached_keys() {
    std::vector<std::pair<std::string, int>> out;
    std::lock_guard lk(cache_mtx);
    for (auto& [k, f] : cache) {
        auto bar = k.rfind('|');
        out.push_back({k.substr(0, bar), std::stoi(k.substr(bar + 1))});
    }
    return out;
}

// ------------------------------------------------------------ tables

// one table row: graph, n, then (d, value) with value -1 for "-"
struct TableRow {
    std::string label, graph;
    int n;
    std::vector<std::pair<int, int64_t>> betti;
    int64_t torsion_order = 0;  // for the Petersen table
    int torsion_copies = 0;
    std::string citation;
};

const std::vector<TableRow>& betti_table() {
    static const std::vector<TableRow> t = [] {
        std::vector<TableRow> v;
        auto add = [&](std::string label, std::string graph, int n, std::vector<std::pair<int, int64_t>> b,
                       std::string cit) { v.push_back({label, graph, n, b, 0, 0, cit}); };
        const char* mt = "Betti table of K4, K33, K5 (torsion-free)";
        int64_t k4[7][3] = {{3, 0, -1}, {9, 0, 0}, {15, 0, 0}, {21, 4, 0}, {27, 16, 0}, {33, 40, 1}, {39, 80, 6}};
        for (int i = 0; i < 7; ++i) add("K4", "k4", 3 + i, {{2, k4[i][0]}, {3, k4[i][1]}, {4, k4[i][2]}}, mt);
        int64_t k33[7][3] = {{0, -1, -1}, {8, 0, -1}, {19, 1, 0}, {28, 10, 0}, {37, 39, 0}, {46, 88, 0}, {55, 157, 15}};
        for (int i = 0; i < 7; ++i) add("K33", "k33", 2 + i, {{2, k33[i][0]}, {3, k33[i][1]}, {4, k33[i][2]}}, mt);
        int64_t k5[6][3] = {{0, -1, -1}, {30, 0, -1}, {76, 1, 0}, {116, 77, 0}, {156, 381, 0}, {196, 961, 0}};
        for (int i = 0; i < 6; ++i) add("K5", "k5", 2 + i, {{2, k5[i][0]}, {3, k5[i][1]}, {4, k5[i][2]}}, mt);
        const char* wt = "wheel Betti table (torsion-free)";
        int64_t w5[6][3] = {{8, 0, -1}, {22, 0, 0}, {34, 4, 0}, {46, 30, 0}, {58, 90, 0}, {70, 196, 13}};
        for (int i = 0; i < 6; ++i) add("W5", "wheel:5", 3 + i, {{2, w5[i][0]}, {3, w5[i][1]}, {4, w5[i][2]}}, wt);
        int64_t w6[5][3] = {{15, 0, -1}, {40, 0, 0}, {60, 15, 0}, {80, 90, 0}, {100, 250, 5}};
        for (int i = 0; i < 5; ++i) add("W6", "wheel:6", 3 + i, {{2, w6[i][0]}, {3, w6[i][1]}, {4, w6[i][2]}}, wt);
        int64_t w7[5][3] = {{24, 0, -1}, {63, 0, 0}, {93, 36, 0}, {123, 197, 0}, {153, 527, 24}};
        for (int i = 0; i < 5; ++i) add("W7", "wheel:7", 3 + i, {{2, w7[i][0]}, {3, w7[i][1]}, {4, w7[i][2]}}, wt);
        const char* pt = "Petersen family table";
        struct P {
            const char* label;
            const char* graph;
            int64_t b2, t2;
            int64_t b3, t3;
        };
        for (auto p : std::vector<P>{{"K6", "k6", 264, 1, 4137, 0},
                                     {"P7", "petersen:7", 177, 1, 2058, 0},
                                     {"K331", "petersen_family:K331", 172, 1, 1919, 0},
                                     {"K44", "complete_bipartite:4,4", 144, 2, 1460, 73},
                                     {"P8", "petersen:8", 114, 1, 986, 0},
                                     {"P9", "petersen:9", 70, 1, 452, 0},
                                     {"P10", "petersen:10", 40, 1, 191, 0}}) {
            v.push_back({p.label, p.graph, 4, {{2, p.b2}}, 2, static_cast<int>(p.t2), pt});
            v.push_back({p.label, p.graph, 6, {{3, p.b3}}, 2, static_cast<int>(p.t3), pt});
        }
        return v;
    }();
    return t;
}

bool in_group(const TableRow& r, const std::string& group) {
    bool pet = r.citation == std::string("Petersen family table");
    if (group == "k4") return r.label == "K4";
    if (group == "k33") return r.label == "K33";
    if (group == "k5") return r.label == "K5" && r.n <= 5;
    if (group == "wheel") return r.label[0] == 'W';
    if (group == "petersen") return pet && r.n == 4 && (r.label == "P10" || r.label == "P9");
    if (group == "extended")
        return (r.label == "K5" && r.n > 5) || (pet && !(r.n == 4 && (r.label == "P10" || r.label == "P9")));
    return false;
}

}  // namespace

std::vector<RowTask> table_tasks(const std::string& group) {
    std::vector<RowTask> tasks;
    for (const auto& r : betti_table()) {
        if (!in_group(r, group)) continue;
        tasks.push_back([r] {
            const auto& H = engine(r.graph, r.n);
            std::vector<CheckRow> out;
            for (auto [d, v] : r.betti) {
                if (v < 0) continue;
                std::string exp = std::to_string(v) + torsion_str(r.torsion_order, r.torsion_copies);
                out.push_back(row(r.label + " n=" + std::to_string(r.n) + " H_" + std::to_string(d), r.citation + ", " +
                                  r.label + " n=" + std::to_string(r.n), exp, fmt_h(H, d)));
            }
            return out;
        });
    }
    return tasks;
}

// ------------------------------------------------------------ formulas

namespace {

struct FanRow {
    int m;
    std::vector<int> groups;
    int64_t N;
    int mu;
};

const std::vector<FanRow>& fan_table() {
    static const std::vector<FanRow> t = {
        {5, {1}, 4, 1},    {5, {1, 1}, 2, 4}, {5, {2}, 4, 3},    {5, {3}, 4, 4},    {5, {4}, 1, 4},
        {6, {1}, 5, 2},    {6, {1, 1}, 5, 4}, {6, {2}, 5, 3},    {6, {2, 1}, 5, 5}, {6, {3}, 5, 4},
        {6, {4}, 5, 5},    {6, {5}, 1, 5},    {7, {1}, 6, 2},    {7, {1, 1}, 9, 4}, {7, {2}, 6, 3},
        {7, {1, 1, 1}, 2, 6}, {7, {2, 1}, 12, 5}, {7, {3}, 6, 4}, {7, {2, 2}, 3, 6}, {7, {3, 1}, 6, 6},
        {7, {4}, 6, 5},    {7, {5}, 6, 6},    {7, {6}, 1, 6},
    };
    return t;
}

std::string comp_str(const std::vector<int>& g) {
    std::string s = "(";
    for (size_t i = 0; i < g.size(); ++i) s += (i ? "," : "") + std::to_string(g[i]);
    return s + ")";
}

CheckRow prediction_row(const std::string& id, const FormulaPrediction& p, int64_t engine_value) {
    std::string got = p.value ? std::to_string(*p.value) : "out-of-range";
    return row(id, "formula: " + p.provenance, std::to_string(engine_value), got);
}

}  // namespace

std::vector<RowTask> formula_tasks(const std::string& group) {
    std::vector<RowTask> tasks;
    if (group == "k4") {
        for (int n = 3; n <= 9; ++n)
            tasks.push_back([n] {
                std::vector<CheckRow> out;
                const auto& H = engine("k4", n);
                for (int d = 2; d <= 5; ++d)
                    out.push_back(prediction_row("K4 formula n=" + std::to_string(n) + " d=" + std::to_string(d),
                                                 betti_K4(n, d), H.betti(d)));
                return out;
            });
    } else if (group == "k33") {
        for (int n = 2; n <= 8; ++n)
            tasks.push_back([n] {
                std::vector<CheckRow> out;
                const auto& H = engine("k33", n);
                for (int d = 2; d <= 6; ++d)
                    out.push_back(prediction_row("K33 formula n=" + std::to_string(n) + " d=" + std::to_string(d),
                                                 betti_K33(n, d), H.betti(d)));
                return out;
            });
    } else if (group == "wheel") {
        for (const auto& r : betti_table()) {
            if (r.label[0] != 'W') continue;
            tasks.push_back([r] {
                std::vector<CheckRow> out;
                int m = r.label[1] - '0';
                for (auto [d, v] : r.betti) {
                    if (v < 0) continue;
                    auto p = betti_wheel(m, r.n, d);
                    std::string id = r.label + " formula n=" + std::to_string(r.n) + " d=" + std::to_string(d);
                    out.push_back(row(id, r.citation + "; " + p.provenance, std::to_string(v),
                                      p.value ? std::to_string(*p.value) : "out-of-range"));
                }
                return out;
            });
        }
    } else if (group == "groupings") {
        tasks.push_back([] {
            std::vector<CheckRow> out;
            for (int m = 5; m <= 7; ++m) {
                std::map<std::vector<int>, Grouping> got;
                for (int k = 1; k < m; ++k)
                    for (auto& g : enumerate_groupings(m, k)) got[g.groups] = g;
                int listed = 0;
                for (const auto& t : fan_table()) {
                    if (t.m != m) continue;
                    ++listed;
                    std::string exp = "N=" + std::to_string(t.N) + " mu=" + std::to_string(t.mu);
                    auto it = got.find(t.groups);
                    std::string g = it == got.end() ? "missing"
                                                    : "N=" + std::to_string(it->second.count) + " mu=" +
                                                          std::to_string(it->second.mu);
                    out.push_back(row("W" + std::to_string(m) + " groups " + comp_str(t.groups),
                                      "grouping table, W" + std::to_string(m), exp, g));
                }
                out.push_back(row_num("W" + std::to_string(m) + " number of groupings", "grouping table", listed,
                                      static_cast<int64_t>(got.size())));
            }
            return out;
        });
    } else if (group == "tree-net") {
        for (int m = 2; m <= 4; ++m)
            for (int n = 1; n <= 6; ++n)
                tasks.push_back([m, n] {
                    std::vector<CheckRow> out;
                    std::string ms = std::to_string(m), ns = std::to_string(n);
                    const auto& T = engine("linear_tree:" + ms, n);
                    const auto& N = engine("net:" + ms, n);
                    for (int d = 0; d <= m; ++d) {
                        std::string ds = std::to_string(d);
                        out.push_back(row_num("T" + ms + " n=" + ns + " d=" + ds, "tree formula C(m,d) C(n,2d)",
                                              T.betti(d), betti_tree_linear(m, n, d)));
                        out.push_back(row_num("N" + ms + " n=" + ns + " d=" + ds, "net formula C(m,d) C(n-1,2d-1)",
                                              N.betti(d), betti_net(m, n, d)));
                    }
                    return out;
                });
    } else if (group == "k2p") {
        for (int p = 3; p <= 5; ++p)
            for (int n = 3; n <= 6; ++n)
                tasks.push_back([p, n] {
                    std::vector<CheckRow> out;
                    std::string g = "complete_bipartite:2," + std::to_string(p);
                    std::string tag = "K2," + std::to_string(p) + " n=" + std::to_string(n);
                    auto v = k2p_values(p, n);
                    auto S = build_swiatkowski(build_family(g), n);
                    out.push_back(row_num(tag + " euler (cell count)", "K2p Euler characteristic lemma", v.euler, S.cx.euler()));
                    const auto& H = engine(g, n);
                    out.push_back(row_num(tag + " beta_2", "K2p beta_2 closed form", v.beta2, H.betti(2)));
                    if (n == 3)
                        out.push_back(row_num(tag + " beta_2 = C(p-1,3)", "K2p three particles", v.beta2_n3, H.betti(2)));
                    int64_t high = 0;
                    for (int d = 3; d < static_cast<int>(H.dims.size()); ++d) high += H.betti(d) + static_cast<int64_t>(H.dims[d].torsion.size());
                    out.push_back(row_num(tag + " H_d = 0 for d >= 3", "no 3-cells in the Theta model", 0, high));
                    CheckRow h1 = row_num(tag + " beta_1 (lemma " + std::to_string(v.beta1_lemma) + " vs p(p-1)/2)",
                                          "K2p H_1: engine decides", v.beta1_chi_consistent, H.betti(1));
                    out.push_back(h1);
                    return out;
                });
        tasks.push_back([] {
            const auto& H = engine("theta:4", 3);
            return std::vector<CheckRow>{row("Theta4 n=3 Betti", "genus-3 surface", "(1,6,1)", betti_vec(H))};
        });
    }
    return tasks;
}

// ------------------------------------------------------------ relations

std::vector<RowTask> relation_tasks() {
    std::vector<RowTask> tasks;
    for (const auto& nm : relation_names())
        tasks.push_back([nm] {
            auto r = verify_chain_identity(nm);
            std::string got = r.holds ? "holds (" + r.level + " level)" : "fails: " + r.detail;
            CheckRow c{"relation " + nm, "named relation " + nm + ", chain or homology level", "holds", got, r.holds};
            return std::vector<CheckRow>{c};
        });
    tasks.push_back([] {
        // every constructed O/Y/Theta/product cycle is closed, in both models where defined
        std::vector<CheckRow> out;
        int total = 0, bad = 0;
        auto check = [&](const Graph& g, const SwChain& c) {
            ++total;
            if (!c.boundary(g).empty()) ++bad;
        };
        Graph k4 = build_family("k4");
        for (int v = 0; v < 4; ++v) check(k4, y_cycle(k4, v, 0, 1, 2));
        check(k4, make_cycle(k4, CycleSpec::O(k4, {0, 1, 2})));
        check(k4, make_cycle(k4, CycleSpec::O(k4, {0, 1, 2, 3})));
        Graph t4 = build_family("theta:4");
        check(t4, theta_cycle(t4, 0, 1, 0, 1, 2, 3));
        check(t4, theta_cycle(t4, 1, 0, 0, 1, 2, 3));
        Graph t5 = build_family("theta:5");
        for (int a = 0; a < 5; ++a)
            for (int b = a + 1; b < 5; ++b)
                for (int c = b + 1; c < 5; ++c)
                    for (int e = c + 1; e < 5; ++e) check(t5, theta_cycle(t5, 0, 1, a, b, c, e));
        for (auto [f, n, d] : std::vector<std::tuple<std::string, int, int>>{{"k33", 4, 2}, {"k33", 5, 3}, {"wheel:5", 5, 2}, {"k4", 6, 3}}) {
            Graph g = build_family(f);
            for (const auto& c : product_cycles(g, n, d)) check(g, c);
        }
        // Abrams side: O- and Y-cycles on subdivided K4
        auto A = build_abrams(subdivide_for(k4, 2), 2);
        const Graph& h = A.og.base;
        int abad = 0, atotal = 0;
        for (int v = 0; v < h.num_vertices(); ++v) {
            if (h.degree(v) < 3) continue;
            auto inc = h.incidences(v);
            ++atotal;
            Chain c = make_cycle(A, CycleSpec::Y(h, v, {inc[0].edge, inc[1].edge, inc[2].edge}, Dressing{{}, {}}));
            if (!A.cx.is_cycle(c)) ++abad;
        }
        out.push_back(row_num("Swiatkowski cycles closed (" + std::to_string(total) + " chains)",
                              "boundary of every constructed cycle", 0, bad));
        out.push_back(row_num("Abrams cycles closed (" + std::to_string(atotal) + " chains)",
                              "boundary of every constructed cycle", 0, abad));
        return out;
    });
    return tasks;
}

// ------------------------------------------------------------ cross-model

std::vector<RowTask> cross_model_tasks() {
    std::vector<RowTask> tasks;
    std::vector<std::pair<std::string, int>> set = {{"k4", 2},      {"k4", 3},      {"k4", 4},      {"theta:3", 2},
                                                    {"theta:3", 3}, {"theta:3", 4}, {"y", 2},       {"y", 3},
                                                    {"lasso", 2},   {"lasso", 3},   {"k33", 2},     {"k33", 3}};
    for (auto [f, n] : set)
        tasks.push_back([f, n] {
            Graph g = build_family(f);
            auto A = build_abrams(subdivide_for(g, n), n);
            auto HA = homology(A.cx);
            auto HS = homology(build_swiatkowski(g, n).cx);
            return std::vector<CheckRow>{row(f + " n=" + std::to_string(n) + " Abrams = Swiatkowski",
                                             "both models of C_n", betti_vec(HS), betti_vec(HA))};
        });
    return tasks;
}

// ------------------------------------------------------------ generation

std::vector<RowTask> generation_tasks() {
    std::vector<RowTask> tasks;
    tasks.push_back([] {
        auto r = product_span(build_family("k33"), 4, 2);
        return std::vector<CheckRow>{row("K33 n=4 span of product 2-cycles", "H_2 generated by products",
                                         "span 19 = beta_2 19",
                                         "span " + std::to_string(r.span) + " = beta_2 " + std::to_string(r.betti))};
    });
    tasks.push_back([] {
        auto r = product_span(build_family("k33"), 5, 3);
        return std::vector<CheckRow>{row("K33 n=5 span of product 3-cycles", "one non-product 3-cycle",
                                         "span 9, beta_3 10",
                                         "span " + std::to_string(r.span) + ", beta_3 " + std::to_string(r.betti))};
    });
    for (auto [m, top] : std::vector<std::pair<int, int>>{{5, 8}, {6, 7}, {7, 7}})
        for (int n = 3; n <= top; ++n)
            tasks.push_back([m, n] {
                auto r = product_span(build_family("wheel:" + std::to_string(m)), n, 2);
                std::string id = "W" + std::to_string(m) + " n=" + std::to_string(n) + " span of product 2-cycles";
                return std::vector<CheckRow>{row_num(id, "H_2 generated by products (" + std::to_string(r.cycles) + " cycles)",
                                                     r.betti, r.span)};
            });
    return tasks;
}

// ------------------------------------------------------------ properties

namespace {

// gcd of all k x k minors, by Bareiss on 128-bit integers
std::vector<int64_t> divisors_brute(const std::vector<std::vector<int64_t>>& a) {
    int R = static_cast<int>(a.size()), C = R ? static_cast<int>(a[0].size()) : 0;
    auto det = [&](const std::vector<int>& rs, const std::vector<int>& cs) {
        int k = static_cast<int>(rs.size());
        std::vector<std::vector<__int128>> m(k, std::vector<__int128>(k));
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) m[i][j] = a[rs[i]][cs[j]];
        __int128 prev = 1;
        int sign = 1;
        for (int p = 0; p < k; ++p) {
            if (m[p][p] == 0) {
                int s = p + 1;
                while (s < k && m[s][p] == 0) ++s;
                if (s == k) return __int128(0);
                std::swap(m[p], m[s]);
                sign = -sign;
            }
            for (int i = p + 1; i < k; ++i)
                for (int j = p + 1; j < k; ++j) m[i][j] = (m[i][j] * m[p][p] - m[i][p] * m[p][j]) / prev;
            prev = m[p][p];
        }
        return sign * m[k - 1][k - 1];
    };
    auto subsets = [](int n, int k) {
        std::vector<std::vector<int>> out;
        std::vector<int> cur;
        auto rec = [&](auto&& self, int from) -> void {
            if (static_cast<int>(cur.size()) == k) {
                out.push_back(cur);
                return;
            }
            for (int i = from; i < n; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out;
    };
    std::vector<int64_t> dk{1};
    for (int k = 1; k <= std::min(R, C); ++k) {
        __int128 g = 0;
        for (const auto& rs : subsets(R, k))
            for (const auto& cs : subsets(C, k)) {
                __int128 x = det(rs, cs);
                if (x < 0) x = -x;
                while (x) {
                    __int128 t = g % x;
                    g = x;
                    x = t;
                }
            }
        if (g == 0) break;
        dk.push_back(static_cast<int64_t>(g));
    }
    std::vector<int64_t> div;
    for (size_t k = 1; k < dk.size(); ++k) div.push_back(dk[k] / dk[k - 1]);
    return div;
}

}  // namespace

std::vector<RowTask> property_tasks() {
    std::vector<RowTask> tasks;
    std::vector<std::pair<std::string, int>> corpus = {{"k4", 3},      {"k4", 4},     {"k33", 3},     {"wheel:5", 4},
                                                       {"theta:4", 3}, {"lasso", 3},  {"petersen:10", 2}, {"y", 3},
                                                       {"net:3", 4},   {"linear_tree:3", 4}};
    for (auto [f, n] : corpus)
        tasks.push_back([f, n] {
            std::vector<CheckRow> out;
            std::string tag = f + " n=" + std::to_string(n);
            Graph g = build_family(f);
            auto S = build_swiatkowski(g, n);
            auto R = build_fully_reduced(g, n);
            out.push_back(row_num(tag + " d.d = 0 (canonical)", "boundary squares to zero", -1, S.cx.check_dd()));
            out.push_back(row_num(tag + " d.d = 0 (reduced)", "boundary squares to zero", -1, R.cx.check_dd()));
            HomologyOptions plain;
            plain.reduce = false;
            auto H0 = homology(S.cx, plain);
            auto H1 = homology(S.cx);
            auto H2 = homology(R.cx);
            auto M = morse_reduce(S.cx);
            auto H3 = homology(M, plain);
            out.push_back(row_num(tag + " Euler: cells vs Betti", "Euler identity", S.cx.euler(), H0.betti_euler()));
            out.push_back(row(tag + " elimination invariance", "reduction keeps homology", betti_vec(H0), betti_vec(H1)));
            out.push_back(row(tag + " reduced complex invariance", "reduction keeps homology", betti_vec(H0), betti_vec(H2)));
            out.push_back(row(tag + " morse_reduce invariance", "reduction keeps homology", betti_vec(H0), betti_vec(H3)));
            return out;
        });
    tasks.push_back([] {
        std::mt19937_64 rng(20240611);
        int bad_oracle = 0, bad_chain = 0;
        for (int it = 0; it < 1000; ++it) {
            int r = 1 + static_cast<int>(rng() % 8), c = 1 + static_cast<int>(rng() % 8);
            int span = 1 + static_cast<int>(rng() % 6);
            std::vector<std::vector<int64_t>> a(r, std::vector<int64_t>(c));
            for (auto& x : a)
                for (auto& y : x) y = (rng() % 3 == 0) ? 0 : static_cast<int64_t>(rng() % (2 * span + 1)) - span;
            auto s = smith_normal_form(SparseMatrix::from_dense(a));
            if (s.divisors != divisors_brute(a)) ++bad_oracle;
            for (size_t i = 0; i + 1 < s.divisors.size(); ++i)
                if (s.divisors[i + 1] % s.divisors[i]) ++bad_chain;
        }
        return std::vector<CheckRow>{
            row_num("SNF vs minor-gcd oracle, 1000 random matrices up to 8x8", "determinant divisors", 0, bad_oracle),
            row_num("SNF divisor chain d_i | d_i+1", "Smith normal form", 0, bad_chain)};
    });
    return tasks;
}

// ------------------------------------------------------------ structural facts

std::vector<RowTask> structural_tasks() {
    std::vector<RowTask> tasks;
    tasks.push_back([] {
        // whatever the engine cache holds at this point, plus a fixed core
        for (auto [f, n] : std::vector<std::pair<std::string, int>>{
                 {"k4", 5}, {"k33", 4}, {"wheel:5", 5}, {"theta:4", 4}, {"petersen:10", 3}, {"lasso", 4}, {"y", 4},
                 {"net:4", 5}, {"k5", 3}, {"complete_bipartite:2,5", 4}})
            engine(f, n);
        int64_t checked = 0, violations = 0, torsion_seen = 0, non2 = 0;
        std::string where;
        for (auto [f, n] : cached_keys()) {
            const HomologyResult* H = nullptr;
            try {
                H = &engine(f, n);
            } catch (...) {
                continue;
            }
            int N = load_graph(f).essential_count();
            int bound = std::min(n, N);
            ++checked;
            for (int d = bound + 1; d < static_cast<int>(H->dims.size()); ++d)
                if (H->dims[d].betti || !H->dims[d].torsion.empty()) {
                    ++violations;
                    where += " " + f + " n=" + std::to_string(n) + " d=" + std::to_string(d);
                }
            for (const auto& dh : H->dims)
                for (auto t : dh.torsion) {
                    ++torsion_seen;
                    non2 += t != 2;
                }
        }
        return std::vector<CheckRow>{
            row_num("H_d = 0 for d > min(n, N) over " + std::to_string(checked) + " computations" + where,
                    "top dimension bounded by essential vertices", 0, violations),
            row_num("torsion coefficients equal 2 (" + std::to_string(torsion_seen) + " observed)",
                    "torsion is a number of copies of Z_2 (observation)", 0, non2)};
    });
    return tasks;
}

// ------------------------------------------------------------ suites

std::vector<std::string> suite_names() {
    return {"paper-tables-core", "paper-tables-extended", "relations", "cross-model", "formula-engine"};
}

SuiteReport run_suite(const std::string& name, int threads) {
    std::vector<RowTask> tasks;
    auto add = [&](std::vector<RowTask> t) { tasks.insert(tasks.end(), t.begin(), t.end()); };
    if (name == "paper-tables-core") {
        // slow rows first so the pool stays busy
        add(table_tasks("wheel"));
        add(table_tasks("petersen"));
        add(table_tasks("k33"));
        add(table_tasks("k5"));
        add(table_tasks("k4"));
    } else if (name == "paper-tables-extended") {
        add(table_tasks("extended"));
    } else if (name == "relations") {
        add(relation_tasks());
    } else if (name == "cross-model") {
        add(cross_model_tasks());
    } else if (name == "formula-engine") {
        for (auto g : {"wheel", "k4", "k33", "groupings", "tree-net", "k2p"}) add(formula_tasks(g));
    } else {
        throw std::invalid_argument("unknown suite '" + name + "'");
    }
    return run_tasks(name, tasks, threads);
}

}  // namespace gcs
