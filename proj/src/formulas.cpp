#include "gcs/formulas.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <mutex>

#include "json.hpp"

#include "gcs/graph.hpp"
#include "gcs/homology.hpp"
#include "gcs/swiatkowski.hpp"

namespace gcs {

int64_t binom(int64_t a, int64_t b, std::vector<std::string>* flags) {
    if (a == -1 && b == -1) return 1;
    if (b < 0) return 0;
    if (a < 0) {
        if (flags) flags->push_back("C(" + std::to_string(a) + "," + std::to_string(b) + ") evaluated as 0");
        return 0;
    }
    if (b > a) return 0;
    b = std::min(b, a - b);
    __int128 r = 1;
    for (int64_t i = 1; i <= b; ++i) {
        r = r * (a - b + i) / i;
        if (r > INT64_MAX) throw std::overflow_error("binomial coefficient exceeds 64 bits");
    }
    return static_cast<int64_t>(r);
}

std::string FormulaPrediction::to_json() const {
    nlohmann::ordered_json j;
    j["family"] = family;
    j["n"] = n;
    nlohmann::ordered_json dims = nlohmann::ordered_json::object();
    if (value) dims[std::to_string(d)] = {{"betti", *value}, {"torsion", nlohmann::ordered_json::array()}};
    else dims[std::to_string(d)] = "out-of-range";
    j["dims"] = dims;
    j["provenance"] = provenance;
    if (!flags.empty()) j["flags"] = flags;
    return j.dump();
}

int64_t betti_tree_linear(int m, int n, int d) {
    if (m < 1) throw FormulaError("linear tree needs m >= 1");
    if (n < 0 || d < 0) throw FormulaError("negative n or d");
    return binom(m, d) * binom(n, 2 * d);
}

int64_t betti_net(int m, int n, int d) {
    if (m < 1) throw FormulaError("net needs m >= 1");
    if (n < 1 || d < 0) throw FormulaError("need n >= 1 and d >= 0");
    if (d == 0) return 1;  // connected; the product formula reads C(n-1,-1) = 0 here
    return binom(m, d) * binom(n - 1, 2 * d - 1);
}

namespace {

FormulaPrediction make(std::string fam, int n, int d) {
    FormulaPrediction p;
    p.family = std::move(fam);
    p.n = n;
    p.d = d;
    return p;
}

FormulaPrediction set(FormulaPrediction p, int64_t v, std::string prov) {
    p.value = v;
    p.provenance = std::move(prov);
    return p;
}

}  // namespace

FormulaPrediction betti_K4(int n, int d) {
    if (n < 1) throw FormulaError("need n >= 1");
    auto p = make("k4", n, d);
    if (d < 0) throw FormulaError("negative dimension");
    if (d == 0) return set(p, 1, "connected");
    if (d == 1) {
        p.provenance = "no closed form for H_1";
        return p;
    }
    if (d == 2) return set(p, n >= 3 ? 6 * n - 15 : 0, "K4: 3 + 6(n-3) = 6n-15, n >= 3");
    if (d == 3) return set(p, n >= 6 ? 4 * binom(n - 3, 3) : 0, "K4: 4 C(n-3,3), n >= 6");
    if (d == 4) return set(p, n >= 8 ? binom(n - 3, 5) : 0, "K4: C(n-3,5), n >= 8");
    return set(p, 0, "K4: at most four Y-subgraphs, H_d = 0 for d >= 5");
}

FormulaPrediction betti_K33(int n, int d) {
    if (n < 2) throw FormulaError("K33 formulas need n >= 2");
    auto p = make("k33", n, d);
    if (d < 0) throw FormulaError("negative dimension");
    if (d == 0) return set(p, 1, "connected");
    if (d == 1) {
        p.provenance = "no closed form for H_1";
        return p;
    }
    if (d == 2) {
        if (n == 2) return set(p, 0, "K33: no disjoint O-cycle pairs");
        if (n == 3) return set(p, 8, "K33: beta_2(D_3) = 8");
        return set(p, 9 * n - 17, "K33: 8 + 2 + 9(n-3) = 9n-17, n >= 4");
    }
    int k = n - 4;
    if (d == 3) {
        if (n <= 3) return set(p, 0, "K33: beta_3 = 0 below four particles");
        return set(p, 1 + 9 * k + 20 * binom(k, 2), "K33: 1 + 9(n-4) + C(6,3) C(n-4,2)");
    }
    if (k < 0) return set(p, 0, "K33: too few particles");
    if (d == 4) return set(p, 15 * binom(k, 4), "K33: C(6,4) C(n-4,4)");
    if (d == 5) return set(p, 6 * binom(k, 6), "K33: C(6,5) C(n-4,6)");
    if (d == 6) return set(p, binom(k, 8), "K33: C(n-4,8)");
    return set(p, 0, "K33: H_d = 0 for d >= 7");
}

std::vector<Grouping> enumerate_groupings(int m, int k) {
    int P = m - 1;
    if (m < 4) throw FormulaError("wheel order must be >= 4");
    if (k < 1 || k > P) throw FormulaError("need 1 <= k <= m-1");
    if (P > 30) throw FormulaError("wheel too large for subset enumeration");
    std::map<std::vector<int>, int64_t> count;
    for (uint32_t s = 0; s < (1u << P); ++s) {
        if (std::popcount(s) != k) continue;
        std::vector<int> runs;
        if (k == P) {
            runs.push_back(P);
        } else {
            int start = 0;
            while (s >> start & 1) ++start;  // an unchosen spoke
            int run = 0;
            for (int i = 1; i <= P; ++i) {
                int pos = (start + i) % P;
                if (s >> pos & 1) {
                    ++run;
                } else if (run) {
                    runs.push_back(run);
                    run = 0;
                }
            }
        }
        std::sort(runs.rbegin(), runs.rend());
        count[runs]++;
    }
    std::vector<Grouping> out;
    for (auto& [g, c] : count) {
        int l = static_cast<int>(g.size());
        out.push_back({g, c, std::min(P, l + k)});
    }
    return out;
}

int64_t star_beta1(int mu, int n) {
    if (mu < 1 || n < 1) throw FormulaError("star_beta1 needs mu >= 1 and n >= 1");
    if (mu < 3 || n == 1) return 0;  // a path or a single particle: contractible
    static std::mutex mtx;
    static std::map<std::pair<int, int>, int64_t> memo;
    {
        std::lock_guard lk(mtx);
        if (auto it = memo.find({mu, n}); it != memo.end()) return it->second;
    }
    Graph g = build_family("star:" + std::to_string(mu));
    auto S = build_fully_reduced(g, n, 1);
    int64_t b = homology(S.cx).betti(1);
    std::lock_guard lk(mtx);
    memo[{mu, n}] = b;
    return b;
}

int64_t fan_y_count(int mu, int spokes, int n) {
    return star_beta1(mu, n) + (binom(n + mu - 2, n - 1) - 1) * (spokes - mu);
}

namespace {

int64_t wheel_2d_minus_1(int m, int d) {
    if (m < d + 2) return 0;
    int64_t s = 0;
    for (const auto& g : enumerate_groupings(m, d - 1)) s += g.count * (m - 1 - g.mu);
    return s;
}

int64_t wheel_2d(int m, int d) {
    int P = m - 1;
    int64_t s = binom(P, d);
    for (const auto& g : enumerate_groupings(m, d - 1)) {
        int64_t l = static_cast<int64_t>(g.groups.size());
        s += g.count * ((P - g.mu) * (d - 1 - l) + star_beta1(g.mu, 2) + (g.mu - 1) * (P - g.mu));
    }
    return s;
}

int64_t wheel_full(int m, int n, int d, std::vector<std::string>& flags) {
    int P = m - 1;
    int64_t s = 0;
    if (d - 1 >= 1 && d - 1 <= P)
        for (const auto& g : enumerate_groupings(m, d - 1)) {
            int64_t h = static_cast<int64_t>(g.groups.size());
            s += g.count * (P - g.mu) * binom(n - d - h, d - h - 1, &flags);
            for (int l = 0; l <= n - 2 * d; ++l) {
                int64_t fan = star_beta1(g.mu, l + 2) + (binom(l + g.mu, l + 1, &flags) - 1) * (P - g.mu);
                s += g.count * fan * binom(n - d - h - l - 2, d - h - 2, &flags);
            }
        }
    if (d <= P)
        for (const auto& g : enumerate_groupings(m, d)) {
            int64_t h = static_cast<int64_t>(g.groups.size());
            s += g.count * binom(n - d - h, d - h, &flags);
        }
    return s;
}

int64_t wheel_top(int m, int n) {
    int64_t s = 0;
    for (int k = 0; k <= n - 2 * m; ++k) s += binom(n - m - k - 2, m - 2) * star_beta1(m - 1, k + 2);
    return s;
}

int64_t w5_beta3(int n) {
    int64_t s = 4 * (n - 4) + 4 * binom(n - 4, 2) + 2 * star_beta1(4, n - 4);
    for (int k = 0; k <= n - 6; ++k) s += 4 * (star_beta1(3, k + 2) + binom(k + 3, k + 1) - 1);
    return s;
}

int64_t w5_beta4(int n) {
    int64_t s = binom(n - 4, 4);
    for (int k = 0; k <= n - 8; ++k) s += 4 * (n - k - 7) * star_beta1(4, k + 2);
    return s;
}

int64_t w5_beta5(int n) {
    int64_t s = 0;
    for (int k = 0; k <= n - 10; ++k) s += binom(n - k - 7, 3) * star_beta1(4, k + 2);
    return s;
}

}  // namespace

FormulaPrediction betti_wheel(int m, int n, int d) {
    if (m < 4) throw FormulaError("wheel order must be >= 4");
    if (n < 1 || d < 0) throw FormulaError("need n >= 1 and d >= 0");
    auto p = make("wheel:" + std::to_string(m), n, d);
    int P = m - 1;
    if (d == 0) return set(p, 1, "connected");
    if (d == 1) {
        p.provenance = "no closed form for H_1";
        return p;
    }
    if (d > m) return set(p, 0, "wheel: H_d = 0 above dimension m");
    if (d == 2) {
        if (n <= 2) return set(p, 0, "wheel: no disjoint O-cycle pairs");
        if (n == 3) return set(p, int64_t(P) * (m - 3), "wheel: (m-1)(m-3) O x Y tori");
        return set(p, int64_t(n - 2) * P * (m - 3) + int64_t(P) * (n - 4) + binom(P, 2),
                   "wheel: (n-2)(m-1)(m-3) + (m-1)(n-4) + C(m-1,2), n >= 4");
    }
    if (n < 2 * d - 1) return set(p, 0, "wheel: beta_d = 0 for n < 2d-1");
    if (n == 2 * d - 1) return set(p, wheel_2d_minus_1(m, d), "wheel: sum over groupings N (m-1-mu), n = 2d-1");
    if (m == 5 && d == 3) return set(p, w5_beta3(n), "W5: 4(n-4) + 4C(n-4,2) + 2 beta_1(S_4) + fan sum");
    if (m == 5 && d == 4) return set(p, w5_beta4(n), "W5: C(n-4,4) + 4 sum (n-k-7) beta_1(S_4)");
    if (m == 5 && d == 5) return set(p, w5_beta5(n), "W5: sum C(n-k-7,3) beta_1(S_4)");
    if (d == m) return set(p, wheel_top(m, n), "wheel: top dimension, central star and m-2 free edges");
    std::vector<std::string> flags;
    int64_t v = wheel_full(m, n, d, flags);
    p = set(p, v, "wheel: general grouping sum, n >= 2d");
    p.flags = std::move(flags);
    if (n == 2 * d) {
        int64_t alt = wheel_2d(m, d);
        if (alt != v) p.flags.push_back("the n = 2d closed form gives " + std::to_string(alt));
    }
    return p;
}

K2pValues k2p_values(int p, int n) {
    if (p < 3 || n < 3) throw FormulaError("K2p formulas need p >= 3 and n >= 3");
    K2pValues r;
    r.p = p;
    r.n = n;
    int64_t q = p - 1;
    r.euler = q * q * binom(n - 3 + p, q) - 2 * q * binom(n - 2 + p, q) + binom(n - 1 + p, q);
    r.beta1_lemma = int64_t(p) * q;
    r.beta1_chi_consistent = int64_t(p) * q / 2;
    r.beta2 = r.euler + r.beta1_chi_consistent - 1;
    r.beta2_n3 = binom(q, 3);
    return r;
}

FormulaPrediction predict(const std::string& family, int n, int d) {
    FamilySpec f = FamilySpec::parse(family);
    const auto& a = f.params;
    auto need = [&](size_t k) {
        if (a.size() != k) throw FormulaError("family '" + f.family + "' takes " + std::to_string(k) + " parameter(s)");
    };
    if (n < 1) throw FormulaError("need n >= 1");
    if (d < 0) throw FormulaError("negative dimension");
    if (f.family == "k4") return betti_K4(n, d);
    if (f.family == "wheel") {
        need(1);
        if (a[0] == 4) {
            auto r = betti_K4(n, d);
            r.family = "wheel:4";
            return r;
        }
        return betti_wheel(a[0], n, d);
    }
    if (f.family == "k33" || (f.family == "complete_bipartite" && a.size() == 2 && a[0] == 3 && a[1] == 3))
        return betti_K33(n, d);
    if (f.family == "linear_tree") {
        need(1);
        auto p = make(f.str(), n, d);
        return set(p, betti_tree_linear(a[0], n, d), "linear tree: C(m,d) C(n,2d)");
    }
    if (f.family == "net") {
        need(1);
        auto p = make(f.str(), n, d);
        return set(p, betti_net(a[0], n, d), d == 0 ? "connected" : "net: C(m,d) C(n-1,2d-1)");
    }
    int pp = -1;
    if (f.family == "theta") need(1), pp = a[0];
    if (f.family == "complete_bipartite" && a.size() == 2 && std::min(a[0], a[1]) == 2) pp = std::max(a[0], a[1]);
    if (pp >= 0) {
        auto p = make(f.str(), n, d);
        if (d == 0) return set(p, 1, "connected");
        if (d >= 3) return set(p, 0, "K2p: no 3-cells in the Theta_p model");
        if (pp < 3 || n < 3) {
            p.provenance = "K2p formulas need p >= 3 and n >= 3";
            return p;
        }
        auto v = k2p_values(pp, n);
        if (d == 1) {
            p = set(p, v.beta1_chi_consistent, "K2p: p(p-1)/2, consistent with the Euler characteristic");
            p.flags.push_back("the H_1 lemma states p(p-1) = " + std::to_string(v.beta1_lemma));
            return p;
        }
        return set(p, v.beta2, "K2p: Euler characteristic + p(p-1)/2 - 1");
    }
    throw FormulaError("no closed-form formulas for family '" + f.family + "'");
}

}  // namespace gcs
