#ifndef COVERCOUNT_VERIFY_HPP
#define COVERCOUNT_VERIFY_HPP

#include <chrono>
#include <string>

#include <json.hpp>

#include "covercount/corpus.hpp"
#include "covercount/count.hpp"
#include "covercount/covers.hpp"
#include "covercount/gadgets.hpp"
#include "covercount/io.hpp"

namespace covercount {

enum class Status { Holds, Equality, Strict, Violated };

inline std::string status_name(Status s) {
    switch (s) {
    case Status::Holds: return "holds";
    case Status::Equality: return "equality";
    case Status::Strict: return "strict";
    case Status::Violated: return "violated";
    }
    return "?";
}

// One theorem check on one graph. A `violated` report carries a witness
// from which the stated lhs/rhs can be recomputed independently.
struct VerificationReport {
    std::string claim;
    std::string graph; // serialized graph or family name
    nlohmann::json params = nlohmann::json::object();
    Status status = Status::Holds;
    BigCount lhs = 0, rhs = 0;
    nlohmann::json witness; // null unless violated
    long long millis = 0;
};

inline nlohmann::json report_to_json(const VerificationReport& r) {
    nlohmann::json j = {{"claim", r.claim},
                        {"graph", r.graph},
                        {"params", r.params},
                        {"status", status_name(r.status)},
                        {"lhs", to_decimal(r.lhs)},
                        {"rhs", to_decimal(r.rhs)},
                        {"millis", r.millis}};
    if (!r.witness.is_null()) j["witness"] = r.witness;
    return j;
}

namespace detail {

class Stopwatch {
public:
    Stopwatch() : start_(std::chrono::steady_clock::now()) {}
    long long millis() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json signing_to_json(const Signing& s) {
    std::string out;
    for (Sign sg : s) out += (sg == Sign::Plus ? '+' : '-');
    return out;
}

inline nlohmann::json decoration_to_json(const Decoration& d) {
    std::string out;
    for (Role r : d) out += (r == Role::O ? 'o' : 's');
    return out;
}

inline nlohmann::json perms_to_json(const LiftPermutations& p) {
    nlohmann::json perms = nlohmann::json::array();
    for (const auto& pi : p.perms) perms.push_back(pi);
    return {{"k", p.k}, {"perms", perms}};
}

inline void require_eulerian(const Multigraph& g, const char* claim) {
    if (!is_eulerian(g))
        throw InputError(std::string(claim) + " requires an Eulerian graph");
}

inline void require_edges(const Multigraph& g, int cap, const char* claim) {
    if (g.edge_count() > cap)
        throw CapExceeded(std::string(claim) + " limited to " +
                          std::to_string(cap) + " edges");
}

} // namespace detail

// eps(G)^2 = sum_A eps(A) eps(E\A), and the same with h. Exact.
inline VerificationReport check_recursion(const Multigraph& g, int threads = 1) {
    detail::require_eulerian(g, "recursion");
    detail::require_edges(g, kSubsetEdgeCap, "recursion");
    detail::Stopwatch sw;
    VerificationReport r;
    r.claim = "recursion";
    r.graph = serialize_graph(g);

    BigCount eps = count_eulerian_orientations(g);
    BigCount half = count_half_graphs(g);
    auto eps_f = [&](EdgeSubset a) { return eps_of_subset(g, a); };
    auto half_f = [&](EdgeSubset a) { return half_of_subset(g, a); };
    BigCount eps_sum = convolution_sum(g, eps_f, eps_f, threads);
    BigCount half_sum = convolution_sum(g, half_f, half_f, threads);

    r.lhs = eps * eps;
    r.rhs = eps_sum;
    r.params["h_lhs"] = to_decimal(half * half);
    r.params["h_rhs"] = to_decimal(half_sum);
    r.status = (r.lhs == r.rhs && half * half == half_sum) ? Status::Holds
                                                           : Status::Violated;
    if (r.status == Status::Violated)
        r.witness = {{"eps", to_decimal(eps)}, {"h", to_decimal(half)}};
    r.millis = sw.millis();
    return r;
}

// eps >= h, with equality exactly on bipartite graphs (checked both ways).
inline VerificationReport check_inequality(const Multigraph& g) {
    detail::require_eulerian(g, "inequality");
    detail::Stopwatch sw;
    VerificationReport r;
    r.claim = "inequality";
    r.graph = serialize_graph(g);
    r.lhs = count_eulerian_orientations(g);
    r.rhs = count_half_graphs(g);
    bool bip = is_bipartite(g);
    r.params["bipartite"] = bip;
    if (r.lhs < r.rhs || (r.lhs == r.rhs) != bip) {
        r.status = Status::Violated;
        r.witness = {{"bipartite", bip}};
    } else {
        r.status = bip ? Status::Equality : Status::Strict;
    }
    r.millis = sw.millis();
    return r;
}

// eps(GxK2) = h(GxK2) = sum_A eps(A) h(E\A).
inline VerificationReport check_bipartite_cover(const Multigraph& g,
                                                int threads = 1) {
    detail::require_eulerian(g, "bipartite-cover");
    detail::require_edges(g, 20, "bipartite-cover");
    detail::Stopwatch sw;
    VerificationReport r;
    r.claim = "bipartite-cover";
    r.graph = serialize_graph(g);

    LiftedGraph lift = bipartite_double_cover(g);
    BigCount eps_lift = count_eulerian_orientations(lift.graph);
    BigCount half_lift = count_half_graphs(lift.graph);
    BigCount sum = convolution_sum(
        g, [&](EdgeSubset a) { return eps_of_subset(g, a); },
        [&](EdgeSubset a) { return half_of_subset(g, a); }, threads);

    r.lhs = eps_lift;
    r.rhs = sum;
    r.params["h_cover"] = to_decimal(half_lift);
    r.status = (eps_lift == half_lift && half_lift == sum) ? Status::Holds
                                                           : Status::Violated;
    if (r.status == Status::Violated)
        r.witness = {{"eps_cover", to_decimal(eps_lift)},
                     {"h_cover", to_decimal(half_lift)},
                     {"subset_sum", to_decimal(sum)}};
    r.millis = sw.millis();
    return r;
}

// All 2^|E| signings when |E| <= 10; otherwise 200 seeded samples. The two
// canonical signings are always included (they are the extremal covers).
inline std::vector<Signing> signing_sweep(const Multigraph& g,
                                          std::uint64_t seed,
                                          int samples = 200) {
    const int m = g.edge_count();
    std::vector<Signing> out;
    if (m <= 10) {
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
            Signing s(m);
            for (int e = 0; e < m; ++e)
                s[e] = (mask >> e) & 1 ? Sign::Minus : Sign::Plus;
            out.push_back(std::move(s));
        }
    } else {
        out.push_back(Signing(m, Sign::Plus));
        out.push_back(Signing(m, Sign::Minus));
        for (int t = 0; t < samples; ++t) {
            SplitMix64 rng = derive_stream(seed, t);
            out.push_back(random_signing(g, rng));
        }
    }
    return out;
}

// eps_r(G u G) >= eps_r(H) for every 2-cover H in the sweep.
inline VerificationReport
check_cover_orientation_max(const Multigraph& g, const DegreeVector& r_base,
                            const std::vector<Signing>& signings) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.claim = "cover-orient";
    rep.graph = serialize_graph(g);
    rep.params["r"] = r_base;
    rep.params["signings"] = signings.size();

    LiftedGraph ref_lift = disjoint_double(g);
    BigCount ref = count_r_orientations(ref_lift.graph,
                                        induced_degree_vector(r_base, ref_lift));
    rep.lhs = ref;
    rep.status = Status::Holds;
    std::vector<int> max_at;
    for (size_t i = 0; i < signings.size(); ++i) {
        LiftedGraph lift = build_2lift(g, signings[i]);
        BigCount val = count_r_orientations(lift.graph,
                                            induced_degree_vector(r_base, lift));
        if (val > ref) {
            rep.status = Status::Violated;
            rep.rhs = val;
            rep.witness = {{"signing", detail::signing_to_json(signings[i])},
                           {"value", to_decimal(val)}};
            break;
        }
        if (val == ref) max_at.push_back(static_cast<int>(i));
    }
    rep.params["max_attained_by"] = max_at.size();
    if (rep.status == Status::Holds) rep.rhs = ref;
    rep.millis = sw.millis();
    return rep;
}

// h_r(GxK2) >= h_r(H) for every 2-cover H in the sweep.
inline VerificationReport
check_cover_factor_max(const Multigraph& g, const DegreeVector& r_base,
                       const std::vector<Signing>& signings) {
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.claim = "cover-factor";
    rep.graph = serialize_graph(g);
    rep.params["r"] = r_base;
    rep.params["signings"] = signings.size();

    LiftedGraph ref_lift = bipartite_double_cover(g);
    BigCount ref = count_r_factors(ref_lift.graph,
                                   induced_degree_vector(r_base, ref_lift));
    rep.lhs = ref;
    rep.status = Status::Holds;
    std::vector<int> max_at;
    for (size_t i = 0; i < signings.size(); ++i) {
        LiftedGraph lift = build_2lift(g, signings[i]);
        BigCount val =
            count_r_factors(lift.graph, induced_degree_vector(r_base, lift));
        if (val > ref) {
            rep.status = Status::Violated;
            rep.rhs = val;
            rep.witness = {{"signing", detail::signing_to_json(signings[i])},
                           {"value", to_decimal(val)}};
            break;
        }
        if (val == ref) max_at.push_back(static_cast<int>(i));
    }
    rep.params["max_attained_by"] = max_at.size();
    if (rep.status == Status::Holds) rep.rhs = ref;
    rep.millis = sw.millis();
    return rep;
}

// g(H) = sum_A g(A) g(bar(E\A)) for the 2-lift H encoded by the signing.
inline VerificationReport check_mixed_identity(const Multigraph& g,
                                               const Signing& s,
                                               const Decoration& dec,
                                               int threads = 1) {
    detail::require_edges(g, 20, "mixed-identity");
    detail::Stopwatch sw;
    VerificationReport r;
    r.claim = "mixed-identity";
    r.graph = serialize_graph(g);
    r.params["signing"] = detail::signing_to_json(s);
    r.params["decoration"] = detail::decoration_to_json(dec);

    LiftedGraph lift = build_2lift(g, s);
    Decoration lifted_dec = transfer_decorations(dec, lift);
    r.lhs = count_balanced_factorientations(lift.graph, lifted_dec);

    auto g_plain = [&](EdgeSubset a) {
        Subgraph sub = subgraph_on(g, a);
        Decoration d;
        for (EdgeId e : sub.edge_map) d.push_back(dec[e]);
        return count_balanced_factorientations(sub.graph, d);
    };
    auto g_barred = [&](EdgeSubset b) {
        auto [sub, d] = bar_restriction(g, b, s, dec);
        return count_balanced_factorientations(sub, d);
    };
    r.rhs = convolution_sum(g, g_plain, g_barred, threads);

    r.status = (r.lhs == r.rhs) ? Status::Holds : Status::Violated;
    if (r.status == Status::Violated)
        r.witness = {{"signing", detail::signing_to_json(s)},
                     {"decoration", detail::decoration_to_json(dec)}};
    r.millis = sw.millis();
    return r;
}

// g(G) <= eps(G) for any decoration.
inline VerificationReport check_mixed_inequality(const Multigraph& g,
                                                 const Decoration& dec) {
    detail::require_eulerian(g, "mixed-inequality");
    detail::Stopwatch sw;
    VerificationReport r;
    r.claim = "mixed-inequality";
    r.graph = serialize_graph(g);
    r.params["decoration"] = detail::decoration_to_json(dec);
    r.lhs = count_balanced_factorientations(g, dec);
    r.rhs = count_eulerian_orientations(g);
    r.status = (r.lhs <= r.rhs) ? Status::Holds : Status::Violated;
    if (r.status == Status::Violated)
        r.witness = {{"decoration", detail::decoration_to_json(dec)}};
    r.millis = sw.millis();
    return r;
}

namespace detail {

// Enumerate all r with 0 <= r_v <= d_v and sum r_v = |E|.
template <typename Fn>
void for_each_feasible_r(const DegreeVector& d, int total, Fn&& fn) {
    DegreeVector r(d.size(), 0);
    auto rec = [&](auto&& self, size_t v, int left) -> void {
        if (v == d.size()) {
            if (left == 0) fn(r);
            return;
        }
        int hi = std::min(d[v], left);
        for (int x = 0; x <= hi; ++x) {
            r[v] = x;
            self(self, v + 1, left - x);
        }
        r[v] = 0;
    };
    rec(rec, 0, total);
}

} // namespace detail

// eps_r(G) <= eps_{d/2}(G) over every feasible r.
inline VerificationReport check_balanced_max(const Multigraph& g) {
    detail::require_eulerian(g, "balanced-max");
    DegreeVector d = degree_vector(g);
    double space = 1;
    for (int dv : d) space *= dv + 1;
    if (space > 1e6)
        throw CapExceeded("balanced-max r-enumeration too large");
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.claim = "balanced-max";
    rep.graph = serialize_graph(g);

    auto half = half_degrees(g);
    BigCount ref = count_r_orientations(g, *half);
    rep.lhs = ref;
    rep.rhs = ref;
    rep.status = Status::Holds;
    int tested = 0;
    detail::for_each_feasible_r(d, g.edge_count(), [&](const DegreeVector& r) {
        if (rep.status == Status::Violated) return;
        ++tested;
        BigCount val = count_r_orientations(g, r);
        if (val > ref) {
            rep.status = Status::Violated;
            rep.rhs = val;
            rep.witness = {{"r", r}, {"value", to_decimal(val)}};
        }
    });
    rep.params["r_tested"] = tested;
    rep.millis = sw.millis();
    return rep;
}

// eps_r = eps_{d-r}, and eps_r(G) eps_{d-r}(G) = sum_A eps(A) eps_{r - d_A/2}(E\A).
// Subsets where some d_A(v) is odd contribute 0 (they are not Eulerian).
inline VerificationReport check_reversal_and_decomposition(const Multigraph& g,
                                                           const DegreeVector& r) {
    detail::require_edges(g, 20, "reversal-decomposition");
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.claim = "reversal-decomposition";
    rep.graph = serialize_graph(g);
    rep.params["r"] = r;

    DegreeVector d = degree_vector(g);
    DegreeVector rev(d.size());
    for (size_t v = 0; v < d.size(); ++v) rev[v] = d[v] - r[v];
    BigCount eps_r = count_r_orientations(g, r);
    BigCount eps_rev = count_r_orientations(g, rev);
    rep.params["eps_r"] = to_decimal(eps_r);
    rep.params["eps_rev"] = to_decimal(eps_rev);

    BigCount sum = 0;
    const EdgeSubset full = g.full_edge_mask();
    for (std::uint64_t mask = 0; mask <= full; ++mask) {
        EdgeSubset a = static_cast<EdgeSubset>(mask);
        Subgraph sub_a = subgraph_on(g, a);
        DegreeVector da = degree_vector(sub_a.graph);
        bool integral = true;
        for (int x : da)
            if (x % 2 != 0) { integral = false; break; }
        if (!integral) continue; // eps(A) = 0 there anyway
        BigCount eps_a = count_eulerian_orientations(sub_a.graph);
        if (eps_a == 0) continue;
        DegreeVector shifted(d.size());
        bool ok = true;
        for (size_t v = 0; v < d.size(); ++v) {
            shifted[v] = r[v] - da[v] / 2;
            if (shifted[v] < 0) ok = false;
        }
        if (!ok) continue;
        sum += eps_a *
               count_r_orientations(subgraph_on(g, full & ~a).graph, shifted);
    }

    rep.lhs = eps_r * eps_rev;
    rep.rhs = sum;
    rep.status = (eps_r == eps_rev && rep.lhs == rep.rhs) ? Status::Holds
                                                          : Status::Violated;
    if (rep.status == Status::Violated)
        rep.witness = {{"r", r}};
    rep.millis = sw.millis();
    return rep;
}

// eps(T_{n,m})^2 * 3^{3nm} >= 4^{3nm}, all in exact integers.
inline VerificationReport check_lieb_bound(int n, int m) {
    if (n < 3 || m < 3) throw InputError("toroidal grid sides must be >= 3");
    Multigraph t = toroidal_grid(n, m);
    detail::require_edges(t, kCountSoftEdgeCap, "lieb");
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.claim = "lieb";
    rep.graph = "T" + std::to_string(n) + "," + std::to_string(m);
    rep.params["n"] = n;
    rep.params["m"] = m;
    rep.params["bound_base"] = "(4/3)^(3/2) ~= 1.5396"; // for humans only

    BigCount eps = count_eulerian_orientations(t);
    unsigned exp = 3u * static_cast<unsigned>(n) * static_cast<unsigned>(m);
    rep.lhs = eps * eps * big_pow(3, exp);
    rep.rhs = big_pow(4, exp);
    rep.params["eps"] = to_decimal(eps);
    rep.status = (rep.lhs >= rep.rhs) ? Status::Holds : Status::Violated;
    rep.millis = sw.millis();
    return rep;
}

// Seeded random k-lifts probing eps(G)^k >= eps(H). "holds" here means no
// counterexample was found among the sampled lifts; it is evidence, not proof.
inline VerificationReport search_conjecture(const Multigraph& g, int k,
                                            int trials, std::uint64_t seed) {
    detail::require_eulerian(g, "conjecture");
    if (k < 2) throw InputError("cover degree must be at least 2");
    detail::Stopwatch sw;
    VerificationReport rep;
    rep.claim = "conjecture";
    rep.graph = serialize_graph(g);
    rep.params["k"] = k;
    rep.params["trials"] = trials;
    rep.params["seed"] = seed;
    rep.params["evidence_only"] = true;

    BigCount bound = big_pow(count_eulerian_orientations(g),
                             static_cast<unsigned>(k));
    rep.lhs = bound;
    rep.rhs = 0;
    rep.status = Status::Holds;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng = derive_stream(seed, t);
        LiftPermutations p = random_klift(g, k, rng);
        BigCount val = count_eulerian_orientations(build_klift(g, p).graph);
        if (val > rep.rhs) rep.rhs = val; // largest eps(H) seen
        if (val > bound) {
            rep.status = Status::Violated;
            rep.witness = {{"trial", t},
                           {"lift", detail::perms_to_json(p)},
                           {"eps_lift", to_decimal(val)}};
            break;
        }
    }
    rep.millis = sw.millis();
    return rep;
}

// Canonical ordering for aggregated reports: stable across thread counts.
inline void canonicalize_reports(std::vector<VerificationReport>& reports) {
    std::stable_sort(reports.begin(), reports.end(),
                     [](const VerificationReport& a, const VerificationReport& b) {
                         if (a.claim != b.claim) return a.claim < b.claim;
                         if (a.graph != b.graph) return a.graph < b.graph;
                         return a.params.dump() < b.params.dump();
                     });
}

} // namespace covercount

#endif
