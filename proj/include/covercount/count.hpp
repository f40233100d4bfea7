#ifndef COVERCOUNT_COUNT_HPP
#define COVERCOUNT_COUNT_HPP

#include <functional>
#include <iostream>
#include <numeric>
#include <optional>
#include <thread>

#include "covercount/multigraph.hpp"

namespace covercount {

enum class CountKind {
    EulerianOrientations,
    HalfGraphs,
    ROrientations,
    RFactors,
    BalancedFactorientations,
};

namespace detail {

inline void warn_soft_cap(int m) {
    static bool warned = false;
    if (m > kCountSoftEdgeCap && !warned) {
        warned = true;
        std::cerr << "warning: counting on " << m
                  << " edges exceeds the soft cap of " << kCountSoftEdgeCap
                  << "; expect long runtimes\n";
    }
}

// Edges of one component reordered so that consecutive edges share vertices;
// keeps the residual budgets tight and makes pruning effective.
inline std::vector<EdgeId> bfs_edge_order(const Multigraph& g,
                                          const std::vector<EdgeId>& comp) {
    std::vector<std::vector<EdgeId>> incident(g.n);
    for (EdgeId e : comp) {
        incident[g.edges[e].first].push_back(e);
        incident[g.edges[e].second].push_back(e);
    }
    std::vector<bool> seen_edge(g.edge_count(), false);
    std::vector<bool> seen_vertex(g.n, false);
    std::vector<EdgeId> order;
    std::queue<int> q;
    int start = g.edges[comp.front()].first;
    seen_vertex[start] = true;
    q.push(start);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (EdgeId e : incident[u]) {
            if (seen_edge[e]) continue;
            seen_edge[e] = true;
            order.push_back(e);
            for (int w : {g.edges[e].first, g.edges[e].second}) {
                if (!seen_vertex[w]) {
                    seen_vertex[w] = true;
                    q.push(w);
                }
            }
        }
    }
    return order;
}

// Shared backtracking state: `need` is the remaining budget at each vertex,
// `rem` the number of unprocessed incident edges. A branch survives only
// while 0 <= need[v] <= rem[v] at both endpoints of the edge just placed.
struct Backtracker {
    const Multigraph& g;
    std::vector<EdgeId> order;
    std::vector<int> need, rem;
    const Decoration* roles; // null = all O (orientations) is not implied; see kernels

    std::vector<int> comp_vertices;

    Backtracker(const Multigraph& g_, const std::vector<EdgeId>& comp,
                const DegreeVector& target, const Decoration* roles_)
        : g(g_), order(bfs_edge_order(g_, comp)), need(target), rem(g_.n, 0),
          roles(roles_) {
        for (EdgeId e : comp) {
            for (int w : {g.edges[e].first, g.edges[e].second}) {
                if (rem[w] == 0) comp_vertices.push_back(w);
                ++rem[w];
            }
        }
    }

    // Budgets of vertices outside this component are someone else's business.
    bool feasible_start() const {
        for (int v : comp_vertices)
            if (need[v] < 0 || need[v] > rem[v]) return false;
        return true;
    }

    bool ok(int u, int v) const {
        return need[u] >= 0 && need[u] <= rem[u] && need[v] >= 0 &&
               need[v] <= rem[v];
    }

    // kind: 0 = orientations, 1 = factors, 2 = factorientations (uses roles)
    template <int Kind>
    BigCount rec(size_t i) {
        if (i == order.size()) return 1;
        auto [u, v] = g.edges[order[i]];
        --rem[u];
        --rem[v];
        BigCount total = 0;
        bool orient = Kind == 0 || (Kind == 2 && (*roles)[order[i]] == Role::O);
        if (orient) {
            --need[v]; // u -> v
            if (ok(u, v)) total += rec<Kind>(i + 1);
            ++need[v];
            --need[u]; // v -> u
            if (ok(u, v)) total += rec<Kind>(i + 1);
            ++need[u];
        } else {
            --need[u]; // edge in the subgraph
            --need[v];
            if (ok(u, v)) total += rec<Kind>(i + 1);
            ++need[u];
            ++need[v];
            if (ok(u, v)) total += rec<Kind>(i + 1); // edge left out
        }
        ++rem[u];
        ++rem[v];
        return total;
    }
};

template <int Kind>
BigCount count_by_components(const Multigraph& g, const DegreeVector& target,
                             const Decoration* roles) {
    warn_soft_cap(g.edge_count());
    BigCount total = 1;
    for (const auto& comp : edge_components(g)) {
        Backtracker bt(g, comp, target, roles);
        if (!bt.feasible_start()) return 0;
        BigCount c = bt.rec<Kind>(0);
        if (c == 0) return 0;
        total *= c;
    }
    return total;
}

} // namespace detail

// Number of orientations with in-degree exactly r_v at every vertex.
// Infeasible r (negative, above the degree, or wrong total) gives 0.
inline BigCount count_r_orientations(const Multigraph& g, const DegreeVector& r) {
    if (static_cast<int>(r.size()) != g.n)
        throw InputError("degree vector length does not match vertex count");
    DegreeVector d = degree_vector(g);
    long long sum = 0;
    for (int v = 0; v < g.n; ++v) {
        if (r[v] < 0 || r[v] > d[v]) return 0;
        sum += r[v];
    }
    if (sum != g.edge_count()) return 0;
    return detail::count_by_components<0>(g, r, nullptr);
}

// Number of edge subsets F with d_F(v) = r_v at every vertex.
inline BigCount count_r_factors(const Multigraph& g, const DegreeVector& r) {
    if (static_cast<int>(r.size()) != g.n)
        throw InputError("degree vector length does not match vertex count");
    DegreeVector d = degree_vector(g);
    long long sum = 0;
    for (int v = 0; v < g.n; ++v) {
        if (r[v] < 0 || r[v] > d[v]) return 0;
        sum += r[v];
    }
    if (sum % 2 != 0) return 0;
    return detail::count_by_components<1>(g, r, nullptr);
}

inline std::optional<DegreeVector> half_degrees(const Multigraph& g) {
    DegreeVector d = degree_vector(g);
    for (int& x : d) {
        if (x % 2 != 0) return std::nullopt;
        x /= 2;
    }
    return d;
}

inline BigCount count_eulerian_orientations(const Multigraph& g) {
    auto r = half_degrees(g);
    if (!r) return 0;
    return count_r_orientations(g, *r);
}

inline BigCount count_half_graphs(const Multigraph& g) {
    auto r = half_degrees(g);
    if (!r) return 0;
    return count_r_factors(g, *r);
}

// Balanced factorientations: O-edges are oriented, S-edges are in/out, and
// the mixed degree at every vertex must hit d_G(v)/2.
inline BigCount count_balanced_factorientations(const Multigraph& g,
                                                const Decoration& dec) {
    if (static_cast<int>(dec.size()) != g.edge_count())
        throw InputError("decoration length does not match edge count");
    auto r = half_degrees(g);
    if (!r) return 0;
    return detail::count_by_components<2>(g, *r, &dec);
}

// Sum over all subsets A of f(A) * h(E \ A). f and h receive the subset
// mask; results are identical for any thread count.
inline BigCount convolution_sum(const Multigraph& g,
                                const std::function<BigCount(EdgeSubset)>& f,
                                const std::function<BigCount(EdgeSubset)>& h,
                                int threads = 1) {
    const int m = g.edge_count();
    if (m > kSubsetEdgeCap)
        throw CapExceeded("convolution_sum limited to " +
                          std::to_string(kSubsetEdgeCap) + " edges");
    const EdgeSubset full = g.full_edge_mask();
    const std::uint64_t count = std::uint64_t(1) << m;

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        BigCount acc = 0;
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            EdgeSubset a = static_cast<EdgeSubset>(mask);
            acc += f(a) * h(full & ~a);
        }
        return acc;
    };

    if (threads <= 1 || count < 1024) return run_range(0, count);

    const int t = std::min<std::uint64_t>(threads, count);
    std::vector<BigCount> partial(t);
    std::vector<std::thread> pool;
    for (int i = 0; i < t; ++i) {
        std::uint64_t lo = count * i / t, hi = count * (i + 1) / t;
        pool.emplace_back([&, i, lo, hi] { partial[i] = run_range(lo, hi); });
    }
    for (auto& th : pool) th.join();
    BigCount total = 0;
    for (const auto& p : partial) total += p; // fixed order
    return total;
}

// Subset-counter helpers used by the identity sums.
inline BigCount eps_of_subset(const Multigraph& g, EdgeSubset a) {
    return count_eulerian_orientations(subgraph_on(g, a).graph);
}

inline BigCount half_of_subset(const Multigraph& g, EdgeSubset a) {
    return count_half_graphs(subgraph_on(g, a).graph);
}

} // namespace covercount

#endif
