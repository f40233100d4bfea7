#ifndef COVERCOUNT_MULTIGRAPH_HPP
#define COVERCOUNT_MULTIGRAPH_HPP

#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "covercount/bigint.hpp"

namespace covercount {

using EdgeId = int;
using EdgeSubset = std::uint32_t; // bitmask over EdgeIds; callers stay <= 32 edges
using DegreeVector = std::vector<int>;

enum class Sign : std::uint8_t { Plus, Minus };
enum class Role : std::uint8_t { O, S }; // orientation-edge vs subgraph-edge

using Signing = std::vector<Sign>;
using Decoration = std::vector<Role>;

// Edge subsets are enumerated as integer bitmasks, so identity sums cap out here.
inline constexpr int kSubsetEdgeCap = 24;
// Single-count operations warn past this (2^|E| configuration space).
inline constexpr int kCountSoftEdgeCap = 32;

// Loop-free multigraph with dense 0-based vertices and stable edge indices.
// Parallel edges are allowed and distinguished by their position in `edges`.
// Immutable after construction; all operations on it are pure.
struct Multigraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Multigraph() = default;
    Multigraph(int n_, std::vector<std::pair<int, int>> edges_)
        : n(n_), edges(std::move(edges_)) {
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw InputError("edge endpoint out of range");
            if (u == v) throw InputError("loop edges are not allowed");
        }
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    EdgeSubset full_edge_mask() const {
        if (edge_count() > kCountSoftEdgeCap)
            throw CapExceeded("edge mask needs more than 32 bits");
        return edge_count() == 32 ? ~EdgeSubset(0)
                                  : (EdgeSubset(1) << edge_count()) - 1;
    }
};

inline DegreeVector degree_vector(const Multigraph& g) {
    DegreeVector d(g.n, 0);
    for (const auto& [u, v] : g.edges) {
        ++d[u];
        ++d[v];
    }
    return d;
}

inline bool is_eulerian(const Multigraph& g) {
    for (int dv : degree_vector(g))
        if (dv % 2 != 0) return false;
    return true;
}

inline bool is_bipartite(const Multigraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (const auto& [u, v] : g.edges) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<int> color(g.n, -1);
    for (int s = 0; s < g.n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int v : adj[u]) {
                if (color[v] == -1) {
                    color[v] = 1 - color[u];
                    q.push(v);
                } else if (color[v] == color[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

// n x m grid closed toroidally; 4-regular. For n or m below 3 the wrap
// edges become parallel edges, which is only emitted under allow_multi.
inline Multigraph toroidal_grid(int n, int m, bool allow_multi = false) {
    if (n < 1 || m < 1) throw InputError("toroidal grid needs positive sides");
    if ((n < 3 || m < 3) && !allow_multi)
        throw InputError("toroidal grid sides below 3 create parallel wrap edges; "
                         "pass allow_multi to accept them");
    auto id = [m](int i, int j) { return i * m + j; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            edges.emplace_back(id(i, j), id((i + 1) % n, j));
            edges.emplace_back(id(i, j), id(i, (j + 1) % m));
        }
    return Multigraph(n * m, std::move(edges));
}

struct Subgraph {
    Multigraph graph;              // same vertex set as the host
    std::vector<EdgeId> edge_map;  // new EdgeId -> host EdgeId, in host order
};

inline Subgraph subgraph_on(const Multigraph& g, EdgeSubset a) {
    Subgraph out;
    out.graph.n = g.n;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (a & (EdgeSubset(1) << e)) {
            out.graph.edges.push_back(g.edges[e]);
            out.edge_map.push_back(e);
        }
    }
    return out;
}

// Partition of the edge set into connected components (vertices with no
// edges are left out; counting code treats them separately).
inline std::vector<std::vector<EdgeId>> edge_components(const Multigraph& g) {
    std::vector<int> parent(g.n);
    for (int v = 0; v < g.n; ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const auto& [u, v] : g.edges) parent[find(u)] = find(v);
    std::vector<std::vector<EdgeId>> comps;
    std::vector<int> comp_of(g.n, -1);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int root = find(g.edges[e].first);
        if (comp_of[root] == -1) {
            comp_of[root] = static_cast<int>(comps.size());
            comps.emplace_back();
        }
        comps[comp_of[root]].push_back(e);
    }
    return comps;
}

inline Multigraph disjoint_union(const Multigraph& a, const Multigraph& b) {
    std::vector<std::pair<int, int>> edges = a.edges;
    for (const auto& [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
    return Multigraph(a.n + b.n, std::move(edges));
}

inline Multigraph cycle_graph(int k) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Multigraph(k, std::move(edges));
}

} // namespace covercount

#endif
