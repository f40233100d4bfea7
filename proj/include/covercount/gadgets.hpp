#ifndef COVERCOUNT_GADGETS_HPP
#define COVERCOUNT_GADGETS_HPP

#include <bit>
#include <thread>
#include <unordered_map>

#include <json.hpp>

#include "covercount/bigint.hpp"
#include "covercount/multigraph.hpp"

namespace covercount {

inline constexpr int kPermanentDimCap = 26;
inline constexpr int kMatcherVertexCap = 40;

// Bipartite multigraph stored as a multiplicity matrix.
struct BipartiteGraph {
    int left_n = 0;
    int right_n = 0;
    std::vector<std::vector<int>> mult; // left_n x right_n

    bool square() const { return left_n == right_n; }
};

// Where each gadget vertex came from in the base graph.
struct Provenance {
    enum class Kind { EdgeVertex, EdgeHalf, VertexCopy } kind;
    EdgeId edge = -1;
    int endpoint = -1; // EdgeHalf: 0 = first listed endpoint, 1 = second
    int vertex = -1;   // VertexCopy
    int copy = -1;
};

using GadgetMap = std::vector<Provenance>;

// Schrijver's G*: left side one vertex per edge, right side r_v copies of
// each vertex, edge e=(u,v) adjacent to every copy of u and of v. The map
// lists left vertices first, then right vertices.
inline std::pair<BipartiteGraph, GadgetMap>
build_schrijver_star(const Multigraph& g, const DegreeVector& r) {
    if (static_cast<int>(r.size()) != g.n)
        throw InputError("degree vector length does not match vertex count");
    for (int rv : r)
        if (rv < 0) throw InputError("negative degree target in gadget");

    GadgetMap map;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        map.push_back({Provenance::Kind::EdgeVertex, e, -1, -1, -1});

    std::vector<int> first_copy_col(g.n, -1);
    int cols = 0;
    for (int v = 0; v < g.n; ++v) {
        first_copy_col[v] = cols;
        for (int i = 0; i < r[v]; ++i) {
            map.push_back({Provenance::Kind::VertexCopy, -1, -1, v, i});
            ++cols;
        }
    }

    BipartiteGraph b;
    b.left_n = g.edge_count();
    b.right_n = cols;
    b.mult.assign(b.left_n, std::vector<int>(cols, 0));
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        for (int w : {g.edges[e].first, g.edges[e].second})
            for (int i = 0; i < r[w]; ++i)
                b.mult[e][first_copy_col[w] + i] += 1;
    return {std::move(b), std::move(map)};
}

// Tutte's G**: each edge e=(u,v) splits into e_uv and e_vu joined by an
// edge; copies of u attach to e_vu and copies of v to e_uv.
inline std::pair<Multigraph, GadgetMap>
build_tutte_doublestar(const Multigraph& g, const DegreeVector& r) {
    if (static_cast<int>(r.size()) != g.n)
        throw InputError("degree vector length does not match vertex count");
    for (int rv : r)
        if (rv < 0) throw InputError("negative degree target in gadget");

    const int m = g.edge_count();
    GadgetMap map;
    for (EdgeId e = 0; e < m; ++e) {
        map.push_back({Provenance::Kind::EdgeHalf, e, 0, -1, -1}); // e_uv
        map.push_back({Provenance::Kind::EdgeHalf, e, 1, -1, -1}); // e_vu
    }
    std::vector<int> first_copy(g.n, -1);
    int nv = 2 * m;
    for (int v = 0; v < g.n; ++v) {
        first_copy[v] = nv;
        for (int i = 0; i < r[v]; ++i) {
            map.push_back({Provenance::Kind::VertexCopy, -1, -1, v, i});
            ++nv;
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (EdgeId e = 0; e < m; ++e) {
        auto [u, v] = g.edges[e];
        edges.emplace_back(2 * e, 2 * e + 1);
        for (int i = 0; i < r[u]; ++i)
            edges.emplace_back(first_copy[u] + i, 2 * e + 1); // copies of u - e_vu
        for (int i = 0; i < r[v]; ++i)
            edges.emplace_back(first_copy[v] + i, 2 * e); // copies of v - e_uv
    }
    return {Multigraph(nv, std::move(edges)), std::move(map)};
}

inline BigCount factorial_product(const DegreeVector& r) {
    BigCount p = 1;
    for (int rv : r) {
        if (rv < 0) throw InputError("negative entry in factorial product");
        for (int i = 2; i <= rv; ++i) p *= i;
    }
    return p;
}

// Exact permanent via Ryser's inclusion-exclusion with Gray-code row-sum
// updates. The subset loop may be range-partitioned; partial sums are
// reduced in range order, so the result is thread-count independent.
inline BigCount permanent(const std::vector<std::vector<int>>& mat,
                          int threads = 1) {
    const int n = static_cast<int>(mat.size());
    if (n == 0) return 1;
    for (const auto& row : mat) {
        if (static_cast<int>(row.size()) != n)
            throw InputError("permanent needs a square matrix");
        for (int x : row)
            if (x < 0) throw InputError("permanent entries must be nonnegative");
    }
    if (n > kPermanentDimCap)
        throw CapExceeded("permanent limited to dimension " +
                          std::to_string(kPermanentDimCap));

    auto run_range = [&](std::uint64_t lo, std::uint64_t hi) {
        BigCount acc = 0;
        std::uint64_t gray = lo ^ (lo >> 1);
        std::vector<long long> rowsum(n, 0);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (gray & (std::uint64_t(1) << j)) rowsum[i] += mat[i][j];
        int parity = std::popcount(gray) & 1;
        for (std::uint64_t k = lo;; ++k) {
            if (k != lo) {
                int j = std::countr_zero(k);
                std::uint64_t bit = std::uint64_t(1) << j;
                gray ^= bit;
                parity ^= 1;
                if (gray & bit)
                    for (int i = 0; i < n; ++i) rowsum[i] += mat[i][j];
                else
                    for (int i = 0; i < n; ++i) rowsum[i] -= mat[i][j];
            }
            if (gray != 0) {
                long long prod = 1;
                bool overflow = false;
                for (int i = 0; i < n && !overflow; ++i)
                    overflow = __builtin_mul_overflow(prod, rowsum[i], &prod);
                BigCount term;
                if (overflow) {
                    term = 1;
                    for (int i = 0; i < n; ++i) term *= rowsum[i];
                } else {
                    term = prod;
                }
                if (parity)
                    acc -= term;
                else
                    acc += term;
            }
            if (k + 1 == hi) break;
        }
        return acc;
    };

    const std::uint64_t total = std::uint64_t(1) << n;
    BigCount sum = 0;
    if (threads <= 1 || total < 4096) {
        sum = run_range(0, total);
    } else {
        const int t = static_cast<int>(
            std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total));
        std::vector<BigCount> partial(t);
        std::vector<std::thread> pool;
        for (int i = 0; i < t; ++i) {
            std::uint64_t lo = total * i / t, hi = total * (i + 1) / t;
            pool.emplace_back([&, i, lo, hi] { partial[i] = run_range(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (const auto& p : partial) sum += p;
    }
    return (n % 2) ? -sum : sum;
}

inline BigCount permanent(const BipartiteGraph& b, int threads = 1) {
    if (!b.square()) return 0; // no perfect matching in an unbalanced graph
    return permanent(b.mult, threads);
}

namespace detail {

// Branching matcher state over alive-vertex bitmasks, with component
// splitting and memoization per mask.
struct Matcher {
    int n;
    std::vector<std::vector<int>> mult;
    std::unordered_map<std::uint64_t, BigCount> memo;

    std::uint64_t component_of(int start, std::uint64_t alive) const {
        std::uint64_t comp = std::uint64_t(1) << start;
        std::vector<int> stack{start};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u = 0; u < n; ++u) {
                std::uint64_t bit = std::uint64_t(1) << u;
                if ((alive & bit) && !(comp & bit) && mult[v][u] > 0) {
                    comp |= bit;
                    stack.push_back(u);
                }
            }
        }
        return comp;
    }

    BigCount pm(std::uint64_t alive) {
        if (alive == 0) return 1;
        auto it = memo.find(alive);
        if (it != memo.end()) return it->second;

        int first = std::countr_zero(alive);
        std::uint64_t comp = component_of(first, alive);
        BigCount result;
        if (std::popcount(comp) % 2 != 0) {
            result = 0;
        } else {
            // min-degree vertex of the component
            int best = -1, best_deg = -1;
            for (int v = 0; v < n; ++v) {
                if (!(comp & (std::uint64_t(1) << v))) continue;
                int deg = 0;
                for (int u = 0; u < n; ++u)
                    if (comp & (std::uint64_t(1) << u)) deg += mult[v][u];
                if (best == -1 || deg < best_deg) {
                    best = v;
                    best_deg = deg;
                }
            }
            if (best_deg == 0) {
                result = 0;
            } else {
                BigCount in_comp = 0;
                for (int u = 0; u < n; ++u) {
                    if (u == best || !(comp & (std::uint64_t(1) << u))) continue;
                    if (mult[best][u] == 0) continue;
                    std::uint64_t rest =
                        comp & ~(std::uint64_t(1) << best) & ~(std::uint64_t(1) << u);
                    in_comp += mult[best][u] * pm(rest);
                }
                result = in_comp == 0 ? BigCount(0) : in_comp * pm(alive & ~comp);
            }
        }
        memo.emplace(alive, result);
        return result;
    }
};

} // namespace detail

// Exact perfect matching count; parallel edges contribute multiplicity.
inline BigCount count_perfect_matchings(const Multigraph& g) {
    if (g.n > kMatcherVertexCap)
        throw CapExceeded("matching counter limited to " +
                          std::to_string(kMatcherVertexCap) + " vertices");
    if (g.n % 2 != 0) return 0;
    detail::Matcher m;
    m.n = g.n;
    m.mult.assign(g.n, std::vector<int>(g.n, 0));
    for (const auto& [u, v] : g.edges) {
        m.mult[u][v] += 1;
        m.mult[v][u] += 1;
    }
    std::uint64_t alive =
        g.n == 64 ? ~std::uint64_t(0) : (std::uint64_t(1) << g.n) - 1;
    return m.pm(alive);
}

inline BigCount count_perfect_matchings(const BipartiteGraph& b) {
    if (b.left_n != b.right_n) return 0;
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < b.left_n; ++i)
        for (int j = 0; j < b.right_n; ++j)
            for (int c = 0; c < b.mult[i][j]; ++c)
                edges.emplace_back(i, b.left_n + j);
    return count_perfect_matchings(Multigraph(b.left_n + b.right_n, std::move(edges)));
}

inline Multigraph bipartite_to_multigraph(const BipartiteGraph& b) {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < b.left_n; ++i)
        for (int j = 0; j < b.right_n; ++j)
            for (int c = 0; c < b.mult[i][j]; ++c)
                edges.emplace_back(i, b.left_n + j);
    return Multigraph(b.left_n + b.right_n, std::move(edges));
}

// Covering-map check: every fiber has size k and the edge multiplicity from
// any lifted vertex into the fiber over y equals the base multiplicity.
inline bool is_k_cover(const Multigraph& h, const Multigraph& g,
                       const std::vector<int>& vertex_map, int k) {
    if (static_cast<int>(vertex_map.size()) != h.n) return false;
    std::vector<int> fiber_size(g.n, 0);
    for (int x : vertex_map) {
        if (x < 0 || x >= g.n) return false;
        ++fiber_size[x];
    }
    for (int s : fiber_size)
        if (s != k) return false;
    if (h.edge_count() != k * g.edge_count()) return false;

    std::vector<std::vector<int>> mg(g.n, std::vector<int>(g.n, 0));
    for (const auto& [u, v] : g.edges) {
        ++mg[u][v];
        ++mg[v][u];
    }
    // multiplicity from lifted vertex x' into the fiber over base vertex y
    std::vector<std::vector<int>> into_fiber(h.n, std::vector<int>(g.n, 0));
    for (const auto& [u, v] : h.edges) {
        ++into_fiber[u][vertex_map[v]];
        ++into_fiber[v][vertex_map[u]];
    }
    for (int x = 0; x < h.n; ++x)
        for (int y = 0; y < g.n; ++y)
            if (into_fiber[x][y] != mg[vertex_map[x]][y]) return false;
    return true;
}

inline nlohmann::json provenance_to_json(const Provenance& p) {
    switch (p.kind) {
    case Provenance::Kind::EdgeVertex:
        return {{"kind", "edge"}, {"edge", p.edge}};
    case Provenance::Kind::EdgeHalf:
        return {{"kind", "edge-half"}, {"edge", p.edge}, {"endpoint", p.endpoint}};
    case Provenance::Kind::VertexCopy:
    default:
        return {{"kind", "vertex-copy"}, {"vertex", p.vertex}, {"copy", p.copy}};
    }
}

inline nlohmann::json gadget_to_json(const BipartiteGraph& b, const GadgetMap& map) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& p : map) vertices.push_back(provenance_to_json(p));
    nlohmann::json mult = nlohmann::json::array();
    for (const auto& row : b.mult) mult.push_back(row);
    return {{"type", "bipartite"},
            {"left", b.left_n},
            {"right", b.right_n},
            {"vertices", vertices},
            {"mult", mult}};
}

inline nlohmann::json gadget_to_json(const Multigraph& g, const GadgetMap& map) {
    nlohmann::json vertices = nlohmann::json::array();
    for (const auto& p : map) vertices.push_back(provenance_to_json(p));
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({{"u", u}, {"v", v}});
    return {{"type", "general"},
            {"n", g.n},
            {"vertices", vertices},
            {"edges", edges}};
}

} // namespace covercount

#endif
