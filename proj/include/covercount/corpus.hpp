#ifndef COVERCOUNT_CORPUS_HPP
#define COVERCOUNT_CORPUS_HPP

#include <algorithm>
#include <string>

#include "covercount/multigraph.hpp"
#include "covercount/rng.hpp"

namespace covercount {

struct CorpusGraph {
    std::string name;
    Multigraph graph;
};

struct CorpusSpec {
    int max_vertices = 24;
    int max_edges = 24;
    std::vector<std::string> families = {"cycles", "cycle-unions", "gluings",
                                         "special", "toroidal", "random"};
    std::uint64_t seed = 0;
    bool require_eulerian = true;
    int random_count = 10;

    bool has(const std::string& f) const {
        return std::find(families.begin(), families.end(), f) != families.end();
    }
};

namespace detail {

// Two cycles sharing vertex 0 (bowtie and friends).
inline Multigraph glued_cycles(const std::vector<int>& lengths) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int len : lengths) {
        int prev = 0;
        for (int i = 1; i < len; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
        edges.emplace_back(prev, 0);
    }
    return Multigraph(next, std::move(edges));
}

inline Multigraph complete_graph(int n) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Multigraph(n, std::move(edges));
}

inline Multigraph octahedron() {
    // K_{2,2,2}: complete tripartite, 4-regular on 6 vertices
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (u / 2 != v / 2) edges.emplace_back(u, v);
    return Multigraph(6, std::move(edges));
}

inline Multigraph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.emplace_back(u, a + v);
    return Multigraph(a + b, std::move(edges));
}

// Superposition of seeded random closed walks: every vertex degree stays
// even, so the result is Eulerian by construction.
inline Multigraph random_eulerian(SplitMix64& rng, int max_edges) {
    int nv = 4 + static_cast<int>(rng.below(4)); // 4..7 vertices
    int trails = 2 + static_cast<int>(rng.below(2));
    std::vector<std::pair<int, int>> edges;
    for (int t = 0; t < trails; ++t) {
        int start = static_cast<int>(rng.below(nv));
        int cur = start;
        int steps = 0;
        while (steps < 10) {
            int next;
            do {
                next = static_cast<int>(rng.below(nv));
            } while (next == cur);
            if (static_cast<int>(edges.size()) >= max_edges - 1 && next != start)
                next = (start == cur) ? (cur + 1) % nv : start;
            if (next == cur) break;
            edges.emplace_back(cur, next);
            cur = next;
            ++steps;
            if (cur == start && steps >= 3) break;
        }
        if (cur != start) edges.emplace_back(cur, start);
        if (static_cast<int>(edges.size()) >= max_edges) break;
    }
    return Multigraph(nv, std::move(edges));
}

} // namespace detail

// Deterministic corpus: the same spec always yields the same list, in the
// same order.
inline std::vector<CorpusGraph> generate_corpus(const CorpusSpec& spec) {
    std::vector<CorpusGraph> all;

    if (spec.has("cycles"))
        for (int k = 3; k <= 10; ++k)
            all.push_back({"C" + std::to_string(k), cycle_graph(k)});

    if (spec.has("cycle-unions")) {
        auto uni = [](int a, int b) {
            return disjoint_union(cycle_graph(a), cycle_graph(b));
        };
        all.push_back({"C3+C3", uni(3, 3)});
        all.push_back({"C3+C4", uni(3, 4)});
        all.push_back({"C3+C5", uni(3, 5)});
        all.push_back({"C4+C4", uni(4, 4)});
        all.push_back({"C4+C5", uni(4, 5)});
        all.push_back({"C5+C5", uni(5, 5)});
        all.push_back({"C3+C3+C3",
                       disjoint_union(cycle_graph(3), uni(3, 3))});
    }

    if (spec.has("gluings")) {
        all.push_back({"bowtie", detail::glued_cycles({3, 3})});
        all.push_back({"glue-3-4", detail::glued_cycles({3, 4})});
        all.push_back({"glue-4-4", detail::glued_cycles({4, 4})});
        all.push_back({"glue-3-5", detail::glued_cycles({3, 5})});
        all.push_back({"flower-3-3-3", detail::glued_cycles({3, 3, 3})});
    }

    if (spec.has("special")) {
        all.push_back({"K5", detail::complete_graph(5)});
        all.push_back({"octahedron", detail::octahedron()});
        all.push_back({"K2,4", detail::complete_bipartite(2, 4)});
    }

    if (spec.has("toroidal")) {
        all.push_back({"T3,3", toroidal_grid(3, 3)});
        all.push_back({"T3,4", toroidal_grid(3, 4)});
    }

    if (spec.has("random")) {
        for (int i = 0; i < spec.random_count; ++i) {
            SplitMix64 rng = derive_stream(spec.seed, 0x0c0ffee + i);
            all.push_back({"rand" + std::to_string(i),
                           detail::random_eulerian(rng, std::min(spec.max_edges, 14))});
        }
    }

    std::vector<CorpusGraph> out;
    for (auto& cg : all) {
        if (cg.graph.n > spec.max_vertices) continue;
        if (cg.graph.edge_count() > spec.max_edges) continue;
        if (spec.require_eulerian && !is_eulerian(cg.graph)) continue;
        out.push_back(std::move(cg));
    }
    return out;
}

} // namespace covercount

#endif
