#ifndef COVERCOUNT_COVERS_HPP
#define COVERCOUNT_COVERS_HPP

#include <utility>

#include "covercount/multigraph.hpp"
#include "covercount/rng.hpp"

namespace covercount {

// One permutation of {0..k-1} per edge, relative to the edge's endpoint
// order as listed: edge (u,v) lifts to ((u,i),(v,pi(i))).
struct LiftPermutations {
    int k = 2;
    std::vector<std::vector<int>> perms;
};

// A k-cover together with its bookkeeping. Vertex numbering is layer-major:
// copy i of base vertex v is i*n + v.
struct LiftedGraph {
    Multigraph graph;
    int k = 2;
    int base_n = 0;
    int base_m = 0;
    std::vector<EdgeId> projection; // lifted EdgeId -> base EdgeId

    int base_vertex(int lifted) const { return lifted % base_n; }
    int layer(int lifted) const { return lifted / base_n; }
};

inline LiftedGraph build_klift(const Multigraph& g, const LiftPermutations& p) {
    if (p.k < 2) throw InputError("cover degree must be at least 2");
    if (static_cast<int>(p.perms.size()) != g.edge_count())
        throw InputError("one permutation per edge required");
    LiftedGraph out;
    out.k = p.k;
    out.base_n = g.n;
    out.base_m = g.edge_count();
    std::vector<std::pair<int, int>> edges;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const auto& pi = p.perms[e];
        if (static_cast<int>(pi.size()) != p.k)
            throw InputError("permutation size does not match cover degree");
        std::vector<bool> seen(p.k, false);
        for (int x : pi) {
            if (x < 0 || x >= p.k || seen[x])
                throw InputError("edge permutation is not a bijection");
            seen[x] = true;
        }
        auto [u, v] = g.edges[e];
        for (int i = 0; i < p.k; ++i) {
            edges.emplace_back(i * g.n + u, pi[i] * g.n + v);
            out.projection.push_back(e);
        }
    }
    out.graph = Multigraph(g.n * p.k, std::move(edges));
    return out;
}

inline LiftPermutations signing_to_permutations(const Signing& s) {
    LiftPermutations p;
    p.k = 2;
    for (Sign sg : s)
        p.perms.push_back(sg == Sign::Plus ? std::vector<int>{0, 1}
                                           : std::vector<int>{1, 0});
    return p;
}

// 2-lift from a per-edge signing: + keeps layers, - crosses them.
inline LiftedGraph build_2lift(const Multigraph& g, const Signing& s) {
    if (static_cast<int>(s.size()) != g.edge_count())
        throw InputError("one sign per edge required");
    return build_klift(g, signing_to_permutations(s));
}

// All-plus signing: two disjoint copies of G.
inline LiftedGraph disjoint_double(const Multigraph& g) {
    return build_2lift(g, Signing(g.edge_count(), Sign::Plus));
}

// All-minus signing: G x K2, always bipartite with classes V0, V1.
inline LiftedGraph bipartite_double_cover(const Multigraph& g) {
    return build_2lift(g, Signing(g.edge_count(), Sign::Minus));
}

inline DegreeVector induced_degree_vector(const DegreeVector& r_base,
                                          const LiftedGraph& lift) {
    if (static_cast<int>(r_base.size()) != lift.base_n)
        throw InputError("degree vector length does not match base graph");
    DegreeVector r(lift.graph.n);
    for (int v = 0; v < lift.graph.n; ++v) r[v] = r_base[lift.base_vertex(v)];
    return r;
}

inline Decoration transfer_decorations(const Decoration& dec_base,
                                       const LiftedGraph& lift) {
    if (static_cast<int>(dec_base.size()) != lift.base_m)
        throw InputError("decoration length does not match base graph");
    Decoration dec(lift.graph.edge_count());
    for (EdgeId e = 0; e < lift.graph.edge_count(); ++e)
        dec[e] = dec_base[lift.projection[e]];
    return dec;
}

// The bar operation: restrict to B and swap the role o<->s on every
// minus-signed edge of B.
inline std::pair<Multigraph, Decoration>
bar_restriction(const Multigraph& g, EdgeSubset b, const Signing& s,
                const Decoration& dec) {
    if (static_cast<int>(s.size()) != g.edge_count() ||
        static_cast<int>(dec.size()) != g.edge_count())
        throw InputError("signing/decoration length does not match edge count");
    Subgraph sub = subgraph_on(g, b);
    Decoration out;
    for (EdgeId e : sub.edge_map) {
        Role r = dec[e];
        if (s[e] == Sign::Minus) r = (r == Role::O) ? Role::S : Role::O;
        out.push_back(r);
    }
    return {std::move(sub.graph), std::move(out)};
}

inline Signing random_signing(const Multigraph& g, SplitMix64& rng) {
    Signing s(g.edge_count());
    for (auto& sg : s) sg = rng.coin() ? Sign::Minus : Sign::Plus;
    return s;
}

inline Signing random_signing(const Multigraph& g, std::uint64_t seed) {
    SplitMix64 rng = derive_stream(seed, 0);
    return random_signing(g, rng);
}

inline LiftPermutations random_klift(const Multigraph& g, int k,
                                     SplitMix64& rng) {
    LiftPermutations p;
    p.k = k;
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        p.perms.push_back(rng.permutation(k));
    return p;
}

inline LiftPermutations random_klift(const Multigraph& g, int k,
                                     std::uint64_t seed) {
    SplitMix64 rng = derive_stream(seed, 0);
    return random_klift(g, k, rng);
}

} // namespace covercount

#endif
