#ifndef COVERCOUNT_ORACLE_HPP
#define COVERCOUNT_ORACLE_HPP

#include <optional>

#include "covercount/count.hpp"
#include "covercount/multigraph.hpp"

namespace covercount {

// Literal enumeration of all 2^|E| configurations. Deliberately shares
// nothing with the optimized counters beyond the graph accessors, so it can
// serve as an independent oracle for them.
inline BigCount brute_force_count(const Multigraph& g, CountKind kind,
                                  const std::optional<DegreeVector>& r = {},
                                  const std::optional<Decoration>& dec = {}) {
    const int m = g.edge_count();
    if (m > kSubsetEdgeCap)
        throw CapExceeded("brute force limited to " +
                          std::to_string(kSubsetEdgeCap) + " edges");

    DegreeVector d = degree_vector(g);

    DegreeVector target;
    switch (kind) {
    case CountKind::ROrientations:
    case CountKind::RFactors:
        if (!r) throw InputError("this count kind needs a degree vector");
        if (static_cast<int>(r->size()) != g.n)
            throw InputError("degree vector length does not match vertex count");
        target = *r;
        break;
    case CountKind::EulerianOrientations:
    case CountKind::HalfGraphs:
    case CountKind::BalancedFactorientations:
        for (int dv : d) {
            if (dv % 2 != 0) return 0;
            target.push_back(dv / 2);
        }
        break;
    }

    Decoration roles(m, Role::O);
    if (kind == CountKind::BalancedFactorientations) {
        if (!dec) throw InputError("balanced factorientations need a decoration");
        if (static_cast<int>(dec->size()) != m)
            throw InputError("decoration length does not match edge count");
        roles = *dec;
    } else if (kind == CountKind::HalfGraphs || kind == CountKind::RFactors) {
        roles.assign(m, Role::S);
    }

    // Bit e of the mask picks one of the two choices at edge e: for an
    // O-edge the orientation (0: u->v), for an S-edge membership.
    BigCount hits = 0;
    const std::uint64_t configs = std::uint64_t(1) << m;
    DegreeVector mixed(g.n);
    for (std::uint64_t mask = 0; mask < configs; ++mask) {
        mixed.assign(g.n, 0);
        for (int e = 0; e < m; ++e) {
            auto [u, v] = g.edges[e];
            bool bit = (mask >> e) & 1;
            if (roles[e] == Role::O) {
                ++mixed[bit ? u : v];
            } else if (bit) {
                ++mixed[u];
                ++mixed[v];
            }
        }
        if (mixed == target) ++hits;
    }
    return hits;
}

} // namespace covercount

#endif
