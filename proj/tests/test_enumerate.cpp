#include <doctest.h>

#include "covercount/corpus.hpp"
#include "covercount/count.hpp"
#include "covercount/oracle.hpp"
#include "covercount/rng.hpp"

using namespace covercount;

namespace {

Multigraph bowtie() { return covercount::detail::glued_cycles({3, 3}); }

DegreeVector random_r(const Multigraph& g, SplitMix64& rng) {
    DegreeVector d = degree_vector(g);
    DegreeVector r(g.n);
    for (int v = 0; v < g.n; ++v)
        r[v] = static_cast<int>(rng.below(d[v] + 1));
    return r;
}

Decoration random_dec(const Multigraph& g, SplitMix64& rng) {
    Decoration dec(g.edge_count());
    for (auto& role : dec) role = rng.coin() ? Role::S : Role::O;
    return dec;
}

} // namespace

TEST_CASE("r-orientations of C3") {
    Multigraph c3 = cycle_graph(3);
    CHECK(count_r_orientations(c3, {1, 1, 1}) == 2);
    CHECK(count_r_orientations(c3, {2, 1, 0}) == 1);
    CHECK(count_r_orientations(c3, {3, 0, 0}) == 0);
    CHECK(count_r_orientations(c3, {2, 2, 2}) == 0); // wrong total
    CHECK(count_r_orientations(c3, {-1, 2, 2}) == 0);
}

TEST_CASE("Eulerian orientations") {
    CHECK(count_eulerian_orientations(cycle_graph(6)) == 2);
    CHECK(count_eulerian_orientations(Multigraph(3, {{0, 1}, {1, 2}})) == 0);
    // frozen from the brute-force oracle over all 2^6 orientations
    CHECK(brute_force_count(bowtie(), CountKind::EulerianOrientations) == 4);
    CHECK(count_eulerian_orientations(bowtie()) == 4);
    CHECK(count_eulerian_orientations(Multigraph(2, {})) == 1);
}

TEST_CASE("r-factors of C4") {
    Multigraph c4 = cycle_graph(4);
    CHECK(count_r_factors(c4, {1, 1, 1, 1}) == 2);
    CHECK(count_r_factors(c4, {2, 2, 2, 2}) == 1);
    CHECK(count_r_factors(c4, {2, 1, 1, 0}) == 0);
    CHECK(count_r_factors(Multigraph(1, {}), {0}) == 1);
}

TEST_CASE("half graphs") {
    CHECK(count_half_graphs(cycle_graph(6)) == 2);
    CHECK(count_half_graphs(cycle_graph(5)) == 0);
    CHECK(count_half_graphs(disjoint_union(cycle_graph(3), cycle_graph(3))) == 0);
    // frozen from the brute-force oracle over all 2^6 subsets
    CHECK(brute_force_count(bowtie(), CountKind::HalfGraphs) == 2);
    CHECK(count_half_graphs(bowtie()) == 2);
}

TEST_CASE("balanced factorientations") {
    Multigraph c3 = cycle_graph(3);
    CHECK(count_balanced_factorientations(c3, Decoration(3, Role::O)) == 2);
    CHECK(count_balanced_factorientations(c3, Decoration(3, Role::S)) == 0);
    CHECK(count_balanced_factorientations(c3, {Role::S, Role::O, Role::O}) == 0);
    CHECK(count_balanced_factorientations(Multigraph(2, {}), {}) == 1);
}

TEST_CASE("brute force basics") {
    CHECK(brute_force_count(cycle_graph(3), CountKind::EulerianOrientations) == 2);
    CHECK(brute_force_count(cycle_graph(4), CountKind::HalfGraphs) == 2);
    CHECK_THROWS_AS(
        brute_force_count(toroidal_grid(3, 5), CountKind::EulerianOrientations),
        CapExceeded);
}

TEST_CASE("convolution sums") {
    Multigraph c3 = cycle_graph(3);
    auto eps3 = [&](EdgeSubset a) { return eps_of_subset(c3, a); };
    CHECK(convolution_sum(c3, eps3, eps3) == 4);

    Multigraph c4 = cycle_graph(4);
    auto h4 = [&](EdgeSubset a) { return half_of_subset(c4, a); };
    CHECK(convolution_sum(c4, h4, h4) == 4);

    Multigraph empty(3, {});
    auto eps0 = [&](EdgeSubset a) { return eps_of_subset(empty, a); };
    CHECK(convolution_sum(empty, eps0, eps0) == 1);
}

TEST_CASE("convolution sum is thread-count independent") {
    Multigraph g = covercount::detail::glued_cycles({3, 4});
    auto f = [&](EdgeSubset a) { return eps_of_subset(g, a); };
    auto h = [&](EdgeSubset a) { return half_of_subset(g, a); };
    BigCount serial = convolution_sum(g, f, h, 1);
    CHECK(convolution_sum(g, f, h, 4) == serial);
    CHECK(convolution_sum(g, f, h, 7) == serial);
}

TEST_CASE("oracle equivalence across the corpus") {
    CorpusSpec spec;
    spec.max_edges = 12;
    spec.seed = 7;
    for (const auto& cg : generate_corpus(spec)) {
        const Multigraph& g = cg.graph;
        CAPTURE(cg.name);
        CHECK(count_eulerian_orientations(g) ==
              brute_force_count(g, CountKind::EulerianOrientations));
        CHECK(count_half_graphs(g) ==
              brute_force_count(g, CountKind::HalfGraphs));
        SplitMix64 rng = derive_stream(99, std::hash<std::string>{}(cg.name));
        for (int t = 0; t < 3; ++t) {
            DegreeVector r = random_r(g, rng);
            CHECK(count_r_orientations(g, r) ==
                  brute_force_count(g, CountKind::ROrientations, r));
            CHECK(count_r_factors(g, r) ==
                  brute_force_count(g, CountKind::RFactors, r));
            Decoration dec = random_dec(g, rng);
            CHECK(count_balanced_factorientations(g, dec) ==
                  brute_force_count(g, CountKind::BalancedFactorientations, {},
                                    dec));
        }
    }
}

TEST_CASE("reversal and complement symmetries") {
    CorpusSpec spec;
    spec.max_edges = 12;
    spec.require_eulerian = false;
    spec.seed = 3;
    for (const auto& cg : generate_corpus(spec)) {
        const Multigraph& g = cg.graph;
        DegreeVector d = degree_vector(g);
        SplitMix64 rng = derive_stream(5, std::hash<std::string>{}(cg.name));
        for (int t = 0; t < 3; ++t) {
            DegreeVector r = random_r(g, rng);
            DegreeVector rev(g.n);
            for (int v = 0; v < g.n; ++v) rev[v] = d[v] - r[v];
            CHECK(count_r_orientations(g, r) == count_r_orientations(g, rev));
            CHECK(count_r_factors(g, r) == count_r_factors(g, rev));
        }
    }
}

TEST_CASE("counters are multiplicative over disjoint unions") {
    Multigraph a = cycle_graph(4);
    Multigraph b = covercount::detail::glued_cycles({3, 3});
    Multigraph u = disjoint_union(a, b);
    CHECK(count_eulerian_orientations(u) ==
          count_eulerian_orientations(a) * count_eulerian_orientations(b));
    CHECK(count_half_graphs(u) == count_half_graphs(a) * count_half_graphs(b));
}

TEST_CASE("bipartite graphs have eps equal to h") {
    for (int k = 4; k <= 10; k += 2) {
        Multigraph c = cycle_graph(k);
        CHECK(count_eulerian_orientations(c) == count_half_graphs(c));
    }
    Multigraph k24 = covercount::detail::complete_bipartite(2, 4);
    CHECK(count_eulerian_orientations(k24) == count_half_graphs(k24));
}

TEST_CASE("infeasible r gives zero, not an error") {
    Multigraph c4 = cycle_graph(4);
    CHECK(count_r_orientations(c4, {4, 0, 0, 0}) == 0);
    CHECK(count_r_factors(c4, {1, 0, 0, 0}) == 0); // odd total
    CHECK(count_r_orientations(c4, {1, 1, 1, 0}) == 0); // wrong total
}
