#include <doctest.h>

#include "covercount/corpus.hpp"
#include "covercount/io.hpp"
#include "covercount/multigraph.hpp"

using namespace covercount;

TEST_CASE("parse: triangle") {
    ParsedGraph pg = parse_graph("3 3\n0 1\n1 2\n2 0\n");
    CHECK(pg.graph.n == 3);
    CHECK(pg.graph.edge_count() == 3);
    CHECK_FALSE(pg.signing.has_value());
    CHECK_FALSE(pg.decoration.has_value());
}

TEST_CASE("parse: single vertex, no edges") {
    ParsedGraph pg = parse_graph("1 0\n");
    CHECK(pg.graph.n == 1);
    CHECK(pg.graph.edge_count() == 0);
}

TEST_CASE("parse: rejects loops, bad indices, malformed lines") {
    CHECK_THROWS_AS(parse_graph("2 1\n0 0\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\n0 5\n"), InputError);
    CHECK_THROWS_AS(parse_graph("2 1\nhello\n"), InputError);
    CHECK_THROWS_AS(parse_graph(""), InputError);
    CHECK_THROWS_AS(parse_graph("2 2\n0 1\n"), InputError);
}

TEST_CASE("parse: comments, signs and roles") {
    ParsedGraph pg = parse_graph("# a triangle\n3 3\n0 1 + o\n1 2 - s\n2 0 + o\n");
    REQUIRE(pg.signing.has_value());
    REQUIRE(pg.decoration.has_value());
    CHECK((*pg.signing)[1] == Sign::Minus);
    CHECK((*pg.decoration)[1] == Role::S);
}

TEST_CASE("serialize then parse is the identity on canonical form") {
    ParsedGraph pg = parse_graph("4 4\n0 1 - s\n1 2 + o\n2 3 - o\n3 0 + s\n");
    std::string text = serialize_graph(pg);
    ParsedGraph again = parse_graph(text);
    CHECK(serialize_graph(again) == text);
    CHECK(again.graph.edges == pg.graph.edges);
    CHECK(*again.signing == *pg.signing);
    CHECK(*again.decoration == *pg.decoration);
}

TEST_CASE("json mirror round trip") {
    ParsedGraph pg = parse_graph("3 3\n0 1 +\n1 2 -\n2 0 +\n");
    ParsedGraph back = graph_from_json(graph_to_json(pg));
    CHECK(serialize_graph(back) == serialize_graph(pg));
}

TEST_CASE("degree_vector") {
    CHECK(degree_vector(cycle_graph(3)) == DegreeVector{2, 2, 2});
    Multigraph path(3, {{0, 1}, {1, 2}});
    CHECK(degree_vector(path) == DegreeVector{1, 2, 1});
    Multigraph twin(2, {{0, 1}, {0, 1}});
    CHECK(degree_vector(twin) == DegreeVector{2, 2});
}

TEST_CASE("degree sum is twice the edge count") {
    for (const auto& cg : generate_corpus(CorpusSpec{})) {
        int sum = 0;
        for (int d : degree_vector(cg.graph)) sum += d;
        CHECK(sum == 2 * cg.graph.edge_count());
    }
}

TEST_CASE("is_eulerian") {
    CHECK(is_eulerian(cycle_graph(5)));
    CHECK_FALSE(is_eulerian(Multigraph(3, {{0, 1}, {1, 2}})));
    // connectedness is not required
    CHECK(is_eulerian(disjoint_union(cycle_graph(3), cycle_graph(3))));
}

TEST_CASE("is_bipartite") {
    CHECK(is_bipartite(cycle_graph(4)));
    CHECK_FALSE(is_bipartite(cycle_graph(3)));
    CHECK(is_bipartite(Multigraph(3, {}))); // vacuously
}

TEST_CASE("toroidal grid") {
    Multigraph t33 = toroidal_grid(3, 3);
    CHECK(t33.n == 9);
    CHECK(t33.edge_count() == 18);
    for (int d : degree_vector(t33)) CHECK(d == 4);

    Multigraph t34 = toroidal_grid(3, 4);
    CHECK(t34.n == 12);
    CHECK(t34.edge_count() == 24);

    CHECK_THROWS_AS(toroidal_grid(2, 3), InputError);
    Multigraph t23 = toroidal_grid(2, 3, /*allow_multi=*/true);
    CHECK(t23.edge_count() == 12);
}

TEST_CASE("subgraph_on") {
    Multigraph c3 = cycle_graph(3);
    Subgraph all = subgraph_on(c3, 0b111);
    CHECK(all.graph.edges == c3.edges);
    CHECK(all.edge_map == std::vector<EdgeId>{0, 1, 2});

    Subgraph none = subgraph_on(c3, 0);
    CHECK(none.graph.n == 3);
    CHECK(none.graph.edge_count() == 0);

    Multigraph c4 = cycle_graph(4);
    Subgraph two = subgraph_on(c4, 0b0011);
    CHECK(two.graph.edge_count() == 2);
    CHECK(degree_vector(two.graph) == DegreeVector{1, 2, 1, 0});
}

TEST_CASE("corpus generation is deterministic and honors its constraints") {
    CorpusSpec spec;
    spec.seed = 12345;
    auto a = generate_corpus(spec);
    auto b = generate_corpus(spec);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].graph.edges == b[i].graph.edges);
        CHECK(is_eulerian(a[i].graph));
        CHECK(a[i].graph.edge_count() <= spec.max_edges);
    }
}

TEST_CASE("corpus with small vertex bound contains the small cycles") {
    CorpusSpec spec;
    spec.max_vertices = 6;
    auto corpus = generate_corpus(spec);
    for (const char* want : {"C3", "C4", "C5", "C6"}) {
        bool found = false;
        for (const auto& cg : corpus) found |= cg.name == want;
        CHECK_MESSAGE(found, want);
    }
}
