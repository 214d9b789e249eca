#include <random>

#include "doctest.h"
#include "mcsep/constructions.hpp"
#include "mcsep/error.hpp"
#include "mcsep/graph.hpp"
#include "support/oracles.hpp"

using namespace mcsep;

namespace {

Graph path3() { return Graph::from_edges(3, {{0, 1}, {1, 2}}); }

}  // namespace

TEST_CASE("outer neighborhood") {
    CHECK(outer_neighborhood(path3(), {0}) == VertexSet{1});
    CHECK(outer_neighborhood(path3(), {}).empty());
    const Graph c5 = named_graph("cycle", 5);
    CHECK(outer_neighborhood(c5, {0, 1}) == VertexSet{2, 4});
    CHECK(outer_neighborhood(c5, c5.vertices()).empty());
}

TEST_CASE("component of a start vertex") {
    CHECK(component_of(path3(), 0, {1}) == VertexSet{0});
    CHECK(component_of(path3(), 0, {}) == VertexSet{0, 1, 2});
    // u=0, first path 2-3-4, second path 5-6-7; remove both middle vertices.
    const Graph s2 = seymour(2).g;
    CHECK(component_of(s2, 0, {3, 6}) == VertexSet{0, 2, 5});
    CHECK_THROWS_AS(component_of(path3(), 1, {1}), Error);
}

TEST_CASE("components are ordered by smallest member") {
    CHECK(components(Graph(3)) == std::vector<VertexSet>{{0}, {1}, {2}});
    CHECK(components(path3(), {1}) == std::vector<VertexSet>{{0}, {2}});
    CHECK(components(seymour(1).g, {3}) == std::vector<VertexSet>{{0, 2}, {1, 4}});
    CHECK(components(path3(), {0, 1, 2}).empty());
}

TEST_CASE("set primitives hold on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 2000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = oracle::random_graph(rng, n, 0.25);
        const VertexSet x(rng() & g.vertices().bits());
        CHECK_FALSE(outer_neighborhood(g, x).intersects(x));

        const VertexSet removed(rng() & rng() & g.vertices().bits());
        VertexSet covered;
        for (VertexSet c : components(g, removed)) {
            CHECK_FALSE(c.intersects(covered));
            CHECK(outer_neighborhood(g, c).is_subset_of(removed));
            covered |= c;
        }
        CHECK(covered == g.vertices() - removed);
    }
}

TEST_CASE("graph6 encodings") {
    // 0-1-2-3-4-0; independently checked against networkx.
    CHECK(to_graph6(named_graph("cycle", 5)) == "Dhc");
    CHECK(to_graph6(Graph(1)) == "@");
    CHECK(to_graph6(named_graph("complete", 4)) == "C~");
    // "DQc" is the path 2-0-4-3-1.
    CHECK(from_graph6("DQc") == Graph::from_edges(5, {{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
    CHECK(from_graph6("C~\n") == named_graph("complete", 4));
}

TEST_CASE("graph6 long header for 63 and 64 vertices") {
    for (int n : {62, 63, 64}) {
        const Graph g = named_graph("path", n);
        const std::string text = to_graph6(g);
        CHECK((n <= 62) == (text[0] != '~'));
        CHECK(from_graph6(text) == g);
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(from_graph6(""), Error);
    CHECK_THROWS_AS(from_graph6("C~~"), Error);       // too long
    CHECK_THROWS_AS(from_graph6("D"), Error);         // body missing
    CHECK_THROWS_AS(from_graph6("C\x7f"), Error);     // non-printable
    CHECK_THROWS_AS(from_graph6("B@"), Error);        // n=3 uses 3 bits; padding bit set
    CHECK_THROWS_AS(from_graph6("~??~"), Error);      // non-canonical long header
    std::string big = to_graph6(Graph(64));
    big[3] = '@';  // header now says 65 vertices
    CHECK_THROWS_AS(from_graph6(big), Error);
}

TEST_CASE("graph6 round trip on random graphs") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 10000; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 20);
        const Graph g = oracle::random_graph(rng, n, std::uniform_real_distribution<>(0, 1)(rng));
        REQUIRE(from_graph6(to_graph6(g)) == g);
    }
}

TEST_CASE("vertex deletion keeps the order of the others") {
    const Graph g = Graph::from_edges(4, {{0, 1}, {1, 3}, {2, 3}});
    CHECK(g.without_vertex(1) == Graph::from_edges(3, {{1, 2}}));
    CHECK(g.without_vertex(0) == Graph::from_edges(3, {{0, 2}, {1, 2}}));
}
