#include <random>
#include <set>

#include "doctest.h"
#include "mcsep/constructions.hpp"
#include "mcsep/error.hpp"
#include "mcsep/generate.hpp"
#include "mcsep/separators.hpp"
#include "support/oracles.hpp"

using namespace mcsep;

namespace {

// u=0, v=4, interior 1-2-3
Graph path5() { return named_graph("path", 5); }
// u=0, a=1, v=2, b=3
Graph c4() { return named_graph("cycle", 4); }

int floor_third(int n) { return n / 3; }

}  // namespace

TEST_CASE("is_separator") {
    const Graph p = named_graph("path", 3);
    CHECK(is_separator(p, 0, 2, {1}));
    CHECK_FALSE(is_separator(p, 0, 2, {}));
    const Graph k4 = named_graph("complete", 4);
    CHECK_FALSE(is_separator(k4, 0, 1, {}));
    CHECK_FALSE(is_separator(k4, 0, 1, {2, 3}));
    CHECK_THROWS_AS(is_separator(p, 0, 2, {0}), Error);
    CHECK_THROWS_AS(is_separator(p, 1, 1, {}), Error);
    CHECK_THROWS_AS(is_separator(p, 0, 3, {}), Error);
}

TEST_CASE("minimality by deletion and by full components") {
    CHECK(is_minimal_separator(path5(), 0, 4, {1}));
    CHECK_FALSE(is_minimal_separator(path5(), 0, 4, {1, 2}));
    CHECK(is_minimal_separator(c4(), 0, 2, {1, 3}));
    CHECK_FALSE(is_minimal_separator(c4(), 0, 2, {1}));
    CHECK(is_minimal_separator(seymour(1).g, 0, 1, {3}));
    for (VertexSet t : {VertexSet{1}, VertexSet{1, 2}, VertexSet{}})
        CHECK(is_minimal_separator_full(path5(), 0, 4, t) == is_minimal_separator(path5(), 0, 4, t));
}

TEST_CASE("the two minimality tests agree on random probes") {
    std::mt19937_64 rng(99);
    int positives = 0;
    for (int probe = 0; probe < 100000; ++probe) {
        const int n = 2 + static_cast<int>(rng() % 11);
        const Graph g = oracle::random_graph(rng, n, 0.35);
        const int u = static_cast<int>(rng() % n);
        int v = static_cast<int>(rng() % (n - 1));
        if (v >= u) ++v;
        const VertexSet t = VertexSet(rng() & rng() & g.vertices().bits()) - VertexSet{u, v};
        const bool by_deletion = is_minimal_separator(g, u, v, t);
        REQUIRE(by_deletion == is_minimal_separator_full(g, u, v, t));
        positives += by_deletion;
    }
    CHECK(positives > 1000);
}

TEST_CASE("brute-force oracle examples") {
    CHECK(enumerate_minimal_separators_bruteforce(path5(), 0, 4) ==
          SeparatorFamily({{1}, {2}, {3}}));
    const Graph edge_plus_isolated = Graph::from_edges(3, {{0, 1}});
    CHECK(enumerate_minimal_separators_bruteforce(edge_plus_isolated, 0, 1).empty());
    CHECK(enumerate_minimal_separators_bruteforce(Graph(2), 0, 1) == SeparatorFamily({VertexSet{}}));
    CHECK_THROWS_AS(enumerate_minimal_separators_bruteforce(Graph(25), 0, 1), Error);
}

TEST_CASE("stream examples") {
    const auto s2 = minimal_separator_family(seymour(2).g, 0, 1);
    CHECK(s2.size() == 9);
    for (VertexSet t : s2) {
        CHECK(t.size() == 2);
        CHECK((t & VertexSet{2, 3, 4}).size() == 1);
        CHECK((t & VertexSet{5, 6, 7}).size() == 1);
    }
    CHECK(enumerate_minimal_separators(named_graph("complete", 5), 1, 3).empty());
    CHECK(count_minimal_separators(seymour(3).g, 0, 1) == 27);
    CHECK(count_minimal_separators(named_graph("path", 2), 0, 1) == 0);
    CHECK(count_minimal_separators(c4(), 0, 2) == 1);
    // Terminals in different components: only the empty set.
    CHECK(enumerate_minimal_separators(Graph::from_edges(4, {{0, 2}, {1, 3}}), 0, 1) ==
          std::vector<VertexSet>{VertexSet{}});
    CHECK_THROWS_AS(SeparatorStream(c4(), 2, 2), Error);
}

TEST_CASE("stream equals oracle on every graph up to 7 vertices") {
    for (int n = 2; n <= 7; ++n)
        for (const Graph& g : generate_graphs(n))
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v) {
                    const auto fast = minimal_separator_family(g, u, v);
                    REQUIRE(fast == enumerate_minimal_separators_bruteforce(g, u, v));
                    REQUIRE(fast.size() == enumerate_minimal_separators(g, u, v).size());
                }
}

TEST_CASE("separator laws on random graphs") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 10;
        const Graph g = oracle::random_graph(rng, n, 0.3);
        const int u = static_cast<int>(rng() % n);
        const int v = (u + 1 + static_cast<int>(rng() % (n - 1))) % n;
        const auto family = minimal_separator_family(g, u, v);
        REQUIRE(family == enumerate_minimal_separators_bruteforce(g, u, v));
        CHECK(family.is_antichain());
        for (VertexSet t : family) {
            const auto [su, sv] = separator_sides(g, u, v, t);
            CHECK(outer_neighborhood(g, su) == t);
            CHECK(outer_neighborhood(g, sv) == t);
            CHECK(std::min({su.size(), sv.size(), t.size()}) <= floor_third(n));
        }
    }
}

TEST_CASE("minimal vertex cuts") {
    CHECK(enumerate_minimal_vertex_cuts(named_graph("path", 3)) == SeparatorFamily({VertexSet{1}}));
    CHECK(enumerate_minimal_vertex_cuts(named_graph("complete", 6)).empty());
    CHECK(enumerate_minimal_vertex_cuts(Graph::from_edges(4, {{0, 1}, {2, 3}})) ==
          SeparatorFamily({VertexSet{}}));
    const auto s1 = enumerate_minimal_vertex_cuts(seymour(1).g);
    CHECK(s1 == SeparatorFamily(oracle::minimal_vertex_cuts(seymour(1).g)));
    CHECK(s1 == SeparatorFamily({{2}, {3}, {4}}));
    // C5: every pair of non-adjacent vertices.
    CHECK(enumerate_minimal_vertex_cuts(named_graph("cycle", 5)).size() == 5);
}

TEST_CASE("minimal vertex cuts equal the definition on all small graphs") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : generate_graphs(n)) {
            const auto cuts = enumerate_minimal_vertex_cuts(g);
            REQUIRE(cuts == SeparatorFamily(oracle::minimal_vertex_cuts(g)));
            CHECK(cuts.is_antichain());
            // Every cut is a minimal separator for a pair it splits.
            for (VertexSet t : cuts) {
                const auto parts = components(g, t);
                REQUIRE(parts.size() >= 2);
                CHECK(is_minimal_separator(g, parts[0].first(), parts[1].first(), t));
            }
        }
}
