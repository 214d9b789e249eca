#pragma once

#include <cstdint>
#include <deque>
#include <optional>
#include <unordered_set>
#include <vector>

#include "mcsep/graph.hpp"

namespace mcsep {

/// Deduplicated family of vertex sets, kept sorted by bit pattern so that two
/// families compare equal iff they hold the same sets.
class SeparatorFamily {
public:
    SeparatorFamily() = default;
    explicit SeparatorFamily(std::vector<VertexSet> members);

    const std::vector<VertexSet>& members() const { return members_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    bool contains(VertexSet s) const;
    /// No member is a proper subset of another.
    bool is_antichain() const;

    auto begin() const { return members_.begin(); }
    auto end() const { return members_.end(); }

    bool operator==(const SeparatorFamily&) const = default;

private:
    std::vector<VertexSet> members_;
};

// All (g, u, v) entry points below throw Error(InvalidArgument) when u == v,
// when u or v is not a vertex of g, or when t contains u or v.

bool is_separator(const Graph& g, int u, int v, VertexSet t);

/// Deletion-based test: t separates and no t - {x} does.
bool is_minimal_separator(const Graph& g, int u, int v, VertexSet t);

/// Full-component test: with S_u, S_v the components of u and v in g - t,
/// N(S_u) = t = N(S_v).
bool is_minimal_separator_full(const Graph& g, int u, int v, VertexSet t);

/// Subset-by-subset oracle. Refuses graphs with more than 24 vertices.
SeparatorFamily enumerate_minimal_separators_bruteforce(const Graph& g, int u, int v);

/// Streams the minimal u,v-separators of a graph, each exactly once.
///
/// Starts from the separator closest to u, N(D) for D the component of v in
/// g - N[u], and grows the family by moving one vertex x of a known separator
/// T to u's side: the component D' of v in g - (T + N(x)) is full for N(D'),
/// which is therefore a new minimal separator. Every minimal separator is
/// reached this way. A visited set removes repeats; delay per output is
/// polynomial in n.
///
/// If u and v lie in different components the stream holds only the empty
/// set. If u and v are adjacent it is empty.
class SeparatorStream {
public:
    SeparatorStream(const Graph& g, int u, int v);

    std::optional<VertexSet> next();
    std::size_t discovered() const { return seen_.size(); }

private:
    void offer(VertexSet t);

    Graph g_;
    int u_;
    int v_;
    std::deque<VertexSet> pending_;
    std::unordered_set<VertexSet> seen_;
};

std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, int u, int v);
SeparatorFamily minimal_separator_family(const Graph& g, int u, int v);
std::uint64_t count_minimal_separators(const Graph& g, int u, int v);

/// Inclusion-minimal sets whose removal leaves at least two components.
/// {empty set} for a disconnected graph, empty for a complete graph.
SeparatorFamily enumerate_minimal_vertex_cuts(const Graph& g);

/// Components of u and v after removing t; throws like is_separator.
struct SeparatorSides {
    VertexSet u_side;
    VertexSet v_side;
};
SeparatorSides separator_sides(const Graph& g, int u, int v, VertexSet t);

}  // namespace mcsep
