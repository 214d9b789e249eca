#pragma once

#include <array>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mcsep/vertex_set.hpp"

namespace mcsep {

/// Undirected simple graph on at most 64 vertices, stored as one adjacency
/// word per vertex. Vertices are the integers 0..order()-1.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int order() const { return n_; }
    VertexSet vertices() const { return VertexSet::prefix(n_); }
    VertexSet neighbors(int v) const { return adj_[v]; }
    bool has_edge(int a, int b) const { return adj_[a].contains(b); }
    int degree(int v) const { return adj_[v].size(); }
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    void add_edge(int a, int b);
    void remove_edge(int a, int b);

    /// Graph with vertex i renamed to new_label[i]; new_label must be a permutation.
    Graph relabeled(const std::vector<int>& new_label) const;
    /// Subgraph induced on all vertices except `v`, remaining vertices keep their order.
    Graph without_vertex(int v) const;

    bool operator==(const Graph& other) const;

private:
    int n_ = 0;
    std::array<VertexSet, kMaxVertices> adj_{};
};

/// Vertices outside x with a neighbour in x.
VertexSet outer_neighborhood(const Graph& g, VertexSet x);

/// Vertex set of the component of `start` in g minus `removed`.
/// Throws Error(InvalidArgument) if start is in removed.
VertexSet component_of(const Graph& g, int start, VertexSet removed);

/// Components of g minus `removed`, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g, VertexSet removed = {});

bool is_connected(const Graph& g);

/// Standard graph6 encoding without the trailing newline.
std::string to_graph6(const Graph& g);
/// Decodes one graph6 line; a single trailing "\n" or "\r\n" is accepted.
Graph from_graph6(std::string_view text);

}  // namespace mcsep
