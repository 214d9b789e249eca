#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "mcsep/graph.hpp"

namespace mcsep {

struct CanonicalLabeling {
    /// g relabeled so that original vertex order[i] becomes vertex i.
    Graph graph;
    /// order[i] = original vertex placed at canonical position i.
    std::vector<int> order;
};

/// Canonical labeling by colour refinement and individualisation.
///
/// The search tree is built from label-invariant choices (cells ordered by
/// refinement signature, first non-singleton cell as target). The certificate
/// of a leaf is its relabeled adjacency matrix and the smallest certificate
/// wins, so isomorphic inputs yield identical `graph`. Automorphisms found
/// between equal leaves prune equivalent subtrees.
///
/// `colors`, when given, is a vertex colouring that must be preserved; vertices
/// with smaller colour values land at smaller canonical positions.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

Graph canonical_form(const Graph& g);

/// Upper-triangle adjacency bits packed in graph6 order, for n <= 11.
std::uint64_t triangle_code(const Graph& g);
Graph from_triangle_code(int n, std::uint64_t code);

}  // namespace mcsep
