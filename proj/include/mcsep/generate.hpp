#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "mcsep/graph.hpp"

namespace mcsep {

/// Largest order the generator accepts.
inline constexpr int kMaxGenerateOrder = 11;

/// Canonical augmentation step. `parent` must be a canonical form (as returned
/// by canonical_form) on n-1 vertices. Calls `emit` with the canonical form of
/// every graph on n vertices whose canonical parent is `parent`, each class
/// once, in a deterministic order.
///
/// A child is parent + vertex n-1 joined to some subset S. Its canonical
/// parent is the child minus the maximum-degree vertex with the largest
/// canonical position; a child is kept iff deleting that vertex gives back
/// `parent`. Children of one parent are deduplicated by canonical code.
void augment(const Graph& parent, const std::function<void(const Graph&)>& emit);

/// Triangle codes (see triangle_code) of the canonical forms of all graphs on
/// n vertices, one per isomorphism class, in generation order. 1 <= n <= 11.
std::vector<std::uint64_t> generate_graph_codes(int n);

/// Streams one canonical representative per isomorphism class on n vertices.
void for_each_graph(int n, const std::function<void(const Graph&)>& emit);

/// Materialised form of for_each_graph. Each Graph is 520 bytes, so keep n small.
std::vector<Graph> generate_graphs(int n);

/// Every labelled graph on n <= 7 vertices, deduplicated by canonical form.
/// Sorted by triangle code of the canonical form.
std::vector<Graph> generate_graphs_exhaustive(int n);

}  // namespace mcsep
