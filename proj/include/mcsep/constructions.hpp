#pragma once

#include <string_view>

#include "mcsep/graph.hpp"

namespace mcsep {

/// A graph with two distinguished, distinct terminals.
struct TerminalGraph {
    Graph g;
    int u = 0;
    int v = 1;

    /// Throws Error(InvalidArgument) unless u != v and both are vertices of g.
    void validate() const;
};

/// Terminals 0 (u) and 1 (v) joined by m internally disjoint paths of length 4.
/// Path i runs u - 2+3i - 3+3i - 4+3i - v. Requires 1 <= m <= 20.
TerminalGraph seymour(int m);

/// Identifies a.u with b.u and a.v with b.v. The result numbers u as 0, v as 1,
/// then a's other vertices in increasing order, then b's. A uv edge present in
/// either input survives as a single edge.
TerminalGraph glue(const TerminalGraph& a, const TerminalGraph& b);

/// Small fixtures:
///   "path"       0-1-...-(n-1)
///   "cycle"      path plus (n-1)-0, n >= 3
///   "complete"   K_n
///   "empty"      n isolated vertices
///   "star"       centre 0 joined to 1..n-1
///   "complete-bipartite"  K_{floor(n/2), ceil(n/2)} with parts {0..a-1} and {a..n-1}
Graph named_graph(std::string_view name, int n);

}  // namespace mcsep
