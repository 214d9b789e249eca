#include "mcsep/constructions.hpp"

#include <string>

#include "mcsep/error.hpp"

namespace mcsep {

void TerminalGraph::validate() const {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v)
        throw Error(ErrorCode::InvalidArgument,
                    "terminal graph needs two distinct terminals inside the vertex range");
}

TerminalGraph seymour(int m) {
    if (m < 1 || m > 20)
        throw Error(ErrorCode::OutOfRange, "seymour: m must be in 1..20, got " + std::to_string(m));
    TerminalGraph out{Graph(3 * m + 2), 0, 1};
    for (int i = 0; i < m; ++i) {
        const int a = 2 + 3 * i;
        out.g.add_edge(0, a);
        out.g.add_edge(a, a + 1);
        out.g.add_edge(a + 1, a + 2);
        out.g.add_edge(a + 2, 1);
    }
    return out;
}

TerminalGraph glue(const TerminalGraph& a, const TerminalGraph& b) {
    a.validate();
    b.validate();
    const int total = a.g.order() + b.g.order() - 2;
    if (total > kMaxVertices)
        throw Error(ErrorCode::OutOfRange,
                    "glue: result would have " + std::to_string(total) + " vertices (cap 64)");

    int next = 2;
    auto place = [&next](const TerminalGraph& part) {
        std::vector<int> to(part.g.order());
        for (int x = 0; x < part.g.order(); ++x) {
            if (x == part.u) to[x] = 0;
            else if (x == part.v) to[x] = 1;
            else to[x] = next++;
        }
        return to;
    };
    const auto from_a = place(a);
    const auto from_b = place(b);

    TerminalGraph out{Graph(total), 0, 1};
    for (auto [x, y] : a.g.edges()) out.g.add_edge(from_a[x], from_a[y]);
    for (auto [x, y] : b.g.edges())
        if (!out.g.has_edge(from_b[x], from_b[y])) out.g.add_edge(from_b[x], from_b[y]);
    return out;
}

Graph named_graph(std::string_view name, int n) {
    if (n < 1 || n > kMaxVertices)
        throw Error(ErrorCode::OutOfRange, "named graph order must be in 1..64");
    Graph g(n);
    if (name == "path") {
        for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    } else if (name == "cycle") {
        if (n < 3) throw Error(ErrorCode::OutOfRange, "cycle needs at least 3 vertices");
        for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    } else if (name == "complete") {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    } else if (name == "empty") {
    } else if (name == "star") {
        for (int i = 1; i < n; ++i) g.add_edge(0, i);
    } else if (name == "complete-bipartite") {
        const int a = n / 2;
        for (int i = 0; i < a; ++i)
            for (int j = a; j < n; ++j) g.add_edge(i, j);
    } else {
        throw Error(ErrorCode::InvalidArgument, "unknown graph name '" + std::string(name) + "'");
    }
    return g;
}

}  // namespace mcsep
