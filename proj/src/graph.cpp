#include "mcsep/graph.hpp"

#include "mcsep/error.hpp"

namespace mcsep {

std::string VertexSet::to_string() const {
    std::string out;
    for (int v : *this) {
        if (!out.empty()) out += ' ';
        out += std::to_string(v);
    }
    return out;
}

Graph::Graph(int n) : n_(n) {
    if (n < 0 || n > kMaxVertices)
        throw Error(ErrorCode::OutOfRange, "graph order must be in 0..64, got " + std::to_string(n));
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    Graph g(n);
    for (auto [a, b] : edges) g.add_edge(a, b);
    return g;
}

int Graph::edge_count() const {
    int twice = 0;
    for (int v = 0; v < n_; ++v) twice += adj_[v].size();
    return twice / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < n_; ++a)
        for (int b : adj_[a])
            if (a < b) out.emplace_back(a, b);
    return out;
}

void Graph::add_edge(int a, int b) {
    if (a < 0 || b < 0 || a >= n_ || b >= n_)
        throw Error(ErrorCode::OutOfRange, "edge endpoint outside the vertex range");
    if (a == b) throw Error(ErrorCode::InvalidArgument, "self-loops are not allowed");
    adj_[a] = adj_[a].with(b);
    adj_[b] = adj_[b].with(a);
}

void Graph::remove_edge(int a, int b) {
    adj_[a] = adj_[a].without(b);
    adj_[b] = adj_[b].without(a);
}

Graph Graph::relabeled(const std::vector<int>& new_label) const {
    Graph out(n_);
    for (int a = 0; a < n_; ++a) {
        VertexSet row;
        for (int b : adj_[a]) row = row.with(new_label[b]);
        out.adj_[new_label[a]] = row;
    }
    return out;
}

Graph Graph::without_vertex(int v) const {
    Graph out(n_ - 1);
    const std::uint64_t low = (std::uint64_t{1} << v) - 1;
    for (int a = 0, i = 0; a < n_; ++a) {
        if (a == v) continue;
        const std::uint64_t bits = adj_[a].bits();
        out.adj_[i++] = VertexSet((bits & low) | ((bits >> 1) & ~low));
    }
    return out;
}

bool Graph::operator==(const Graph& other) const {
    if (n_ != other.n_) return false;
    for (int v = 0; v < n_; ++v)
        if (adj_[v] != other.adj_[v]) return false;
    return true;
}

VertexSet outer_neighborhood(const Graph& g, VertexSet x) {
    VertexSet out;
    for (int v : x) out |= g.neighbors(v);
    return out - x;
}

VertexSet component_of(const Graph& g, int start, VertexSet removed) {
    if (removed.contains(start))
        throw Error(ErrorCode::InvalidArgument,
                    "component start vertex " + std::to_string(start) + " lies in the removed set");
    const VertexSet allowed = g.vertices() - removed;
    VertexSet seen = VertexSet::single(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        for (int v : frontier) next |= g.neighbors(v);
        next = (next & allowed) - seen;
        seen |= next;
        frontier = next;
    }
    return seen;
}

std::vector<VertexSet> components(const Graph& g, VertexSet removed) {
    std::vector<VertexSet> out;
    VertexSet rest = g.vertices() - removed;
    while (!rest.empty()) {
        const VertexSet c = component_of(g, rest.first(), removed);
        out.push_back(c);
        rest -= c;
    }
    return out;
}

bool is_connected(const Graph& g) {
    return g.order() == 0 || component_of(g, 0, {}) == g.vertices();
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out += static_cast<char>(n + 63);
    } else {
        out += '~';
        out += static_cast<char>(((n >> 12) & 63) + 63);
        out += static_cast<char>(((n >> 6) & 63) + 63);
        out += static_cast<char>((n & 63) + 63);
    }
    int acc = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out += static_cast<char>(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out += static_cast<char>((acc << (6 - filled)) + 63);
    return out;
}

Graph from_graph6(std::string_view text) {
    if (text.ends_with('\n')) text.remove_suffix(1);
    if (text.ends_with('\r')) text.remove_suffix(1);
    if (text.starts_with(">>graph6<<")) text.remove_prefix(10);
    if (text.empty()) throw Error(ErrorCode::Parse, "graph6: empty input");
    for (std::size_t i = 0; i < text.size(); ++i) {
        const auto c = static_cast<unsigned char>(text[i]);
        if (c < 63 || c > 126)
            throw Error(ErrorCode::Parse, "graph6: byte " + std::to_string(c) +
                                              " at offset " + std::to_string(i) +
                                              " is outside the printable range 63..126");
    }
    std::size_t pos = 0;
    int n = 0;
    if (text[0] != '~') {
        n = text[0] - 63;
        pos = 1;
    } else {
        if (text.size() < 4 || text[1] == '~')
            throw Error(ErrorCode::Parse, "graph6: malformed length header");
        n = ((text[1] - 63) << 12) | ((text[2] - 63) << 6) | (text[3] - 63);
        if (n < 63) throw Error(ErrorCode::Parse, "graph6: non-canonical long length header");
        pos = 4;
    }
    if (n > kMaxVertices)
        throw Error(ErrorCode::OutOfRange, "graph6: " + std::to_string(n) + " vertices exceeds the 64-vertex cap");
    const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    if (text.size() - pos != bytes)
        throw Error(ErrorCode::Parse, "graph6: expected " + std::to_string(bytes) +
                                          " body bytes for n=" + std::to_string(n) + ", got " +
                                          std::to_string(text.size() - pos));
    Graph g(n);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = text[pos + k / 6] - 63;
            if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (bits % 6 != 0) {
        const int last = text[pos + bytes - 1] - 63;
        const int pad = static_cast<int>(6 - bits % 6);
        if ((last & ((1 << pad) - 1)) != 0)
            throw Error(ErrorCode::Parse, "graph6: nonzero padding bits");
    }
    return g;
}

}  // namespace mcsep
