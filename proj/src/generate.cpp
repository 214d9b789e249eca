#include "mcsep/generate.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>

#include "mcsep/canon.hpp"
#include "mcsep/error.hpp"

namespace mcsep {

namespace {

void check_order(int n, int max) {
    if (n < 1 || n > max)
        throw Error(ErrorCode::OutOfRange,
                    "graph generation supports 1.." + std::to_string(max) + " vertices, got " +
                        std::to_string(n));
}

}  // namespace

void augment(const Graph& parent, const std::function<void(const Graph&)>& emit) {
    const int n = parent.order() + 1;
    check_order(n, kMaxGenerateOrder);
    const int fresh = n - 1;
    const std::uint64_t parent_code = triangle_code(parent);
    int parent_max_degree = 0;
    for (int v = 0; v < fresh; ++v) parent_max_degree = std::max(parent_max_degree, parent.degree(v));

    std::unordered_set<std::uint64_t> seen;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << fresh); ++s) {
        const VertexSet attach(s);
        const int fresh_degree = attach.size();
        // The deleted vertex must have maximum degree; old vertices gain at most one.
        if (fresh_degree < parent_max_degree) continue;
        Graph child(n);
        for (auto [a, b] : parent.edges()) child.add_edge(a, b);
        for (int w : attach) child.add_edge(w, fresh);
        int max_degree = fresh_degree;
        for (int w : attach) max_degree = std::max(max_degree, child.degree(w));
        if (fresh_degree != max_degree) continue;

        const CanonicalLabeling lab = canonical_labeling(child);
        int chosen = -1;
        for (int pos = n - 1; pos >= 0; --pos) {
            if (child.degree(lab.order[pos]) == max_degree) {
                chosen = lab.order[pos];
                break;
            }
        }
        if (chosen != fresh &&
            triangle_code(canonical_form(child.without_vertex(chosen))) != parent_code)
            continue;
        if (seen.insert(triangle_code(lab.graph)).second) emit(lab.graph);
    }
}

std::vector<std::uint64_t> generate_graph_codes(int n) {
    check_order(n, kMaxGenerateOrder);
    std::vector<std::uint64_t> level{triangle_code(Graph(1))};
    for (int order = 2; order <= n; ++order) {
        std::vector<std::uint64_t> next;
        for (std::uint64_t code : level)
            augment(from_triangle_code(order - 1, code),
                    [&next](const Graph& child) { next.push_back(triangle_code(child)); });
        level = std::move(next);
    }
    return level;
}

void for_each_graph(int n, const std::function<void(const Graph&)>& emit) {
    check_order(n, kMaxGenerateOrder);
    if (n == 1) {
        emit(Graph(1));
        return;
    }
    for (std::uint64_t code : generate_graph_codes(n - 1)) augment(from_triangle_code(n - 1, code), emit);
}

std::vector<Graph> generate_graphs(int n) {
    std::vector<Graph> out;
    for_each_graph(n, [&out](const Graph& g) { out.push_back(g); });
    return out;
}

std::vector<Graph> generate_graphs_exhaustive(int n) {
    check_order(n, 7);
    const int pairs = n * (n - 1) / 2;
    std::vector<std::uint64_t> codes;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code)
        codes.push_back(triangle_code(canonical_form(from_triangle_code(n, code))));
    std::sort(codes.begin(), codes.end());
    codes.erase(std::unique(codes.begin(), codes.end()), codes.end());
    std::vector<Graph> out;
    out.reserve(codes.size());
    for (std::uint64_t code : codes) out.push_back(from_triangle_code(n, code));
    return out;
}

}  // namespace mcsep
