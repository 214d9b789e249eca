#include "mcsep/separators.hpp"

#include <algorithm>
#include <string>

#include "mcsep/error.hpp"

namespace mcsep {

namespace {

void check_pair(const Graph& g, int u, int v) {
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order())
        throw Error(ErrorCode::OutOfRange, "terminal index outside the graph (n=" +
                                               std::to_string(g.order()) + ")");
    if (u == v) throw Error(ErrorCode::InvalidArgument, "terminals must be distinct");
}

void check_instance(const Graph& g, int u, int v, VertexSet t) {
    check_pair(g, u, v);
    if (t.contains(u) || t.contains(v))
        throw Error(ErrorCode::InvalidArgument, "separator candidate contains a terminal");
}

bool separates(const Graph& g, int u, int v, VertexSet t) {
    return !component_of(g, u, t).contains(v);
}

}  // namespace

SeparatorFamily::SeparatorFamily(std::vector<VertexSet> members) : members_(std::move(members)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SeparatorFamily::contains(VertexSet s) const {
    return std::binary_search(members_.begin(), members_.end(), s);
}

bool SeparatorFamily::is_antichain() const {
    for (std::size_t i = 0; i < members_.size(); ++i)
        for (std::size_t j = 0; j < members_.size(); ++j)
            if (i != j && members_[i].is_subset_of(members_[j])) return false;
    return true;
}

bool is_separator(const Graph& g, int u, int v, VertexSet t) {
    check_instance(g, u, v, t);
    return separates(g, u, v, t);
}

bool is_minimal_separator(const Graph& g, int u, int v, VertexSet t) {
    check_instance(g, u, v, t);
    if (!separates(g, u, v, t)) return false;
    for (int x : t)
        if (separates(g, u, v, t.without(x))) return false;
    return true;
}

SeparatorSides separator_sides(const Graph& g, int u, int v, VertexSet t) {
    check_instance(g, u, v, t);
    return {component_of(g, u, t), component_of(g, v, t)};
}

bool is_minimal_separator_full(const Graph& g, int u, int v, VertexSet t) {
    const auto [su, sv] = separator_sides(g, u, v, t);
    if (su.contains(v)) return false;
    return outer_neighborhood(g, su) == t && outer_neighborhood(g, sv) == t;
}

SeparatorFamily enumerate_minimal_separators_bruteforce(const Graph& g, int u, int v) {
    check_pair(g, u, v);
    if (g.order() > 24)
        throw Error(ErrorCode::OutOfRange, "brute-force enumeration is limited to 24 vertices");
    const std::uint64_t ground = (g.vertices() - VertexSet{u, v}).bits();
    std::vector<VertexSet> found;
    // Walk every submask of the ground set.
    std::uint64_t sub = 0;
    do {
        if (is_minimal_separator(g, u, v, VertexSet(sub))) found.push_back(VertexSet(sub));
        sub = (sub - ground) & ground;
    } while (sub != 0);
    return SeparatorFamily(std::move(found));
}

SeparatorStream::SeparatorStream(const Graph& g, int u, int v) : g_(g), u_(u), v_(v) {
    check_pair(g, u, v);
    if (g.has_edge(u, v)) return;
    const VertexSet closed_u = g.neighbors(u).with(u);
    offer(outer_neighborhood(g, component_of(g, v, closed_u)));
}

void SeparatorStream::offer(VertexSet t) {
    if (seen_.insert(t).second) pending_.push_back(t);
}

std::optional<VertexSet> SeparatorStream::next() {
    if (pending_.empty()) return std::nullopt;
    const VertexSet t = pending_.front();
    pending_.pop_front();
    for (int x : t) {
        const VertexSet blocked = t | g_.neighbors(x);
        if (blocked.contains(v_)) continue;
        offer(outer_neighborhood(g_, component_of(g_, v_, blocked)));
    }
    return t;
}

std::vector<VertexSet> enumerate_minimal_separators(const Graph& g, int u, int v) {
    std::vector<VertexSet> out;
    SeparatorStream stream(g, u, v);
    while (auto t = stream.next()) out.push_back(*t);
    return out;
}

SeparatorFamily minimal_separator_family(const Graph& g, int u, int v) {
    return SeparatorFamily(enumerate_minimal_separators(g, u, v));
}

std::uint64_t count_minimal_separators(const Graph& g, int u, int v) {
    SeparatorStream stream(g, u, v);
    while (stream.next()) {
    }
    return stream.discovered();
}

SeparatorFamily enumerate_minimal_vertex_cuts(const Graph& g) {
    std::unordered_set<VertexSet> pooled;
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v) {
            if (g.has_edge(u, v)) continue;
            SeparatorStream stream(g, u, v);
            while (auto t = stream.next()) pooled.insert(*t);
        }
    // A pair separator is a vertex cut; only the inclusion-minimal ones survive.
    std::vector<VertexSet> by_size(pooled.begin(), pooled.end());
    std::sort(by_size.begin(), by_size.end(), [](VertexSet a, VertexSet b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<VertexSet> kept;
    for (VertexSet t : by_size) {
        const bool dominated = std::any_of(kept.begin(), kept.end(),
                                           [t](VertexSet k) { return k.is_subset_of(t); });
        if (!dominated) kept.push_back(t);
    }
    return SeparatorFamily(std::move(kept));
}

}  // namespace mcsep
