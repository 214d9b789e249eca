#include "mcsep/canon.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <numeric>

#include "mcsep/error.hpp"

namespace mcsep {

namespace {

// Ordered partition stored as a colouring; cell c holds the vertices of colour
// c and cells are ordered by colour.
struct Partition {
    int cells = 0;
    std::array<std::uint8_t, kMaxVertices> color{};
};

using Certificate = std::array<std::uint64_t, kMaxVertices>;
using Perm = std::array<std::uint8_t, kMaxVertices>;

class Search {
public:
    Search(const Graph& g) : g_(g), n_(g.order()) {}

    void run(Partition root) { descend(root, 0); }

    const std::array<int, kMaxVertices>& best_order() const { return best_order_; }

private:
    void refine(Partition& p) const {
        std::array<std::array<std::uint8_t, kMaxVertices>, kMaxVertices> counts;
        std::array<int, kMaxVertices> by_key;
        for (;;) {
            std::array<std::uint64_t, kMaxVertices> mask{};
            for (int v = 0; v < n_; ++v) mask[p.color[v]] |= std::uint64_t{1} << v;
            const int k = p.cells;
            for (int v = 0; v < n_; ++v) {
                const std::uint64_t row = g_.neighbors(v).bits();
                for (int c = 0; c < k; ++c)
                    counts[v][c] = static_cast<std::uint8_t>(std::popcount(row & mask[c]));
            }
            auto less = [&](int a, int b) {
                if (p.color[a] != p.color[b]) return p.color[a] < p.color[b];
                return std::memcmp(counts[a].data(), counts[b].data(), k) < 0;
            };
            std::iota(by_key.begin(), by_key.begin() + n_, 0);
            std::sort(by_key.begin(), by_key.begin() + n_, less);
            Partition next;
            int c = 0;
            for (int i = 0; i < n_; ++i) {
                if (i > 0 && less(by_key[i - 1], by_key[i])) ++c;
                next.color[by_key[i]] = static_cast<std::uint8_t>(c);
            }
            next.cells = c + 1;
            if (next.cells == p.cells) return;
            p = next;
        }
    }

    void leaf(const Partition& p) {
        std::array<int, kMaxVertices> order{};
        for (int v = 0; v < n_; ++v) order[p.color[v]] = v;
        Certificate cert{};
        for (int i = 0; i < n_; ++i) {
            std::uint64_t row = 0;
            for (int w : g_.neighbors(order[i])) row |= std::uint64_t{1} << p.color[w];
            cert[i] = row;
        }
        if (!have_first_) {
            have_first_ = true;
            first_cert_ = best_cert_ = cert;
            first_order_ = best_order_ = order;
            first_path_ = best_path_ = path_;
            return;
        }
        if (cert == first_cert_) {
            on_automorphism(order, first_order_, first_path_);
            return;
        }
        const int cmp = std::memcmp(cert.data(), best_cert_.data(), sizeof(std::uint64_t) * n_);
        if (cmp == 0) {
            on_automorphism(order, best_order_, best_path_);
        } else if (std::lexicographical_compare(cert.begin(), cert.begin() + n_,
                                                best_cert_.begin(), best_cert_.begin() + n_)) {
            best_cert_ = cert;
            best_order_ = order;
            best_path_ = path_;
        }
    }

    // The current leaf and an earlier one have equal certificates, so mapping
    // position to position is an automorphism. If it carries the current
    // branch onto the earlier one below their common ancestor, the rest of the
    // current branch repeats work already done.
    void on_automorphism(const std::array<int, kMaxVertices>& order,
                         const std::array<int, kMaxVertices>& target,
                         const std::vector<int>& target_path) {
        Perm gamma{};
        for (int i = 0; i < n_; ++i) gamma[order[i]] = static_cast<std::uint8_t>(target[i]);
        generators_.push_back(gamma);
        std::size_t d = 0;
        while (d < path_.size() && d < target_path.size() && path_[d] == target_path[d]) ++d;
        if (d >= path_.size() || d >= target_path.size()) return;
        for (std::size_t j = 0; j < d; ++j)
            if (gamma[path_[j]] != path_[j]) return;
        if (gamma[path_[d]] != target_path[d]) return;
        abort_to_ = static_cast<int>(d);
    }

    int find(std::array<int, kMaxVertices>& parent, int x) const {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    // Orbits of the group generated by known automorphisms that fix the
    // current prefix pointwise.
    std::array<int, kMaxVertices> stabilizer_orbits() const {
        std::array<int, kMaxVertices> parent;
        std::iota(parent.begin(), parent.begin() + n_, 0);
        for (const Perm& gamma : generators_) {
            const bool fixes = std::all_of(path_.begin(), path_.end(),
                                           [&](int w) { return gamma[w] == w; });
            if (!fixes) continue;
            for (int x = 0; x < n_; ++x) {
                const int a = find(parent, x);
                const int b = find(parent, gamma[x]);
                if (a != b) parent[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int x = 0; x < n_; ++x) parent[x] = find(parent, x);
        return parent;
    }

    void descend(Partition p, int depth) {
        refine(p);
        if (p.cells == n_) {
            leaf(p);
            return;
        }
        std::array<int, kMaxVertices> size{};
        for (int v = 0; v < n_; ++v) ++size[p.color[v]];
        int target = 0;
        while (size[target] == 1) ++target;

        std::vector<int> tried;
        for (int w = 0; w < n_; ++w) {
            if (p.color[w] != target) continue;
            if (!tried.empty() && !generators_.empty()) {
                const auto orbit = stabilizer_orbits();
                const bool equivalent = std::any_of(
                    tried.begin(), tried.end(), [&](int t) { return orbit[t] == orbit[w]; });
                if (equivalent) continue;
            }
            Partition child = p;
            for (int v = 0; v < n_; ++v)
                if (child.color[v] > target || (child.color[v] == target && v != w))
                    ++child.color[v];
            ++child.cells;
            path_.push_back(w);
            descend(child, depth + 1);
            path_.pop_back();
            tried.push_back(w);
            if (abort_to_ >= 0) {
                if (abort_to_ < depth) return;
                abort_to_ = -1;
            }
        }
    }

    const Graph& g_;
    int n_;
    std::vector<int> path_;
    std::vector<Perm> generators_;
    int abort_to_ = -1;

    bool have_first_ = false;
    Certificate first_cert_{};
    Certificate best_cert_{};
    std::array<int, kMaxVertices> first_order_{};
    std::array<int, kMaxVertices> best_order_{};
    std::vector<int> first_path_;
    std::vector<int> best_path_;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
    const int n = g.order();
    if (!colors.empty() && static_cast<int>(colors.size()) != n)
        throw Error(ErrorCode::InvalidArgument, "colouring length must equal the graph order");
    CanonicalLabeling out;
    if (n == 0) return out;

    Partition root;
    if (colors.empty()) {
        root.cells = 1;
    } else {
        std::vector<int> distinct(colors.begin(), colors.end());
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            root.color[v] = static_cast<std::uint8_t>(
                std::lower_bound(distinct.begin(), distinct.end(), colors[v]) - distinct.begin());
        root.cells = static_cast<int>(distinct.size());
    }

    Search search(g);
    search.run(root);
    out.order.assign(search.best_order().begin(), search.best_order().begin() + n);
    std::vector<int> new_label(n);
    for (int i = 0; i < n; ++i) new_label[out.order[i]] = i;
    out.graph = g.relabeled(new_label);
    return out;
}

Graph canonical_form(const Graph& g) { return canonical_labeling(g).graph; }

std::uint64_t triangle_code(const Graph& g) {
    if (g.order() > 11) throw Error(ErrorCode::OutOfRange, "triangle codes cover at most 11 vertices");
    std::uint64_t code = 0;
    for (int j = 1; j < g.order(); ++j)
        for (int i = 0; i < j; ++i) code = (code << 1) | (g.has_edge(i, j) ? 1U : 0U);
    return code;
}

Graph from_triangle_code(int n, std::uint64_t code) {
    if (n < 0 || n > 11) throw Error(ErrorCode::OutOfRange, "triangle codes cover at most 11 vertices");
    Graph g(n);
    int bit = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if ((code >> --bit) & 1U) g.add_edge(i, j);
    return g;
}

}  // namespace mcsep
