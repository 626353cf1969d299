#ifndef TURANX_GRAPH_HPP
#define TURANX_GRAPH_HPP

#include <array>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>

namespace turanx {

/// Small simple undirected graph on at most 64 vertices, one 64-bit
/// adjacency mask per vertex. Immutable value type: every mutator returns
/// a new graph, so graphs can be shared freely across threads.
class Graph {
public:
    static constexpr int kMaxOrder = 64;

    Graph() = default;

    explicit Graph(int order) : n_(check_order(order)) { adj_.fill(0); }

    Graph(int order, std::initializer_list<std::pair<int, int>> edges) : Graph(order) {
        for (auto [u, v] : edges) set_edge(u, v);
    }

    static Graph from_rows(int order, const std::array<std::uint64_t, kMaxOrder>& rows) {
        Graph g(order);
        g.adj_ = rows;
        return g;
    }

    int order() const { return n_; }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return (adj_[static_cast<std::size_t>(u)] >> v) & 1u;
    }

    /// Neighborhood of v as a bit mask over vertex indices.
    std::uint64_t neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return std::popcount(neighbors(v)); }

    int edge_count() const {
        int total = 0;
        for (int v = 0; v < n_; ++v) total += std::popcount(adj_[static_cast<std::size_t>(v)]);
        return total / 2;
    }

    std::uint64_t vertex_mask() const {
        return n_ == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n_) - 1);
    }

    Graph add_edge(int u, int v) const {
        Graph g = *this;
        g.set_edge(u, v);
        return g;
    }

    Graph remove_edge(int u, int v) const {
        check_distinct(u, v);
        Graph g = *this;
        g.adj_[static_cast<std::size_t>(u)] &= ~(std::uint64_t{1} << v);
        g.adj_[static_cast<std::size_t>(v)] &= ~(std::uint64_t{1} << u);
        return g;
    }

    /// Induced subgraph on V minus {v}; vertices above v shift down by one.
    Graph delete_vertex(int v) const {
        check_vertex(v);
        Graph g(n_ - 1);
        for (int u = 0; u < n_; ++u) {
            if (u == v) continue;
            std::uint64_t row = adj_[static_cast<std::size_t>(u)];
            std::uint64_t low = row & ((std::uint64_t{1} << v) - 1);
            std::uint64_t high = (v == 63) ? 0 : (row >> (v + 1)) << v;
            int target = u < v ? u : u - 1;
            g.adj_[static_cast<std::size_t>(target)] = low | high;
        }
        return g;
    }

    /// Induced subgraph on the vertices of `mask`, reindexed in ascending order.
    Graph induced(std::uint64_t mask) const {
        mask &= vertex_mask();
        Graph g(std::popcount(mask));
        int iu = 0;
        for (std::uint64_t mu = mask; mu; mu &= mu - 1, ++iu) {
            int u = std::countr_zero(mu);
            int iv = 0;
            for (std::uint64_t mv = mask; mv; mv &= mv - 1, ++iv) {
                int v = std::countr_zero(mv);
                if (u != v && has_edge(u, v)) g.adj_[static_cast<std::size_t>(iu)] |= std::uint64_t{1} << iv;
            }
        }
        return g;
    }

    bool operator==(const Graph& o) const {
        if (n_ != o.n_) return false;
        for (int v = 0; v < n_; ++v)
            if (adj_[static_cast<std::size_t>(v)] != o.adj_[static_cast<std::size_t>(v)]) return false;
        return true;
    }
    bool operator!=(const Graph& o) const { return !(*this == o); }

    /// Checks the representation invariants (symmetry, clear diagonal, no
    /// bits at or above order). Intended for tests and debug assertions.
    bool valid() const {
        for (int u = 0; u < n_; ++u) {
            std::uint64_t row = adj_[static_cast<std::size_t>(u)];
            if (row & ~vertex_mask()) return false;
            if ((row >> u) & 1u) return false;
            for (std::uint64_t m = row; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (!((adj_[static_cast<std::size_t>(v)] >> u) & 1u)) return false;
            }
        }
        for (int u = n_; u < kMaxOrder; ++u)
            if (adj_[static_cast<std::size_t>(u)]) return false;
        return true;
    }

private:
    static int check_order(int order) {
        if (order < 0 || order > kMaxOrder)
            throw std::invalid_argument("graph order must be in [0, 64], got " + std::to_string(order));
        return order;
    }
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::out_of_range("vertex index " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }
    void check_distinct(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("self-loops are not representable");
    }
    void set_edge(int u, int v) {
        check_distinct(u, v);
        adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }

    int n_ = 0;
    std::array<std::uint64_t, kMaxOrder> adj_{};
};

} // namespace turanx

#endif
