#include "turanx/canonical.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>

namespace turanx {

namespace {

using Mask = std::uint64_t;

// Ordered partition of the vertex set into cells, each a bit mask.
struct Partition {
    std::array<Mask, Graph::kMaxOrder> cells{};
    int size = 0;

    bool discrete(int n) const { return size == n; }
};

// Equitable refinement: split cells by neighbor counts toward splitter cells
// until stable. Sub-cells are ordered by ascending count, which depends only
// on isomorphism invariants, so refinement commutes with relabeling.
void refine(const Graph& g, Partition& p) {
    // Splitter pushes are bounded by the initial cells plus every sub-cell
    // ever created, at most n + 2n <= 192.
    std::array<Mask, 3 * Graph::kMaxOrder> queue;
    int qhead = 0, qtail = 0;
    for (int i = 0; i < p.size; ++i) queue[qtail++] = p.cells[i];

    std::array<int, Graph::kMaxOrder> key{};
    while (qhead < qtail) {
        Mask splitter = queue[qhead++];
        for (int c = 0; c < p.size; ++c) {
            Mask cell = p.cells[c];
            if (std::popcount(cell) <= 1) continue;

            int min_key = Graph::kMaxOrder + 1, max_key = -1;
            for (Mask m = cell; m; m &= m - 1) {
                int v = std::countr_zero(m);
                int k = std::popcount(g.neighbors(v) & splitter);
                key[v] = k;
                min_key = std::min(min_key, k);
                max_key = std::max(max_key, k);
            }
            if (min_key == max_key) continue;

            // Replace cell c by its sub-cells in ascending key order.
            std::array<Mask, Graph::kMaxOrder> subs;
            int nsubs = 0;
            for (int k = min_key; k <= max_key; ++k) {
                Mask sub = 0;
                for (Mask m = cell; m; m &= m - 1) {
                    int v = std::countr_zero(m);
                    if (key[v] == k) sub |= Mask{1} << v;
                }
                if (sub) subs[nsubs++] = sub;
            }
            for (int i = p.size - 1; i > c; --i) p.cells[i + nsubs - 1] = p.cells[i];
            for (int i = 0; i < nsubs; ++i) p.cells[c + i] = subs[i];
            p.size += nsubs - 1;
            for (int i = 0; i < nsubs; ++i) queue[qtail++] = subs[i];
            c += nsubs - 1;
        }
    }
}

struct CanonSearch {
    const Graph& g;
    int n;

    std::string best;                        // packed triangle bits of best leaf
    std::array<int, Graph::kMaxOrder> best_pos{};   // vertex -> position
    std::array<int, Graph::kMaxOrder> best_vert{};  // position -> vertex
    bool have_best = false;

    std::vector<std::array<int, Graph::kMaxOrder>> autos; // discovered automorphisms
    std::array<int, Graph::kMaxOrder> path{};             // individualized vertices
    int depth = 0;

    explicit CanonSearch(const Graph& graph) : g(graph), n(graph.order()) {}

    std::string pack_leaf(const std::array<int, Graph::kMaxOrder>& vert) const {
        std::string out;
        out.reserve((static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8);
        int acc = 0, nbits = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i) {
                acc = (acc << 1) | (g.has_edge(vert[i], vert[j]) ? 1 : 0);
                if (++nbits == 8) {
                    out.push_back(static_cast<char>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        }
        if (nbits > 0) out.push_back(static_cast<char>(acc << (8 - nbits)));
        return out;
    }

    void visit_leaf(const Partition& p) {
        std::array<int, Graph::kMaxOrder> vert{};
        std::array<int, Graph::kMaxOrder> pos{};
        for (int i = 0; i < p.size; ++i) {
            int v = std::countr_zero(p.cells[i]);
            vert[i] = v;
            pos[v] = i;
        }
        std::string candidate = pack_leaf(vert);
        if (!have_best || candidate < best) {
            best = std::move(candidate);
            best_pos = pos;
            best_vert = vert;
            have_best = true;
        } else if (candidate == best) {
            // Equal leaves compose to an automorphism: v -> best_vert[pos[v]].
            std::array<int, Graph::kMaxOrder> sigma{};
            bool identity = true;
            for (int v = 0; v < n; ++v) {
                sigma[v] = best_vert[pos[v]];
                identity = identity && sigma[v] == v;
            }
            if (!identity) autos.push_back(sigma);
        }
    }

    // Union-find orbits under the discovered automorphisms that fix the
    // current individualization path pointwise.
    void current_orbits(std::array<int, Graph::kMaxOrder>& root) const {
        for (int v = 0; v < n; ++v) root[v] = v;
        auto find = [&](int v) {
            while (root[v] != v) v = root[v] = root[root[v]];
            return v;
        };
        for (const auto& sigma : autos) {
            bool usable = true;
            for (int i = 0; i < depth && usable; ++i) usable = sigma[path[i]] == path[i];
            if (!usable) continue;
            for (int v = 0; v < n; ++v) {
                int a = find(v), b = find(sigma[v]);
                if (a != b) root[std::max(a, b)] = std::min(a, b);
            }
        }
        for (int v = 0; v < n; ++v) root[v] = find(v);
    }

    void descend(Partition p) {
        refine(g, p);
        if (p.discrete(n)) {
            visit_leaf(p);
            return;
        }
        int target = 0;
        while (std::popcount(p.cells[target]) <= 1) ++target;
        Mask cell = p.cells[target];

        Mask tried = 0;
        std::array<int, Graph::kMaxOrder> orbit{};
        for (Mask m = cell; m; m &= m - 1) {
            int v = std::countr_zero(m);
            if (tried) {
                current_orbits(orbit);
                bool redundant = false;
                for (Mask t = tried; t && !redundant; t &= t - 1)
                    redundant = orbit[std::countr_zero(t)] == orbit[v];
                if (redundant) continue;
            }
            tried |= Mask{1} << v;

            Partition child = p;
            for (int i = child.size - 1; i > target; --i) child.cells[i + 1] = child.cells[i];
            child.cells[target] = Mask{1} << v;
            child.cells[target + 1] = cell & ~(Mask{1} << v);
            ++child.size;

            path[depth++] = v;
            descend(child);
            --depth;
        }
    }
};

} // namespace

CanonicalForm canonical_form(const Graph& g) {
    const int n = g.order();
    CanonicalForm form;
    form.bytes.push_back(static_cast<char>(n));
    if (n <= 1) return form;

    CanonSearch search(g);
    Partition root;
    root.cells[0] = g.vertex_mask();
    root.size = 1;
    search.descend(root);
    form.bytes += search.best;
    return form;
}

std::vector<int> canonical_labeling(const Graph& g) {
    const int n = g.order();
    if (n <= 1) return std::vector<int>(static_cast<std::size_t>(n), 0);

    CanonSearch search(g);
    Partition root;
    root.cells[0] = g.vertex_mask();
    root.size = 1;
    search.descend(root);
    return {search.best_pos.begin(), search.best_pos.begin() + n};
}

Graph CanonicalForm::to_graph() const {
    const int n = order();
    Graph g(n);
    std::size_t byte_index = 1;
    int bits_left = 0;
    int current = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current = static_cast<unsigned char>(bytes.at(byte_index++));
                bits_left = 8;
            }
            if ((current >> (bits_left - 1)) & 1) g = g.add_edge(i, j);
            --bits_left;
        }
    }
    return g;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    return canonical_form(g) == canonical_form(h);
}

} // namespace turanx
