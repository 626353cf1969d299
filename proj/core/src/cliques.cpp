#include "turanx/cliques.hpp"

#include <bit>
#include <stdexcept>

namespace turanx {

namespace {

using Mask = std::uint64_t;

// True iff the candidate set induces a complete subgraph; lets dense regions
// collapse to a binomial instead of being enumerated (K_64 profiles stay
// instant).
bool induces_clique(const Graph& g, Mask cand) {
    for (Mask m = cand; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (cand & ~(g.neighbors(v) | (Mask{1} << v))) return false;
    }
    return true;
}

Mask above(int v) { return v >= 63 ? 0 : ~((Mask{2} << v) - 1); }

Count count_extensions(const Graph& g, Mask cand, int depth) {
    if (depth == 0) return 1;
    int avail = std::popcount(cand);
    if (avail < depth) return 0;
    if (induces_clique(g, cand)) return binomial(avail, depth);
    Count total = 0;
    for (Mask m = cand; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (std::popcount(m) < depth) break;
        total += count_extensions(g, cand & g.neighbors(v) & above(v), depth - 1);
    }
    return total;
}

bool clique_exists(const Graph& g, Mask cand, int depth) {
    if (depth == 0) return true;
    int avail = std::popcount(cand);
    if (avail < depth) return false;
    if (induces_clique(g, cand)) return true;
    for (Mask m = cand; m; m &= m - 1) {
        int v = std::countr_zero(m);
        if (std::popcount(m) < depth) return false;
        if (clique_exists(g, cand & g.neighbors(v) & above(v), depth - 1)) return true;
    }
    return false;
}

} // namespace

Count count_cliques(const Graph& g, int s) {
    if (s < 0 || s > Graph::kMaxOrder)
        throw std::invalid_argument("clique order s must be in [0, 64]");
    if (s > g.order()) return 0;
    if (s == 0) return 1;
    return count_extensions(g, g.vertex_mask(), s);
}

CliqueProfile clique_profile(const Graph& g) {
    CliqueProfile profile;
    profile.counts.resize(static_cast<std::size_t>(g.order()) + 1, 0);
    profile.counts[0] = 1;
    for (int s = 1; s <= g.order(); ++s) {
        Count c = count_cliques(g, s);
        profile.counts[static_cast<std::size_t>(s)] = c;
        if (c == 0) break; // no larger complete subgraph exists either
    }
    return profile;
}

Count triangles_through_vertex(const Graph& g, int v) {
    Mask nb = g.neighbors(v);
    Count twice_edges = 0;
    for (Mask m = nb; m; m &= m - 1)
        twice_edges += static_cast<Count>(std::popcount(g.neighbors(std::countr_zero(m)) & nb));
    return twice_edges / 2;
}

int max_clique_order(const Graph& g) {
    int s = 0;
    while (s < g.order() && clique_exists(g, g.vertex_mask(), s + 1)) ++s;
    return s;
}

} // namespace turanx
