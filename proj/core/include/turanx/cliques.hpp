#ifndef TURANX_CLIQUES_HPP
#define TURANX_CLIQUES_HPP

#include <vector>

#include "turanx/arith.hpp"
#include "turanx/graph.hpp"

namespace turanx {

/// counts[s] = number of s-vertex complete subgraphs, s = 0..order.
/// counts[0] = 1, counts[1] = order, counts[2] = edge count.
struct CliqueProfile {
    std::vector<Count> counts;
};

/// Exact number of s-subsets inducing complete subgraphs. s > order gives 0.
Count count_cliques(const Graph& g, int s);

CliqueProfile clique_profile(const Graph& g);

/// Number of triangles containing v; equals the edge count of the subgraph
/// induced on N(v).
Count triangles_through_vertex(const Graph& g, int v);

/// Largest s with count_cliques(g, s) > 0 (0 for the empty-order graph).
int max_clique_order(const Graph& g);

} // namespace turanx

#endif
