#ifndef TURANX_PATTERNS_HPP
#define TURANX_PATTERNS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "turanx/graph.hpp"

namespace turanx {

/// A forbidden configuration: `multiplicity` pairwise vertex-disjoint copies
/// of `base`, as not-necessarily-induced subgraphs.
struct ForbiddenPattern {
    static constexpr int kMaxBaseOrder = 16;

    Graph base;
    int multiplicity;
    std::string label; // CLI spelling, e.g. "2C5"; synthesized if constructed directly

    ForbiddenPattern() : ForbiddenPattern(Graph(1), 1) {}
    ForbiddenPattern(Graph base_graph, int k);
};

/// Injective vertex map from a pattern base into a host; edges of the base
/// map to host edges.
struct Embedding {
    std::vector<int> map; // base vertex i -> host vertex map[i]

    std::uint64_t image_mask() const {
        std::uint64_t m = 0;
        for (int v : map) m |= std::uint64_t{1} << v;
        return m;
    }
};

/// Witness embedding of f into host, or nullopt. The witness is the one
/// whose image mask is smallest as an integer, with the lexicographically
/// least vertex map inside that image.
std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& f);

/// k pairwise vertex-disjoint embeddings if they exist. The returned list is
/// the lexicographically least sequence of image masks (masks compared as
/// integers, so copies come out sorted by lowest used vertex).
std::optional<std::vector<Embedding>> find_disjoint_copies(const Graph& host,
                                                           const ForbiddenPattern& pattern);

/// True iff host contains no `multiplicity` disjoint copies of the base.
bool is_free(const Graph& host, const ForbiddenPattern& pattern);

/// Fast paths for cycle/path workloads; agree with contains_subgraph on
/// cycle(len) / path(len).
bool contains_cycle(const Graph& host, int len);
bool contains_path(const Graph& host, int len);

/// Pattern micro-grammar: optional decimal multiplicity, then "K<d>", "C<d>",
/// "P<d>" or "g6:<encoding>" ("2C5", "3K4", "2g6:Dhc"). A '*' between
/// multiplicity and base is tolerated ("2*g6:Dhc").
ForbiddenPattern parse_pattern(std::string_view text);

} // namespace turanx

#endif
