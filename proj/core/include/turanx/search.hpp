#ifndef TURANX_SEARCH_HPP
#define TURANX_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "turanx/arith.hpp"
#include "turanx/canonical.hpp"
#include "turanx/cliques.hpp"
#include "turanx/graph.hpp"
#include "turanx/patterns.hpp"

namespace turanx {

/// An exact ex(n, K_s, pattern) instance.
struct SearchProblem {
    int n;
    int s;
    ForbiddenPattern pattern;
};

struct SearchOptions {
    int threads = 0;  // 0 = hardware concurrency
    int max_n = 10;   // exhaustive-mode cap; the hard ceiling is 10
    /// Restrict objective evaluation to edge-maximal pattern-free graphs and
    /// recover the full extremal set by re-expansion afterwards. Sound only
    /// for edge-monotone objectives. Defaults: on for clique objectives, off
    /// for solve_functional.
    std::optional<bool> edge_maximal_prune;
};

/// Exact answer with every maximizer up to isomorphism.
struct SearchOutcome {
    int n = 0;
    std::optional<int> s;        // set for clique objectives
    std::string objective_label;
    ForbiddenPattern pattern;
    Count optimum = 0;
    std::vector<CanonicalForm> extremal; // sorted by bytes; nonempty
    std::uint64_t graphs_examined = 0;   // pattern-free classes of order n evaluated
    std::chrono::milliseconds elapsed{0};
    bool unique = false;                 // extremal.size() == 1
};

/// Objectives for solve_functional must be pure and isomorphism-invariant.
using ObjectiveFn = std::function<Count(const Graph&)>;

/// Stream exactly one representative per isomorphism class of order n
/// (n <= 10), in a deterministic order.
void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit,
                      const SearchOptions& options = {});

/// Maximize count_cliques(., s) over all pattern-free graphs on n vertices by
/// exhaustive isomorph-free enumeration.
SearchOutcome solve(const SearchProblem& problem, const SearchOptions& options = {});

/// As solve, maximizing a caller-supplied objective.
SearchOutcome solve_functional(int n, const std::string& objective_label, const ObjectiveFn& objective,
                               const ForbiddenPattern& pattern, const SearchOptions& options = {});

/// How a candidate extremal construction compares against a search outcome.
struct ConstructionVerdict {
    bool pattern_free = false;
    Count value = 0;        // objective of the candidate
    bool attains = false;   // value == optimum (and candidate is free)
    bool unique_extremal = false; // attains and it is the one maximizer class
    Count gap = 0;          // optimum - value when not attaining
};

/// Evaluate `expected` against the outcome using the outcome's clique
/// objective (requires outcome.s).
ConstructionVerdict verify_against_construction(const SearchOutcome& outcome, const Graph& expected);

/// Same with an explicit objective (for solve_functional outcomes).
ConstructionVerdict verify_against_construction(const SearchOutcome& outcome, const Graph& expected,
                                                const ObjectiveFn& objective);

} // namespace turanx

#endif
