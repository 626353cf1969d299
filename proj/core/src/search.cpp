#include "turanx/search.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <mutex>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace turanx {

namespace {

using Mask = std::uint64_t;
using Code = std::uint64_t;

constexpr int kHardCap = 10; // ~12e6 classes at n = 10; beyond that we refuse

int resolve_threads(const SearchOptions& options) {
    if (options.threads > 0) return options.threads;
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

int resolve_cap(const SearchOptions& options) {
    if (options.max_n < 1 || options.max_n > kHardCap)
        throw std::invalid_argument("max_n must be in [1, 10]");
    return options.max_n;
}

// Order-n graphs pack their upper triangle into one 64-bit code:
// bit j(j-1)/2 + i holds edge {i, j}, i < j. Valid through n = 11.
Graph decode_code(Code code, int n) {
    std::array<Mask, Graph::kMaxOrder> rows{};
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if ((code >> (j * (j - 1) / 2 + i)) & 1u) {
                rows[static_cast<std::size_t>(i)] |= Mask{1} << j;
                rows[static_cast<std::size_t>(j)] |= Mask{1} << i;
            }
        }
    }
    return Graph::from_rows(n, rows);
}

Code canonical_code(const Graph& g) {
    auto pos = canonical_labeling(g);
    Code code = 0;
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (Mask m = g.neighbors(u) & ~((Mask{2} << u) - 1); m; m &= m - 1) {
            int v = std::countr_zero(m);
            int i = std::min(pos[u], pos[v]);
            int j = std::max(pos[u], pos[v]);
            code |= Code{1} << (j * (j - 1) / 2 + i);
        }
    }
    return code;
}

CanonicalForm form_from_code(Code code, int n) {
    CanonicalForm form;
    form.bytes.push_back(static_cast<char>(n));
    int acc = 0, nbits = 0;
    for (int t = 0; t < n * (n - 1) / 2; ++t) {
        acc = (acc << 1) | static_cast<int>((code >> t) & 1u);
        if (++nbits == 8) {
            form.bytes.push_back(static_cast<char>(acc));
            acc = 0;
            nbits = 0;
        }
    }
    if (nbits > 0) form.bytes.push_back(static_cast<char>(acc << (8 - nbits)));
    return form;
}

using ChildFilter = std::function<bool(const Graph&)>;

// All isomorphism classes of order `child_order` whose last-vertex-deleted
// parents lie in `parents`, restricted to graphs passing `filter`. Parallel
// over parents; the merged result is sorted, so it is schedule-independent.
std::vector<Code> augment_level(const std::vector<Code>& parents, int child_order,
                                const ChildFilter* filter, int threads) {
    const int m = child_order - 1;
    if (m == 0) {
        Graph single(1);
        if (filter && !(*filter)(single)) return {};
        return {0};
    }

    std::atomic<std::size_t> next{0};
    std::mutex merge_mu;
    std::vector<Code> merged;
    auto worker = [&]() {
        std::unordered_set<Code> local;
        while (true) {
            std::size_t idx = next.fetch_add(1);
            if (idx >= parents.size()) break;
            Graph parent = decode_code(parents[idx], m);
            std::array<Mask, Graph::kMaxOrder> rows{};
            for (int v = 0; v < m; ++v) rows[static_cast<std::size_t>(v)] = parent.neighbors(v);
            const Mask top = Mask{1} << m;
            for (Mask nb = 0; nb < top; ++nb) {
                std::array<Mask, Graph::kMaxOrder> child_rows = rows;
                child_rows[static_cast<std::size_t>(m)] = nb;
                for (Mask t = nb; t; t &= t - 1)
                    child_rows[static_cast<std::size_t>(std::countr_zero(t))] |= top;
                Graph child = Graph::from_rows(child_order, child_rows);
                if (filter && !(*filter)(child)) continue;
                local.insert(canonical_code(child));
            }
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        merged.insert(merged.end(), local.begin(), local.end());
    };

    std::vector<std::thread> pool;
    int nthreads = std::max(1, threads);
    for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    std::sort(merged.begin(), merged.end());
    merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
    return merged;
}

// Process-wide cache of unfiltered levels: levels[m] holds one canonical code
// per isomorphism class of order m. Immutable once built.
class LevelCache {
public:
    std::vector<Code> level(int n, int threads) {
        std::lock_guard<std::mutex> lock(mu_);
        if (levels_.empty()) levels_.push_back({0}); // the order-0 graph
        while (static_cast<int>(levels_.size()) <= n)
            levels_.push_back(augment_level(levels_.back(), static_cast<int>(levels_.size()), nullptr, threads));
        return levels_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mu_;
    std::vector<std::vector<Code>> levels_;
};

LevelCache& cache() {
    static LevelCache instance;
    return instance;
}

// Pattern-free classes of order n. Uses pruned level-by-level augmentation
// when the pattern already fits below order n - 1 (children of non-free
// parents are never free, so whole subtrees drop); otherwise filters the
// shared full-level cache, which repeated desk-scale solves share.
std::vector<Code> free_classes(int n, const ForbiddenPattern& pattern, int threads) {
    long long footprint = static_cast<long long>(pattern.multiplicity) * pattern.base.order();
    ChildFilter freeness = [&pattern](const Graph& g) { return is_free(g, pattern); };

    if (footprint <= n - 2) {
        int start = static_cast<int>(std::min<long long>(footprint - 1, n));
        std::vector<Code> level = cache().level(std::max(start, 0), threads);
        for (int m = start + 1; m <= n; ++m) level = augment_level(level, m, &freeness, threads);
        return level;
    }

    std::vector<Code> full = cache().level(n, threads);
    std::vector<Code> kept;
    kept.reserve(full.size());
    std::atomic<std::size_t> next{0};
    std::mutex merge_mu;
    auto worker = [&]() {
        std::vector<Code> local;
        while (true) {
            std::size_t idx = next.fetch_add(1024);
            if (idx >= full.size()) break;
            std::size_t end = std::min(idx + 1024, full.size());
            for (std::size_t i = idx; i < end; ++i)
                if (is_free(decode_code(full[i], n), pattern)) local.push_back(full[i]);
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        kept.insert(kept.end(), local.begin(), local.end());
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < std::max(1, threads); ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    std::sort(kept.begin(), kept.end());
    return kept;
}

bool edge_maximal_free(const Graph& g, const ForbiddenPattern& pattern) {
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (is_free(g.add_edge(u, v), pattern)) return false;
        }
    return true;
}

SearchOutcome run_search(int n, std::optional<int> s, const std::string& objective_label,
                         const ObjectiveFn& objective, const ForbiddenPattern& pattern,
                         const SearchOptions& options, bool default_prune) {
    auto t0 = std::chrono::steady_clock::now();
    int cap = resolve_cap(options);
    if (n < 1 || n > cap)
        throw std::invalid_argument("exhaustive mode handles 1 <= n <= " + std::to_string(cap) +
                                    "; refusing n = " + std::to_string(n));
    int threads = resolve_threads(options);
    bool prune = options.edge_maximal_prune.value_or(default_prune);

    // Freeness is edge-monotone, so if the edgeless graph already contains
    // the pattern (only possible for edgeless bases) the instance is vacuous.
    if (!is_free(Graph(n), pattern))
        throw std::invalid_argument("no pattern-free graph on " + std::to_string(n) +
                                    " vertices exists for pattern " + pattern.label);

    std::vector<Code> candidates = free_classes(n, pattern, threads);

    // Evaluate candidates in parallel; the reduction below keeps the maximum
    // and every maximizer, which is associative, so the outcome does not
    // depend on the schedule.
    struct Partial {
        bool any = false;
        Count best = 0;
        std::vector<Code> arg;
    };
    std::atomic<std::size_t> next{0};
    std::mutex merge_mu;
    Partial global;
    auto worker = [&]() {
        Partial local;
        while (true) {
            std::size_t idx = next.fetch_add(256);
            if (idx >= candidates.size()) break;
            std::size_t end = std::min(idx + 256, candidates.size());
            for (std::size_t i = idx; i < end; ++i) {
                Graph g = decode_code(candidates[i], n);
                if (prune && !edge_maximal_free(g, pattern)) continue;
                Count value = objective(g);
                if (!local.any || value > local.best) {
                    local.any = true;
                    local.best = value;
                    local.arg.assign(1, candidates[i]);
                } else if (value == local.best) {
                    local.arg.push_back(candidates[i]);
                }
            }
        }
        std::lock_guard<std::mutex> lock(merge_mu);
        if (!local.any) return;
        if (!global.any || local.best > global.best) {
            global = std::move(local);
        } else if (local.best == global.best) {
            global.arg.insert(global.arg.end(), local.arg.begin(), local.arg.end());
        }
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    if (!global.any) throw std::logic_error("candidate evaluation lost every pattern-free class");

    std::vector<Code> extremal_codes = std::move(global.arg);
    std::sort(extremal_codes.begin(), extremal_codes.end());
    extremal_codes.erase(std::unique(extremal_codes.begin(), extremal_codes.end()), extremal_codes.end());

    if (prune) {
        // Re-expansion: every maximizer is a spanning subgraph of an
        // edge-maximal maximizer reachable by deletions that keep the
        // objective at the optimum (freeness is automatic downward).
        std::unordered_set<Code> seen(extremal_codes.begin(), extremal_codes.end());
        std::vector<Code> frontier = extremal_codes;
        while (!frontier.empty()) {
            std::vector<Code> next_frontier;
            for (Code c : frontier) {
                Graph g = decode_code(c, n);
                for (int u = 0; u < n; ++u)
                    for (Mask m = g.neighbors(u) & ~((Mask{2} << u) - 1); m; m &= m - 1) {
                        int v = std::countr_zero(m);
                        Graph h = g.remove_edge(u, v);
                        if (objective(h) != global.best) continue;
                        Code hc = canonical_code(h);
                        if (seen.insert(hc).second) next_frontier.push_back(hc);
                    }
            }
            frontier = std::move(next_frontier);
        }
        extremal_codes.assign(seen.begin(), seen.end());
        std::sort(extremal_codes.begin(), extremal_codes.end());
    }

    SearchOutcome outcome;
    outcome.n = n;
    outcome.s = s;
    outcome.objective_label = objective_label;
    outcome.pattern = pattern;
    outcome.optimum = global.best;
    outcome.graphs_examined = candidates.size();
    for (Code c : extremal_codes) outcome.extremal.push_back(form_from_code(c, n));
    std::sort(outcome.extremal.begin(), outcome.extremal.end());
    outcome.unique = outcome.extremal.size() == 1;

    // Independent post-check of the soundness invariant.
    for (const auto& form : outcome.extremal) {
        Graph g = form.to_graph();
        if (!is_free(g, pattern) || objective(g) != outcome.optimum)
            throw std::logic_error("extremal representative failed re-validation");
    }

    outcome.elapsed =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0);
    return outcome;
}

} // namespace

void enumerate_graphs(int n, const std::function<void(const Graph&)>& visit, const SearchOptions& options) {
    int cap = resolve_cap(options);
    if (n < 0 || n > cap)
        throw std::invalid_argument("exhaustive enumeration handles 0 <= n <= " + std::to_string(cap) +
                                    "; refusing n = " + std::to_string(n));
    for (Code c : cache().level(n, resolve_threads(options))) visit(decode_code(c, n));
}

SearchOutcome solve(const SearchProblem& problem, const SearchOptions& options) {
    if (problem.s < 1) throw std::invalid_argument("solve: s must be >= 1");
    int s = problem.s;
    ObjectiveFn objective = [s](const Graph& g) { return count_cliques(g, s); };
    return run_search(problem.n, s, "K" + std::to_string(s), objective, problem.pattern, options,
                      /*default_prune=*/true);
}

SearchOutcome solve_functional(int n, const std::string& objective_label, const ObjectiveFn& objective,
                               const ForbiddenPattern& pattern, const SearchOptions& options) {
    return run_search(n, std::nullopt, objective_label, objective, pattern, options,
                      /*default_prune=*/false);
}

ConstructionVerdict verify_against_construction(const SearchOutcome& outcome, const Graph& expected) {
    if (!outcome.s) throw std::invalid_argument("outcome has no clique objective; pass one explicitly");
    int s = *outcome.s;
    return verify_against_construction(outcome, expected,
                                       [s](const Graph& g) { return count_cliques(g, s); });
}

ConstructionVerdict verify_against_construction(const SearchOutcome& outcome, const Graph& expected,
                                                const ObjectiveFn& objective) {
    ConstructionVerdict verdict;
    verdict.pattern_free = is_free(expected, outcome.pattern);
    verdict.value = objective(expected);
    verdict.attains = verdict.pattern_free && verdict.value == outcome.optimum;
    if (verdict.attains) {
        verdict.unique_extremal = outcome.unique && canonical_form(expected) == outcome.extremal.front();
        verdict.gap = 0;
    } else {
        verdict.unique_extremal = false;
        verdict.gap = outcome.optimum - verdict.value;
    }
    return verdict;
}

} // namespace turanx
