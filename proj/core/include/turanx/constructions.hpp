#ifndef TURANX_CONSTRUCTIONS_HPP
#define TURANX_CONSTRUCTIONS_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "turanx/arith.hpp"
#include "turanx/graph.hpp"

namespace turanx {

/// Balanced complete r-partite graph parameters. Vertex v belongs to part
/// v mod r, so part sizes differ by at most one and the labeling is fixed.
struct TuranParams {
    std::int64_t n;
    std::int64_t r;
};

/// How far a closed-form value can be trusted. Values qualified by a
/// threshold must never be printed as unconditional.
enum class Validity {
    exact_for_all_n,       // the formula is the optimum for every n
    exact_above_threshold, // exact once n reaches the threshold (possibly unstated)
    lower_bound_only,      // a construction value with no matching upper bound
};

/// A closed-form value together with its validity condition. `value` is
/// exact integer arithmetic; it is nonnegative wherever the validity
/// condition holds (far below a threshold the raw formula may go negative).
struct FormulaValue {
    __int128 value = 0;
    Validity validity = Validity::exact_for_all_n;
    std::optional<Count> threshold; // numeric threshold when known
    std::string note;               // human-readable validity condition

    /// True iff the formula is known to be exact at this instance size.
    bool covers(std::int64_t n) const {
        switch (validity) {
            case Validity::exact_for_all_n: return true;
            case Validity::exact_above_threshold:
                return threshold && n >= 0 && static_cast<Count>(n) >= *threshold;
            case Validity::lower_bound_only: return false;
        }
        return false;
    }

    std::string value_string() const {
        if (value < 0) return "-" + to_decimal(static_cast<Count>(-value));
        return to_decimal(static_cast<Count>(value));
    }
};

Graph turan_graph(const TuranParams& p);

/// Join: disjoint union plus all edges between the two vertex sets; vertices
/// of h are shifted above those of g.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

Graph complete(int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int n);

/// K_s(T_r(n)): the elementary symmetric sum of degree s over the r part
/// sizes. Exact for all n (no graph is built, so n may exceed 64).
FormulaValue turan_clique_count(std::int64_t n, std::int64_t r, std::int64_t s);

/// floor((n-1)^2/4): the triangle optimum among hosts with no two disjoint
/// 5-cycles, exact for sufficiently large n (threshold unstated); at small n
/// it is only the construction's value. Graph form: K_1 + T_2(n-1).
FormulaValue thm_2c5_value(std::int64_t n);
Graph thm_2c5_graph(int n);

/// K_r(K_k + T_{r-1}(n-k)) via the summation sum_i C(k,i) K_{r-i}(T_{r-1}(n-k)),
/// the K_r optimum among hosts without k+1 disjoint K_r for large n
/// (threshold unstated). Graph form: K_k + T_{r-1}(n-k).
FormulaValue thm_kkr_value(std::int64_t n, std::int64_t r, std::int64_t k);
Graph thm_kkr_graph(int n, int r, int k);

/// max{C(2k+1,2), k(n-k)+C(k,2)}: the edge optimum among hosts with no k+1
/// disjoint edges; exact for every n >= 2k+1 (below that every graph is
/// matching-free and the optimum is C(n,2)).
FormulaValue erdos_gallai_value(std::int64_t n, std::int64_t k);

/// C(k*floor(l/2)-1, 2) + (k*floor(l/2)-1)(n - k*floor(l/2) + 1) + lambda,
/// lambda = 1 iff l is odd: the edge optimum among hosts with no k disjoint
/// paths on l vertices, exact for n >= 2l + 2kl(ceil(l/2)+1)C(l, floor(l/2)).
FormulaValue bushaw_kettle_value(std::int64_t n, std::int64_t k, std::int64_t l);

/// Candidate order thresholds above which max e(G)+K_3(G) over C_5-free
/// hosts is floor(n^2/4) with the balanced bipartite graph as unique
/// maximizer. The two published constants disagree; neither is asserted.
Count lemma8_threshold_statement();  // 2 * C(68,3)
Count lemma8_threshold_proof_text(); // 2 * C(68,2)

/// Construction grammar: "turan:n,r", "join:A,B", "thm2c5:n", "thmkkr:n,r,k",
/// "K:n", "C:n", "P:n". join splits at the first comma where both sides
/// parse.
Graph parse_construction(std::string_view text);

} // namespace turanx

#endif
