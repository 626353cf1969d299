#include "turanx/suites.hpp"

#include <stdexcept>

#include "turanx/constructions.hpp"
#include "turanx/graph6.hpp"

namespace turanx {

namespace {

std::string dec(Count v) { return to_decimal(v); }

// Spec'd cross-check: every extremal witness must pass freeness and score
// the optimum when re-evaluated from scratch.
bool revalidate_witnesses(const SearchOutcome& outcome, const ObjectiveFn& objective) {
    for (const auto& form : outcome.extremal) {
        Graph g = form.to_graph();
        if (!is_free(g, outcome.pattern)) return false;
        if (objective(g) != outcome.optimum) return false;
    }
    return !outcome.extremal.empty();
}

ObjectiveFn clique_objective(int s) {
    return [s](const Graph& g) { return count_cliques(g, s); };
}

Count edges_plus_triangles(const Graph& g) {
    return static_cast<Count>(g.edge_count()) + count_cliques(g, 3);
}

SuiteReport finish(SuiteReport report) {
    report.pass = true;
    for (const auto& row : report.rows)
        if (!row.informational && !row.agree) report.pass = false;
    return report;
}

SuiteReport suite_zykov(const SearchOptions& options) {
    SuiteReport report{"zykov", {}, true};
    for (int n = 5; n <= 8; ++n) {
        SuiteRow row;
        row.instance = "n=" + std::to_string(n) + " r=4 s=3 pattern=K4";
        FormulaValue fv = turan_clique_count(n, 3, 3);
        SearchOutcome outcome = solve({n, 3, parse_pattern("K4")}, options);
        Graph expected = turan_graph({n, 3});
        auto verdict = verify_against_construction(outcome, expected);
        row.formula = fv.value_string();
        row.search_value = dec(outcome.optimum);
        row.construction = dec(verdict.value);
        row.extremal_unique = outcome.unique;
        row.agree = fv.covers(n) && static_cast<Count>(fv.value) == outcome.optimum &&
                    verdict.attains && verdict.unique_extremal &&
                    revalidate_witnesses(outcome, clique_objective(3));
        row.notes = verdict.unique_extremal ? "unique extremal is the balanced 3-partite graph"
                                            : "extremal differs from the balanced 3-partite graph";
        report.rows.push_back(std::move(row));
    }
    return finish(std::move(report));
}

SuiteReport suite_erdos_gallai(const SearchOptions& options) {
    SuiteReport report{"erdos-gallai", {}, true};
    for (int k = 1; k <= 2; ++k) {
        for (int n = 4; n <= 8; ++n) {
            FormulaValue fv = erdos_gallai_value(n, k);
            ForbiddenPattern pattern = parse_pattern(std::to_string(k + 1) + "K2");
            SearchOutcome outcome = solve({n, 2, pattern}, options);
            bool witnesses_ok = revalidate_witnesses(outcome, clique_objective(2));

            // Both extremal candidates, evaluated directly.
            Count construction = 0;
            if (n >= 2 * k + 1) {
                Graph clique_side = disjoint_union(complete(2 * k + 1), Graph(n - 2 * k - 1));
                if (is_free(clique_side, pattern))
                    construction = std::max(construction, static_cast<Count>(clique_side.edge_count()));
            }
            Graph hub_side = join(complete(k), Graph(n - k));
            if (is_free(hub_side, pattern))
                construction = std::max(construction, static_cast<Count>(hub_side.edge_count()));

            SuiteRow row;
            row.instance = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " pattern=" + pattern.label;
            row.formula = fv.value_string();
            row.search_value = dec(outcome.optimum);
            row.construction = dec(construction);
            row.extremal_unique = outcome.unique;
            if (fv.covers(n)) {
                row.agree = static_cast<Count>(fv.value) == outcome.optimum &&
                            construction == outcome.optimum && witnesses_ok;
                row.notes = "exact regime (n >= 2k+1)";
            } else {
                // Below n = 2k+1 every graph is free; the optimum is C(n,2).
                row.informational = true;
                row.agree = static_cast<Count>(fv.value) == outcome.optimum;
                bool pigeonhole_ok = outcome.optimum == binomial(n, 2) && witnesses_ok;
                row.notes = std::string("below validity threshold; optimum is C(n,2) by pigeonhole (") +
                            (pigeonhole_ok ? "confirmed" : "VIOLATED") + ")";
                SuiteRow enforced;
                enforced.instance = row.instance + " pigeonhole";
                enforced.search_value = row.search_value;
                enforced.construction = dec(binomial(n, 2));
                enforced.agree = pigeonhole_ok;
                enforced.extremal_unique = outcome.unique;
                enforced.notes = "every graph is free; complete graph must win";
                report.rows.push_back(std::move(enforced));
            }
            report.rows.push_back(std::move(row));
        }
    }
    return finish(std::move(report));
}

SuiteReport suite_kkr_smalln(const SearchOptions& options) {
    SuiteReport report{"kkr-smalln", {}, true};
    const std::pair<int, int> configs[] = {{3, 1}, {3, 2}, {4, 1}};
    for (auto [r, k] : configs) {
        ForbiddenPattern pattern = parse_pattern(std::to_string(k + 1) + "K" + std::to_string(r));
        for (int n = k + r - 1; n <= 9; ++n) {
            FormulaValue fv = thm_kkr_value(n, r, k);
            Graph built = thm_kkr_graph(n, r, k);
            Count direct = count_cliques(built, r);
            SearchOutcome outcome = solve({n, r, pattern}, options);
            bool witnesses_ok = revalidate_witnesses(outcome, clique_objective(r));

            SuiteRow row;
            row.instance = "n=" + std::to_string(n) + " r=" + std::to_string(r) + " k=" + std::to_string(k) +
                           " pattern=" + pattern.label;
            row.formula = fv.value_string();
            row.search_value = dec(outcome.optimum);
            row.construction = dec(direct);
            row.extremal_unique = outcome.unique;
            row.agree = static_cast<Count>(fv.value) == direct && is_free(built, pattern) &&
                        outcome.optimum >= direct && witnesses_ok;
            row.notes = outcome.optimum > direct
                            ? "optimum exceeds construction (exactness holds only above the unstated threshold)"
                            : "construction attains the optimum at this n";
            report.rows.push_back(std::move(row));

            SuiteRow info;
            info.instance = row.instance + " exactness";
            info.formula = fv.value_string();
            info.search_value = dec(outcome.optimum);
            info.informational = true;
            info.agree = static_cast<Count>(fv.value) == outcome.optimum;
            info.notes = "threshold unstated; comparison is informational at desk scale";
            report.rows.push_back(std::move(info));
        }

        SuiteRow coherence;
        coherence.instance = "r=" + std::to_string(r) + " k=" + std::to_string(k) + " coherence n<=30";
        bool ok = true;
        for (int n = k + r - 1; n <= 30; ++n)
            ok = ok && static_cast<Count>(thm_kkr_value(n, r, k).value) ==
                           count_cliques(thm_kkr_graph(n, r, k), r);
        coherence.agree = ok;
        coherence.notes = "summation form equals the direct clique count of the built graph";
        report.rows.push_back(std::move(coherence));
    }
    return finish(std::move(report));
}

SuiteReport suite_two_c5_degenerate(const SearchOptions& options) {
    SuiteReport report{"two-c5-degenerate", {}, true};
    ForbiddenPattern pattern = parse_pattern("2C5");
    for (int n = 6; n <= 9; ++n) {
        SearchOutcome outcome = solve({n, 3, pattern}, options);
        bool witnesses_ok = revalidate_witnesses(outcome, clique_objective(3));
        Graph built = thm_2c5_graph(n);
        Count construction = count_cliques(built, 3);
        bool complete_wins = outcome.unique && outcome.extremal.front() == canonical_form(complete(n));

        SuiteRow row;
        row.instance = "n=" + std::to_string(n) + " s=3 pattern=2C5 pigeonhole";
        row.search_value = dec(outcome.optimum);
        row.construction = dec(construction);
        row.extremal_unique = outcome.unique;
        row.agree = outcome.optimum == binomial(n, 3) && complete_wins && witnesses_ok &&
                    outcome.optimum >= construction && is_free(built, pattern);
        row.notes = "every host is free (2*5 > n); unique extremal must be the complete graph";
        report.rows.push_back(std::move(row));

        FormulaValue fv = thm_2c5_value(n);
        SuiteRow info;
        info.instance = "n=" + std::to_string(n) + " exactness";
        info.formula = fv.value_string();
        info.search_value = dec(outcome.optimum);
        info.informational = true;
        info.agree = static_cast<Count>(fv.value) == outcome.optimum;
        info.notes = "far below the large-n regime; the formula is only the construction value here";
        report.rows.push_back(std::move(info));
    }
    for (int n = 10; n <= 20; ++n) {
        Graph built = thm_2c5_graph(n);
        FormulaValue fv = thm_2c5_value(n);
        Count triangles = count_cliques(built, 3);
        SuiteRow row;
        row.instance = "n=" + std::to_string(n) + " construction";
        row.formula = fv.value_string();
        row.construction = dec(triangles);
        row.agree = is_free(built, pattern) && triangles == static_cast<Count>(fv.value);
        row.notes = "join of one vertex with the balanced bipartite graph: free, floor((n-1)^2/4) triangles";
        report.rows.push_back(std::move(row));
    }
    return finish(std::move(report));
}

SuiteReport suite_lemma8_explore(const SearchOptions& options) {
    SuiteReport report{"lemma8-explore", {}, true};
    ForbiddenPattern pattern = parse_pattern("C5");
    ObjectiveFn objective = [](const Graph& g) { return edges_plus_triangles(g); };
    for (int n = 4; n <= 8; ++n) {
        SearchOutcome outcome = solve_functional(n, "e+K3", objective, pattern, options);
        bool witnesses_ok = revalidate_witnesses(outcome, objective);
        Graph balanced = turan_graph({n, 2});
        Count balanced_score = edges_plus_triangles(balanced);
        Count bound = static_cast<Count>(n) * n / 4;

        SuiteRow row;
        row.instance = "n=" + std::to_string(n) + " objective=e+K3 pattern=C5";
        row.search_value = dec(outcome.optimum);
        row.construction = dec(balanced_score);
        row.extremal_unique = outcome.unique;
        row.agree = balanced_score == bound && outcome.optimum >= balanced_score && witnesses_ok;
        row.notes = "balanced bipartite graph scores floor(n^2/4) = " + dec(bound);
        if (n == 5) {
            Graph certificate = disjoint_union(complete(4), Graph(1));
            bool cert_ok = is_free(certificate, pattern) && edges_plus_triangles(certificate) == 10 &&
                           Count{10} > bound;
            row.agree = row.agree && cert_ok;
            row.notes += "; K4+K1 certificate scores 10 > " + dec(bound) +
                         (cert_ok ? " (confirmed)" : " (VIOLATED)");
        }
        report.rows.push_back(std::move(row));

        SuiteRow info;
        info.instance = "n=" + std::to_string(n) + " bound";
        info.formula = dec(bound);
        info.search_value = dec(outcome.optimum);
        info.informational = true;
        info.agree = outcome.optimum <= bound;
        info.notes = "floor(n^2/4) bound applies only above ~2*C(68,2) (proof text) or 2*C(68,3) (statement); "
                     "small-n maxima may exceed it";
        report.rows.push_back(std::move(info));
    }
    return finish(std::move(report));
}

} // namespace

std::vector<std::string> suite_names() {
    return {"zykov", "erdos-gallai", "kkr-smalln", "two-c5-degenerate", "lemma8-explore"};
}

SuiteReport run_suite(std::string_view name, const SearchOptions& options) {
    if (name == "zykov") return suite_zykov(options);
    if (name == "erdos-gallai") return suite_erdos_gallai(options);
    if (name == "kkr-smalln") return suite_kkr_smalln(options);
    if (name == "two-c5-degenerate") return suite_two_c5_degenerate(options);
    if (name == "lemma8-explore") return suite_lemma8_explore(options);
    throw std::invalid_argument("unknown suite '" + std::string(name) +
                                "'; valid: zykov, erdos-gallai, kkr-smalln, two-c5-degenerate, lemma8-explore");
}

} // namespace turanx
