// turanx: exact workbench for generalized Turan numbers at desk scale.
//
// construct  build a named graph family, print graph6
// count      exact number of s-cliques in a graph6 graph
// free       decide "k disjoint copies of F" containment, print witness
// solve      exact ex(n, K_s, pattern) by exhaustive isomorph-free search
// verify     run a verification suite (table, --json, --csv)
// formula    evaluate a closed form with its validity condition

#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "turanx/constructions.hpp"
#include "turanx/graph6.hpp"
#include "turanx/serialize.hpp"
#include "turanx/suites.hpp"

namespace {

using namespace turanx;

// graph6 bytes are shell-hostile; "-" reads one line from stdin instead.
std::string read_graph6_arg(const std::string& arg) {
    if (arg != "-") return arg;
    std::string line;
    if (!std::getline(std::cin, line)) throw std::invalid_argument("no graph6 line on stdin");
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.pop_back();
    return line;
}

std::string validity_text(const FormulaValue& fv) {
    switch (fv.validity) {
        case Validity::exact_for_all_n: return "exact for all n";
        case Validity::exact_above_threshold:
            return fv.threshold ? "exact for n >= " + to_decimal(*fv.threshold)
                                : "exact above an unstated threshold";
        case Validity::lower_bound_only: return "construction lower bound only";
    }
    return "";
}

FormulaValue eval_formula(const std::string& spec) {
    auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("formula spec needs ':', e.g. turan:7,3,3");
    std::string head = spec.substr(0, colon);
    std::string args = spec.substr(colon + 1);
    auto ints = [&args]() {
        std::vector<std::int64_t> out;
        std::size_t start = 0;
        while (start <= args.size()) {
            std::size_t pos = args.find(',', start);
            std::string tok = args.substr(start, pos - start);
            out.push_back(std::stoll(tok));
            if (pos == std::string::npos) break;
            start = pos + 1;
        }
        return out;
    }();
    auto need = [&](std::size_t count, const char* usage) {
        if (ints.size() != count) throw std::invalid_argument(std::string("usage: ") + usage);
    };
    if (head == "turan") { need(3, "turan:n,r,s"); return turan_clique_count(ints[0], ints[1], ints[2]); }
    if (head == "thm2c5") { need(1, "thm2c5:n"); return thm_2c5_value(ints[0]); }
    if (head == "thmkkr") { need(3, "thmkkr:n,r,k"); return thm_kkr_value(ints[0], ints[1], ints[2]); }
    if (head == "eg") { need(2, "eg:n,k"); return erdos_gallai_value(ints[0], ints[1]); }
    if (head == "bk") { need(3, "bk:n,k,l"); return bushaw_kettle_value(ints[0], ints[1], ints[2]); }
    throw std::invalid_argument("unknown formula '" + head + "'; valid: turan, thm2c5, thmkkr, eg, bk");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for generalized Turan numbers"};
    app.require_subcommand(1);

    int threads = 0;
    int max_n = 10;
    bool no_prune = false;
    bool json_out = false;
    bool csv_out = false;
    app.add_option("--threads", threads, "worker threads (0 = all cores)");
    app.add_option("--max-n", max_n, "lower the exhaustive-search cap (hard ceiling 10)");
    app.add_flag("--no-prune", no_prune, "disable edge-maximality pruning in solve");
    app.add_flag("--json", json_out, "machine-readable JSON output");
    app.add_flag("--csv", csv_out, "CSV output (verify)");

    std::string construct_spec;
    auto* cmd_construct = app.add_subcommand("construct", "build a graph family, print graph6");
    cmd_construct->add_option("spec", construct_spec,
                              "turan:n,r | join:A,B | thm2c5:n | thmkkr:n,r,k | K:n | C:n | P:n")
        ->required();

    std::string count_g6;
    int count_s = 0;
    auto* cmd_count = app.add_subcommand("count", "count s-cliques in a graph6 graph");
    cmd_count->add_option("graph6", count_g6, "graph6 text, or - to read a line from stdin")->required();
    cmd_count->add_option("s", count_s, "clique order")->required();

    std::string free_g6, free_pattern;
    auto* cmd_free = app.add_subcommand("free", "decide pattern freeness, print FREE or a witness");
    cmd_free->add_option("graph6", free_g6, "graph6 text, or - for stdin")->required();
    cmd_free->add_option("pattern", free_pattern, "e.g. 2C5, 3K4, K3, 2P4, 2g6:Dhc")->required();

    int solve_n = 0, solve_s = 0;
    std::string solve_pattern;
    auto* cmd_solve = app.add_subcommand("solve", "exact ex(n, K_s, pattern), JSON output");
    cmd_solve->add_option("n", solve_n, "host order (exhaustive mode: n <= 10)")->required();
    cmd_solve->add_option("s", solve_s, "clique order to maximize")->required();
    cmd_solve->add_option("pattern", solve_pattern, "forbidden pattern")->required();

    std::string verify_suite;
    auto* cmd_verify = app.add_subcommand("verify", "run a verification suite");
    cmd_verify->add_option("suite", verify_suite, "zykov | erdos-gallai | kkr-smalln | two-c5-degenerate | lemma8-explore")
        ->required();

    std::string formula_spec;
    auto* cmd_formula = app.add_subcommand("formula", "evaluate a closed form with its validity");
    cmd_formula->add_option("spec", formula_spec, "turan:n,r,s | thm2c5:n | thmkkr:n,r,k | eg:n,k | bk:n,k,l")
        ->required();

    CLI11_PARSE(app, argc, argv);

    SearchOptions options;
    options.threads = threads;
    options.max_n = max_n;
    if (no_prune) options.edge_maximal_prune = false;

    try {
        if (*cmd_construct) {
            std::cout << to_graph6(parse_construction(construct_spec)) << "\n";
            return 0;
        }
        if (*cmd_count) {
            Graph g = from_graph6(read_graph6_arg(count_g6));
            std::cout << to_decimal(count_cliques(g, count_s)) << "\n";
            return 0;
        }
        if (*cmd_free) {
            Graph g = from_graph6(read_graph6_arg(free_g6));
            ForbiddenPattern pattern = parse_pattern(free_pattern);
            auto copies = find_disjoint_copies(g, pattern);
            if (!copies) {
                std::cout << "FREE\n";
                return 0;
            }
            std::cout << "CONTAINS " << pattern.multiplicity << " disjoint cop"
                      << (pattern.multiplicity == 1 ? "y" : "ies") << " of " << to_graph6(pattern.base)
                      << ":\n";
            for (std::size_t i = 0; i < copies->size(); ++i) {
                std::cout << "  copy " << i + 1 << ":";
                for (std::size_t v = 0; v < (*copies)[i].map.size(); ++v)
                    std::cout << " " << v << "->" << (*copies)[i].map[v];
                std::cout << "\n";
            }
            return 0;
        }
        if (*cmd_solve) {
            SearchProblem problem{solve_n, solve_s, parse_pattern(solve_pattern)};
            std::cout << to_json(solve(problem, options)) << "\n";
            return 0;
        }
        if (*cmd_verify) {
            SuiteReport report = run_suite(verify_suite, options);
            if (json_out) std::cout << to_json(report) << "\n";
            else if (csv_out) std::cout << to_csv(report);
            else std::cout << to_table(report);
            return report.pass ? 0 : 2;
        }
        if (*cmd_formula) {
            FormulaValue fv = eval_formula(formula_spec);
            if (json_out) {
                std::cout << "{\"value\":\"" << fv.value_string() << "\",\"valid\":\"" << validity_text(fv)
                          << "\"}\n";
            } else {
                std::cout << fv.value_string() << "  [" << validity_text(fv) << "]\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
