#include "turanx/constructions.hpp"

#include <array>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace turanx {

namespace {

void check_buildable_order(std::int64_t n, const char* what) {
    if (n < 0 || n > Graph::kMaxOrder)
        throw std::invalid_argument(std::string(what) + ": order must be in [0, 64], got " + std::to_string(n));
}

std::vector<std::int64_t> turan_part_sizes(std::int64_t n, std::int64_t r) {
    if (r < 1) throw std::invalid_argument("turan: r must be >= 1");
    if (n < 0) throw std::invalid_argument("turan: n must be >= 0");
    std::vector<std::int64_t> sizes(static_cast<std::size_t>(r), 0);
    for (std::int64_t i = 0; i < r; ++i) sizes[static_cast<std::size_t>(i)] = n / r + (i < n % r ? 1 : 0);
    return sizes;
}

std::int64_t parse_int(std::string_view s, const char* what) {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument(std::string("bad integer for ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        std::size_t pos = s.find(sep, start);
        parts.push_back(s.substr(start, pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return parts;
}

} // namespace

Graph turan_graph(const TuranParams& p) {
    check_buildable_order(p.n, "turan");
    if (p.r < 1) throw std::invalid_argument("turan: r must be >= 1");
    Graph g(static_cast<int>(p.n));
    for (int u = 0; u < p.n; ++u)
        for (int v = u + 1; v < p.n; ++v)
            if (u % p.r != v % p.r) g = g.add_edge(u, v);
    return g;
}

Graph join(const Graph& g, const Graph& h) {
    std::int64_t n = g.order() + h.order();
    check_buildable_order(n, "join");
    Graph out = disjoint_union(g, h);
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v) out = out.add_edge(u, g.order() + v);
    return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    std::int64_t n = g.order() + h.order();
    check_buildable_order(n, "disjoint_union");
    Graph out(static_cast<int>(n));
    for (int u = 0; u < g.order(); ++u)
        for (int v = u + 1; v < g.order(); ++v)
            if (g.has_edge(u, v)) out = out.add_edge(u, v);
    for (int u = 0; u < h.order(); ++u)
        for (int v = u + 1; v < h.order(); ++v)
            if (h.has_edge(u, v)) out = out.add_edge(g.order() + u, g.order() + v);
    return out;
}

Graph complete(int n) {
    check_buildable_order(n, "complete");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g = g.add_edge(u, v);
    return g;
}

Graph cycle(int n) {
    check_buildable_order(n, "cycle");
    if (n < 3) throw std::invalid_argument("cycle: n must be >= 3");
    Graph g(n);
    for (int v = 0; v < n; ++v) g = g.add_edge(v, (v + 1) % n);
    return g;
}

Graph path(int n) {
    check_buildable_order(n, "path");
    Graph g(n);
    for (int v = 0; v + 1 < n; ++v) g = g.add_edge(v, v + 1);
    return g;
}

Graph star(int n) {
    check_buildable_order(n, "star");
    Graph g(n);
    for (int v = 1; v < n; ++v) g = g.add_edge(0, v);
    return g;
}

FormulaValue turan_clique_count(std::int64_t n, std::int64_t r, std::int64_t s) {
    if (s < 0) throw std::invalid_argument("turan_clique_count: s must be >= 0");
    if (r < 1) throw std::invalid_argument("turan_clique_count: r must be >= 1");
    if (n < 0) throw std::invalid_argument("turan_clique_count: n must be >= 0");
    // Parts beyond n are empty; dropping them changes nothing.
    std::int64_t r_eff = std::max<std::int64_t>(1, std::min(r, n));
    auto sizes = turan_part_sizes(n, r_eff);
    // Coefficient of x^s in prod_i (1 + a_i x).
    std::vector<Count> coeff(static_cast<std::size_t>(s) + 1, 0);
    coeff[0] = 1;
    for (std::int64_t a : sizes) {
        for (std::int64_t d = std::min(s, r_eff); d >= 1; --d)
            coeff[static_cast<std::size_t>(d)] = checked_add(
                coeff[static_cast<std::size_t>(d)],
                checked_mul(coeff[static_cast<std::size_t>(d - 1)], static_cast<Count>(a)));
    }
    FormulaValue out;
    out.value = to_signed128(coeff[static_cast<std::size_t>(s)]);
    out.validity = Validity::exact_for_all_n;
    out.note = "exact for all n";
    return out;
}

FormulaValue thm_2c5_value(std::int64_t n) {
    if (n < 1) throw std::invalid_argument("thm_2c5_value: n must be >= 1");
    FormulaValue out;
    out.value = static_cast<__int128>((n - 1) * (n - 1) / 4);
    out.validity = Validity::exact_above_threshold;
    out.threshold = std::nullopt;
    out.note = "exact for sufficiently large n (threshold unstated); construction lower bound below that";
    return out;
}

Graph thm_2c5_graph(int n) {
    if (n < 1) throw std::invalid_argument("thm_2c5_graph: n must be >= 1");
    check_buildable_order(n, "thm_2c5_graph");
    return join(complete(1), turan_graph({n - 1, 2}));
}

FormulaValue thm_kkr_value(std::int64_t n, std::int64_t r, std::int64_t k) {
    if (r < 2) throw std::invalid_argument("thm_kkr_value: r must be >= 2");
    if (k < 1) throw std::invalid_argument("thm_kkr_value: k must be >= 1");
    if (n < k + r - 1) throw std::invalid_argument("thm_kkr_value: n must be >= k + r - 1");
    Count total = 0;
    for (std::int64_t i = 0; i <= r; ++i) {
        Count ways = binomial(k, i);
        if (ways == 0) continue;
        total = checked_add(total, checked_mul(ways, static_cast<Count>(turan_clique_count(n - k, r - 1, r - i).value)));
    }
    FormulaValue out;
    out.value = to_signed128(total);
    out.validity = Validity::exact_above_threshold;
    out.threshold = std::nullopt;
    out.note = "exact for n >= n0(k,r) (threshold unstated); construction lower bound below that";
    return out;
}

Graph thm_kkr_graph(int n, int r, int k) {
    if (r < 2) throw std::invalid_argument("thm_kkr_graph: r must be >= 2");
    if (k < 1) throw std::invalid_argument("thm_kkr_graph: k must be >= 1");
    if (n < k + r - 1) throw std::invalid_argument("thm_kkr_graph: n must be >= k + r - 1");
    check_buildable_order(n, "thm_kkr_graph");
    return join(complete(k), turan_graph({n - k, r - 1}));
}

FormulaValue erdos_gallai_value(std::int64_t n, std::int64_t k) {
    if (n < 0) throw std::invalid_argument("erdos_gallai_value: n must be >= 0");
    if (k < 1) throw std::invalid_argument("erdos_gallai_value: k must be >= 1");
    Count clique_branch = binomial(2 * k + 1, 2);
    __int128 hub_branch = static_cast<__int128>(n - k) * k + static_cast<__int128>(binomial(k, 2));
    __int128 value = static_cast<__int128>(clique_branch);
    if (hub_branch > value) value = hub_branch;
    FormulaValue out;
    out.value = value;
    out.validity = Validity::exact_above_threshold;
    out.threshold = static_cast<Count>(2 * k + 1);
    out.note = "exact for n >= 2k+1 = " + std::to_string(2 * k + 1) +
               "; below that every graph is free and the optimum is C(n,2)";
    return out;
}

FormulaValue bushaw_kettle_value(std::int64_t n, std::int64_t k, std::int64_t l) {
    if (k < 2) throw std::invalid_argument("bushaw_kettle_value: k must be >= 2");
    if (l < 4) throw std::invalid_argument("bushaw_kettle_value: l must be >= 4");
    std::int64_t m = k * (l / 2) - 1;
    __int128 lambda = (l % 2 == 1) ? 1 : 0;
    __int128 value = static_cast<__int128>(binomial(m, 2)) + static_cast<__int128>(m) * (n - m) + lambda;
    Count threshold =
        static_cast<Count>(2 * l) +
        static_cast<Count>(2 * k * l) * static_cast<Count>((l + 1) / 2 + 1) * binomial(l, l / 2);
    FormulaValue out;
    out.value = value;
    out.validity = Validity::exact_above_threshold;
    out.threshold = threshold;
    out.note = "exact for n >= 2l + 2kl(ceil(l/2)+1)C(l,floor(l/2)) = " + to_decimal(threshold);
    return out;
}

Count lemma8_threshold_statement() { return 2 * binomial(68, 3); }
Count lemma8_threshold_proof_text() { return 2 * binomial(68, 2); }

Graph parse_construction(std::string_view text) {
    std::size_t colon = text.find(':');
    if (colon == std::string_view::npos)
        throw std::invalid_argument("bad construction '" + std::string(text) + "': missing ':' (at position " +
                                    std::to_string(text.size()) + ")");
    std::string_view head = text.substr(0, colon);
    std::string_view args = text.substr(colon + 1);

    if (head == "K") return complete(static_cast<int>(parse_int(args, "K:n")));
    if (head == "C") return cycle(static_cast<int>(parse_int(args, "C:n")));
    if (head == "P") return path(static_cast<int>(parse_int(args, "P:n")));
    if (head == "turan") {
        auto parts = split(args, ',');
        if (parts.size() != 2) throw std::invalid_argument("turan:n,r expects two arguments");
        return turan_graph({parse_int(parts[0], "turan:n"), parse_int(parts[1], "turan:r")});
    }
    if (head == "thm2c5") return thm_2c5_graph(static_cast<int>(parse_int(args, "thm2c5:n")));
    if (head == "thmkkr") {
        auto parts = split(args, ',');
        if (parts.size() != 3) throw std::invalid_argument("thmkkr:n,r,k expects three arguments");
        return thm_kkr_graph(static_cast<int>(parse_int(parts[0], "thmkkr:n")),
                             static_cast<int>(parse_int(parts[1], "thmkkr:r")),
                             static_cast<int>(parse_int(parts[2], "thmkkr:k")));
    }
    if (head == "join") {
        // Split at the first comma where both sides parse as constructions.
        std::size_t from = 0;
        while (true) {
            std::size_t pos = args.find(',', from);
            if (pos == std::string_view::npos) break;
            try {
                Graph left = parse_construction(args.substr(0, pos));
                Graph right = parse_construction(args.substr(pos + 1));
                return join(left, right);
            } catch (const std::exception&) {
                from = pos + 1;
            }
        }
        throw std::invalid_argument("join:A,B: no comma split parses in '" + std::string(args) + "'");
    }
    throw std::invalid_argument("unknown construction '" + std::string(head) + "' (at position 0)");
}

} // namespace turanx
