#include "turanx/patterns.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <stdexcept>
#include <unordered_map>

#include "turanx/graph6.hpp"

namespace turanx {

namespace {

using Mask = std::uint64_t;

Mask strictly_above(int v) { return v >= 63 ? 0 : ~((Mask{2} << v) - 1); }

// Static search order over the base: highest degree first, then greedily the
// vertex with most already-placed neighbors. Keeps the backtracking anchored
// to connected pieces.
struct BasePlan {
    int f = 0;
    std::array<int, ForbiddenPattern::kMaxBaseOrder> vertex{};     // position -> base vertex
    std::array<std::uint16_t, ForbiddenPattern::kMaxBaseOrder> earlier_nbrs{}; // positions
    std::array<int, ForbiddenPattern::kMaxBaseOrder> degree{};     // base degree at position

    explicit BasePlan(const Graph& base) : f(base.order()) {
        std::uint16_t placed = 0;
        std::array<int, ForbiddenPattern::kMaxBaseOrder> pos_of{};
        for (int p = 0; p < f; ++p) {
            int pick = -1, pick_conn = -1, pick_deg = -1;
            for (int v = 0; v < f; ++v) {
                if (placed & (1u << v)) continue;
                int conn = 0;
                for (int q = 0; q < p; ++q)
                    if (base.has_edge(v, vertex[q])) ++conn;
                int deg = base.degree(v);
                if (conn > pick_conn || (conn == pick_conn && deg > pick_deg)) {
                    pick = v;
                    pick_conn = conn;
                    pick_deg = deg;
                }
            }
            vertex[p] = pick;
            pos_of[pick] = p;
            placed |= static_cast<std::uint16_t>(1u << pick);
            degree[p] = base.degree(pick);
            std::uint16_t nbrs = 0;
            for (int q = 0; q < p; ++q)
                if (base.has_edge(pick, vertex[q])) nbrs |= static_cast<std::uint16_t>(1u << q);
            earlier_nbrs[p] = nbrs;
        }
    }
};

// Decision procedure for "copies pairwise-disjoint embeddings of base exist
// within avail". Copies are taken in ascending order of their lowest image
// vertex, and failures are memoized on (avail, copies).
struct DisjointDecider {
    const Graph& host;
    const Graph& base;
    const BasePlan& plan;
    std::array<Mask, ForbiddenPattern::kMaxBaseOrder> degree_ok{};
    std::unordered_map<Mask, std::uint64_t> fail_memo; // avail -> bitmask over copy counts

    DisjointDecider(const Graph& h, const Graph& b, const BasePlan& p) : host(h), base(b), plan(p) {
        for (int q = 0; q < plan.f; ++q) {
            Mask ok = 0;
            for (int v = 0; v < host.order(); ++v)
                if (host.degree(v) >= plan.degree[q]) ok |= Mask{1} << v;
            degree_ok[q] = ok;
        }
    }

    bool exists(Mask avail, int copies) {
        if (copies == 0) return true;
        if (std::popcount(avail) < copies * plan.f) return false;
        auto it = fail_memo.find(avail);
        if (it != fail_memo.end() && (it->second >> (copies - 1)) & 1u) return false;

        std::array<int, ForbiddenPattern::kMaxBaseOrder> img{};
        bool found = embed(avail, 0, 0, img, copies);
        if (!found) fail_memo[avail] |= std::uint64_t{1} << (copies - 1);
        return found;
    }

private:
    bool embed(Mask avail, int pos, Mask image,
               std::array<int, ForbiddenPattern::kMaxBaseOrder>& img, int copies) {
        if (pos == plan.f) {
            Mask next = avail & ~image & strictly_above(std::countr_zero(image));
            return exists(next, copies - 1);
        }
        Mask cand = avail & ~image & degree_ok[pos];
        for (std::uint16_t nbrs = plan.earlier_nbrs[pos]; nbrs; nbrs &= nbrs - 1)
            cand &= host.neighbors(img[std::countr_zero(nbrs)]);
        for (Mask m = cand; m; m &= m - 1) {
            int v = std::countr_zero(m);
            img[pos] = v;
            if (embed(avail, pos + 1, image | (Mask{1} << v), img, copies)) return true;
        }
        return false;
    }
};

bool trivially_contained(const Graph& base) { return base.order() == 0; }

bool pigeonhole_free(const Graph& host, const ForbiddenPattern& p) {
    return static_cast<long long>(p.multiplicity) * p.base.order() > host.order();
}

// Does base embed onto exactly the vertices of `image` (every image vertex
// used)? Injective onto a set of size |base| is a bijection, so plain
// backtracking restricted to the set suffices.
bool spans(const Graph& host, const Graph& base, const BasePlan& plan, Mask image) {
    struct Rec {
        const Graph& host;
        const BasePlan& plan;
        std::array<int, ForbiddenPattern::kMaxBaseOrder> img{};
        bool run(Mask avail, int pos) {
            if (pos == plan.f) return true;
            Mask cand = avail;
            for (std::uint16_t nbrs = plan.earlier_nbrs[pos]; nbrs; nbrs &= nbrs - 1)
                cand &= host.neighbors(img[std::countr_zero(nbrs)]);
            for (Mask m = cand; m; m &= m - 1) {
                int v = std::countr_zero(m);
                img[pos] = v;
                if (run(avail & ~(Mask{1} << v), pos + 1)) return true;
            }
            return false;
        }
    } rec{host, plan, {}};
    return rec.run(image, 0);
}

// Quick necessary conditions before the spanning check.
bool span_prefilter(const Graph& host, const Graph& base, Mask image) {
    int base_edges = base.edge_count();
    int twice_in = 0;
    std::array<int, ForbiddenPattern::kMaxBaseOrder> host_degs{};
    int i = 0;
    for (Mask m = image; m; m &= m - 1) {
        int v = std::countr_zero(m);
        int d = std::popcount(host.neighbors(v) & image);
        twice_in += d;
        host_degs[i++] = d;
    }
    if (twice_in < 2 * base_edges) return false;
    std::array<int, ForbiddenPattern::kMaxBaseOrder> base_degs{};
    for (int v = 0; v < base.order(); ++v) base_degs[v] = base.degree(v);
    std::sort(base_degs.begin(), base_degs.begin() + base.order());
    std::sort(host_degs.begin(), host_degs.begin() + base.order());
    for (int q = 0; q < base.order(); ++q)
        if (host_degs[q] < base_degs[q]) return false;
    return true;
}

// Lexicographically least vertex map of base onto exactly `image`, searching
// base vertices in natural order with ascending candidates.
Embedding least_map_onto(const Graph& host, const Graph& base, Mask image) {
    const int f = base.order();
    Embedding e;
    e.map.assign(static_cast<std::size_t>(f), -1);
    struct Rec {
        const Graph& host;
        const Graph& base;
        std::vector<int>& map;
        int f;
        bool run(Mask avail, int v) {
            if (v == f) return true;
            Mask cand = avail;
            for (int u = 0; u < v; ++u)
                if (base.has_edge(u, v)) cand &= host.neighbors(map[static_cast<std::size_t>(u)]);
            for (Mask m = cand; m; m &= m - 1) {
                int w = std::countr_zero(m);
                map[static_cast<std::size_t>(v)] = w;
                if (run(avail & ~(Mask{1} << w), v + 1)) return true;
            }
            return false;
        }
    } rec{host, base, e.map, f};
    if (!rec.run(image, 0)) throw std::logic_error("least_map_onto called on a non-spanning image");
    return e;
}

// Enumerate the size-f subsets of `universe` in ascending integer-mask order
// and return the first for which `accept` is true.
template <typename Accept>
std::optional<Mask> min_mask_subset(Mask universe, int f, Accept&& accept) {
    std::array<int, Graph::kMaxOrder> verts{};
    int m = 0;
    for (Mask u = universe; u; u &= u - 1) verts[m++] = std::countr_zero(u);
    if (f > m) return std::nullopt;
    if (f == 0) return Mask{0};

    // Gosper's hack over the compacted universe; expansion to real vertex
    // indices is monotone, so compact ascending order is mask ascending order.
    Mask compact = (f == 64) ? ~Mask{0} : (Mask{1} << f) - 1;
    Mask limit = (m == 64) ? ~Mask{0} : (Mask{1} << m) - 1;
    while (true) {
        Mask expanded = 0;
        for (Mask c = compact; c; c &= c - 1) expanded |= Mask{1} << verts[std::countr_zero(c)];
        if (accept(expanded)) return expanded;
        if (compact == (limit & ~((Mask{1} << (m - f)) - 1))) break; // highest combination
        Mask lo = compact & -compact;
        Mask lz = (compact + lo) & ~compact;
        compact |= lz;
        compact &= ~(lz - 1);
        compact |= (lz / lo / 2) - 1;
    }
    return std::nullopt;
}

} // namespace

ForbiddenPattern::ForbiddenPattern(Graph base_graph, int k) : base(std::move(base_graph)), multiplicity(k) {
    if (base.order() > kMaxBaseOrder)
        throw std::invalid_argument("pattern base order must be <= 16");
    if (multiplicity < 1) throw std::invalid_argument("pattern multiplicity must be >= 1");
    label = (multiplicity > 1 ? std::to_string(multiplicity) : std::string{}) + "g6:" + to_graph6(base);
}

bool is_free(const Graph& host, const ForbiddenPattern& pattern) {
    if (trivially_contained(pattern.base)) return false;
    if (pigeonhole_free(host, pattern)) return true;
    BasePlan plan(pattern.base);
    DisjointDecider decider(host, pattern.base, plan);
    return !decider.exists(host.vertex_mask(), pattern.multiplicity);
}

std::optional<std::vector<Embedding>> find_disjoint_copies(const Graph& host,
                                                           const ForbiddenPattern& pattern) {
    if (trivially_contained(pattern.base))
        return std::vector<Embedding>(static_cast<std::size_t>(pattern.multiplicity));
    if (pigeonhole_free(host, pattern)) return std::nullopt;
    BasePlan plan(pattern.base);
    DisjointDecider decider(host, pattern.base, plan);
    if (!decider.exists(host.vertex_mask(), pattern.multiplicity)) return std::nullopt;

    // Greedy lexicographic extraction: each copy takes the smallest feasible
    // image mask; feasibility of the remainder is re-decided exactly.
    std::vector<Embedding> copies;
    Mask used = 0;
    for (int i = 0; i < pattern.multiplicity; ++i) {
        int remaining = pattern.multiplicity - i - 1;
        auto image = min_mask_subset(host.vertex_mask() & ~used, pattern.base.order(), [&](Mask m) {
            return span_prefilter(host, pattern.base, m) && spans(host, pattern.base, plan, m) &&
                   decider.exists(host.vertex_mask() & ~used & ~m, remaining);
        });
        if (!image) throw std::logic_error("disjoint-copy extraction lost a certified packing");
        copies.push_back(least_map_onto(host, pattern.base, *image));
        used |= *image;
    }
    return copies;
}

std::optional<Embedding> contains_subgraph(const Graph& host, const Graph& f) {
    auto copies = find_disjoint_copies(host, ForbiddenPattern(f, 1));
    if (!copies) return std::nullopt;
    return (*copies)[0];
}

bool contains_cycle(const Graph& host, int len) {
    if (len < 3) throw std::invalid_argument("cycle length must be >= 3");
    const int n = host.order();
    if (len > n) return false;
    struct Rec {
        const Graph& g;
        int len;
        int start;
        bool run(int current, Mask visited, int depth) {
            if (depth == len) return g.has_edge(current, start);
            Mask cand = g.neighbors(current) & ~visited & strictly_above(start);
            for (Mask m = cand; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (run(v, visited | (Mask{1} << v), depth + 1)) return true;
            }
            return false;
        }
    };
    // s is the lowest vertex of the sought cycle; all others lie above it.
    for (int s = 0; s + len <= n; ++s) {
        Rec rec{host, len, s};
        if (rec.run(s, Mask{1} << s, 1)) return true;
    }
    return false;
}

bool contains_path(const Graph& host, int len) {
    if (len < 1) throw std::invalid_argument("path length must be >= 1 vertex");
    const int n = host.order();
    if (len > n) return false;
    if (len == 1) return n >= 1;
    struct Rec {
        const Graph& g;
        int len;
        bool run(int current, Mask visited, int depth) {
            if (depth == len) return true;
            Mask cand = g.neighbors(current) & ~visited;
            for (Mask m = cand; m; m &= m - 1) {
                int v = std::countr_zero(m);
                if (run(v, visited | (Mask{1} << v), depth + 1)) return true;
            }
            return false;
        }
    };
    for (int s = 0; s < n; ++s) {
        Rec rec{host, len};
        if (rec.run(s, Mask{1} << s, 1)) return true;
    }
    return false;
}

ForbiddenPattern parse_pattern(std::string_view text) {
    std::string_view rest = text;
    int multiplicity = 1;
    if (!rest.empty() && rest.front() >= '0' && rest.front() <= '9') {
        std::size_t len = 0;
        while (len < rest.size() && rest[len] >= '0' && rest[len] <= '9') ++len;
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + len, multiplicity);
        if (ec != std::errc{} || ptr != rest.data() + len)
            throw std::invalid_argument("bad pattern multiplicity in '" + std::string(text) + "'");
        rest.remove_prefix(len);
        if (!rest.empty() && rest.front() == '*') rest.remove_prefix(1);
    }
    if (rest.empty()) throw std::invalid_argument("missing pattern base in '" + std::string(text) + "'");

    Graph base(0);
    if (rest.starts_with("g6:")) {
        base = from_graph6(rest.substr(3));
    } else {
        char kind = rest.front();
        int d = 0;
        auto digits = rest.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), d);
        if (ec != std::errc{} || ptr != digits.data() + digits.size() || digits.empty())
            throw std::invalid_argument("bad pattern base in '" + std::string(text) + "'");
        switch (kind) {
            case 'K': {
                if (d < 1) throw std::invalid_argument("K<d> requires d >= 1");
                base = Graph(d);
                for (int u = 0; u < d; ++u)
                    for (int v = u + 1; v < d; ++v) base = base.add_edge(u, v);
                break;
            }
            case 'C': {
                if (d < 3) throw std::invalid_argument("C<d> requires d >= 3");
                base = Graph(d);
                for (int v = 0; v < d; ++v) base = base.add_edge(v, (v + 1) % d);
                break;
            }
            case 'P': {
                if (d < 1) throw std::invalid_argument("P<d> requires d >= 1");
                base = Graph(d);
                for (int v = 0; v + 1 < d; ++v) base = base.add_edge(v, v + 1);
                break;
            }
            default:
                throw std::invalid_argument("unknown pattern base in '" + std::string(text) + "'");
        }
    }
    ForbiddenPattern pattern(std::move(base), multiplicity);
    pattern.label = std::string(text);
    return pattern;
}

} // namespace turanx
