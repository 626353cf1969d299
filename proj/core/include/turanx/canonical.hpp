#ifndef TURANX_CANONICAL_HPP
#define TURANX_CANONICAL_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "turanx/graph.hpp"

namespace turanx {

/// Isomorphism-class certificate: order byte followed by the upper-triangle
/// bit string (column-major, packed MSB-first) of the canonically relabeled
/// graph. Two graphs have equal CanonicalForm iff they are isomorphic.
struct CanonicalForm {
    std::string bytes;

    int order() const { return bytes.empty() ? 0 : static_cast<unsigned char>(bytes[0]); }

    /// Rebuild the canonical representative graph.
    Graph to_graph() const;

    auto operator<=>(const CanonicalForm&) const = default;
};

/// Canonical form via equitable degree refinement plus backtracking over the
/// refined orbits, pruned by automorphisms discovered along the way. The
/// canonical labeling minimizes the packed upper-triangle bit string.
CanonicalForm canonical_form(const Graph& g);

/// The labeling behind canonical_form: entry v is the position of vertex v
/// in the canonical order.
std::vector<int> canonical_labeling(const Graph& g);

bool is_isomorphic(const Graph& g, const Graph& h);

} // namespace turanx

#endif
