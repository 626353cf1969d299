#ifndef TURANX_GRAPH6_HPP
#define TURANX_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "turanx/graph.hpp"

namespace turanx {

/// Parse failure for graph6 text; offset() is the byte position of the
/// offending byte (or of the end of input for truncation).
class Graph6ParseError : public std::runtime_error {
public:
    Graph6ParseError(std::string message, std::size_t offset)
        : std::runtime_error(message + " (byte offset " + std::to_string(offset) + ")"),
          offset_(offset) {}
    std::size_t offset() const { return offset_; }

private:
    std::size_t offset_;
};

/// Decode one graph6 line (no ">>graph6<<" header, order <= 64).
Graph from_graph6(std::string_view text);

/// Encode as graph6: short order byte for n <= 62, the 4-byte order prefix
/// for 63 and 64. Round-trips through from_graph6 vertex-for-vertex.
std::string to_graph6(const Graph& g);

} // namespace turanx

#endif
