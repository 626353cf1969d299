#include "turanx/graph6.hpp"

#include <array>
#include <cstdint>

namespace turanx {

namespace {

constexpr int kBias = 63;
constexpr int kMaxByte = 126;

int data_byte(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6ParseError("truncated graph6 text", text.size());
    unsigned char c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > kMaxByte)
        throw Graph6ParseError("byte out of graph6 range [63, 126]", pos);
    return c - kBias;
}

} // namespace

Graph from_graph6(std::string_view text) {
    if (text.empty()) throw Graph6ParseError("empty graph6 text", 0);

    std::size_t pos = 0;
    int n;
    int first = data_byte(text, pos);
    if (first < kMaxByte - kBias) {
        n = first;
        pos = 1;
    } else {
        // 0x7E prefix: order in the next three bytes, 6 bits each, big-endian.
        if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == kMaxByte)
            throw Graph6ParseError("order > 64 is not supported", 1);
        int b1 = data_byte(text, 1);
        int b2 = data_byte(text, 2);
        int b3 = data_byte(text, 3);
        n = (b1 << 12) | (b2 << 6) | b3;
        pos = 4;
        if (n > Graph::kMaxOrder) throw Graph6ParseError("order > 64 is not supported", 1);
        if (n < kMaxByte - kBias)
            throw Graph6ParseError("non-canonical long-form order prefix", 1);
    }

    std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::size_t nbytes = (nbits + 5) / 6;
    if (text.size() != pos + nbytes)
        throw Graph6ParseError(text.size() < pos + nbytes ? "graph6 text too short"
                                                          : "trailing bytes after graph6 data",
                               text.size() < pos + nbytes ? text.size() : pos + nbytes);

    std::array<std::uint64_t, Graph::kMaxOrder> rows{};
    std::size_t bit_index = 0;
    int current = 0;
    int bits_left = 0;
    std::size_t current_pos = pos;
    // Upper triangle, column-major: column j = 1..n-1, rows i = 0..j-1.
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (bits_left == 0) {
                current_pos = pos;
                current = data_byte(text, pos++);
                bits_left = 6;
            }
            int bit = (current >> (bits_left - 1)) & 1;
            --bits_left;
            ++bit_index;
            if (bit) {
                rows[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
                rows[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
            }
        }
    }
    (void)bit_index;
    if (bits_left > 0 && (current & ((1 << bits_left) - 1)) != 0)
        throw Graph6ParseError("nonzero padding bits", current_pos);

    return Graph::from_rows(n, rows);
}

std::string to_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else {
        out.push_back(static_cast<char>(kMaxByte));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
        out.push_back(static_cast<char>((n & 0x3f) + kBias));
    }
    int acc = 0;
    int nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + kBias));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + kBias));
    return out;
}

} // namespace turanx
