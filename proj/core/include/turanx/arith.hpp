#ifndef TURANX_ARITH_HPP
#define TURANX_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace turanx {

// Exact counting type. Single clique counts fit in 64 bits at order <= 64,
// but profile sums and formula intermediates can exceed them, so all counts
// are carried as 128-bit integers and printed as decimal strings.
using Count = unsigned __int128;

inline std::string to_decimal(Count v) {
    if (v == 0) return "0";
    std::string out;
    while (v > 0) {
        out.push_back(static_cast<char>('0' + static_cast<int>(v % 10)));
        v /= 10;
    }
    return {out.rbegin(), out.rend()};
}

inline Count parse_count(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty count literal");
    Count v = 0;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("bad count literal: " + s);
        v = v * 10 + static_cast<Count>(c - '0');
    }
    return v;
}

inline Count checked_add(Count a, Count b) {
    Count s = a + b;
    if (s < a) throw std::overflow_error("count exceeds 128 bits");
    return s;
}

inline Count checked_mul(Count a, Count b) {
    if (a != 0 && b > ~Count{0} / a) throw std::overflow_error("count exceeds 128 bits");
    return a * b;
}

inline __int128 to_signed128(Count v) {
    if (v > (~Count{0} >> 1)) throw std::overflow_error("count exceeds signed 128 bits");
    return static_cast<__int128>(v);
}

// C(n, k), exact; throws std::overflow_error beyond 128 bits.
inline Count binomial(std::int64_t n, std::int64_t k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Count result = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        result = checked_mul(result, static_cast<Count>(n - k + i)) / static_cast<Count>(i);
    }
    return result;
}

} // namespace turanx

#endif
