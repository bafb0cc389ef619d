#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "graphsym/errors.hpp"
#include "graphsym/graph.hpp"

namespace graphsym {

// graph6 text format: N(n) header, then the upper triangle read column-major
// ((0,1),(0,2),(1,2),(0,3),...), 6 bits per printable character offset 63.

namespace detail {

inline void g6_append_bits(std::string& out, std::uint64_t value, int bits) {
    for (int shift = bits - 6; shift >= 0; shift -= 6)
        out.push_back(static_cast<char>(((value >> shift) & 0x3f) + 63));
}

}  // namespace detail

inline std::string graph6_write(const Graph& g) {
    const int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(126);
        detail::g6_append_bits(out, static_cast<std::uint64_t>(n), 18);
    } else {
        throw std::invalid_argument("graph6_write: n > 258047 unsupported");
    }
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>((acc << (6 - nbits)) + 63));
    return out;
}

inline Graph graph6_read(const std::string& text) {
    std::size_t pos = 0;
    auto need = [&](std::size_t k) {
        if (pos + k > text.size())
            throw Graph6ParseError("graph6: truncated input", text.size());
    };
    auto sextet = [&]() -> int {
        need(1);
        unsigned char c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126)
            throw Graph6ParseError("graph6: character out of printable range", pos);
        ++pos;
        return c - 63;
    };

    need(1);
    long long n;
    if (static_cast<unsigned char>(text[0]) == 126) {
        ++pos;
        need(1);
        if (static_cast<unsigned char>(text[pos]) == 126)
            throw Graph6ParseError("graph6: n > 258047 unsupported", pos);
        long long v = 0;
        for (int i = 0; i < 3; ++i) v = (v << 6) | sextet();
        n = v;
    } else {
        n = sextet();
    }

    const long long pairs = n * (n - 1) / 2;
    EdgeList edges;
    long long bit = 0;
    int i = 0, j = 1;
    while (bit < pairs) {
        int s = sextet();
        for (int k = 5; k >= 0 && bit < pairs; --k, ++bit) {
            if ((s >> k) & 1) edges.emplace_back(i, j);
            if (++i == j) {
                i = 0;
                ++j;
            }
        }
    }
    if (pos != text.size())
        throw Graph6ParseError("graph6: trailing characters", pos);
    return Graph::build(static_cast<int>(n), edges);
}

}  // namespace graphsym
