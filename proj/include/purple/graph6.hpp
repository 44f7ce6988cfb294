#pragma once

// graph6 codec. One printable-ASCII record per labelled graph: a size
// header N(n) (chars offset by 63), then the upper triangle of the
// adjacency matrix read column-major, packed 6 bits per char and
// zero-padded to a multiple of 6.
//
// Size header: n <= 62 is a single byte n+63; 63 <= n <= 258047 is '~'
// followed by three bytes carrying 18 bits, big-endian. Larger graphs are
// out of scope here (blow-ups travel as edge lists instead).

#include <string>
#include <string_view>

#include "purple/graph.hpp"

namespace purple {

inline constexpr int kGraph6MaxVertices = 258047;

inline std::string graph6_encode(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw Error("graph6: n=" + std::to_string(n) + " exceeds format limit " +
                    std::to_string(kGraph6MaxVertices));
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nbits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            acc = (acc << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    }
    if (nbits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph graph6_decode(std::string_view line) {
    if (line.empty()) throw Error("graph6: empty record");
    for (char c : line)
        if (c < 63 || c > 126)
            throw Error("graph6: character out of range (byte " +
                        std::to_string(static_cast<int>(static_cast<unsigned char>(c))) + ")");
    std::size_t pos = 0;
    long long n;
    if (line[0] == '~') {
        if (line.size() >= 2 && line[1] == '~')
            throw Error("graph6: 8-byte size header not supported");
        if (line.size() < 4) throw Error("graph6: truncated size header");
        n = (static_cast<long long>(line[1] - 63) << 12) |
            (static_cast<long long>(line[2] - 63) << 6) | static_cast<long long>(line[3] - 63);
        if (n <= 62) throw Error("graph6: non-canonical long size header");
        pos = 4;
    } else {
        n = line[0] - 63;
        pos = 1;
    }
    if (n > kGraph6MaxVertices) throw Error("graph6: header exceeds format limit");
    const long long bits = n * (n - 1) / 2;
    const std::size_t payload = static_cast<std::size_t>((bits + 5) / 6);
    if (line.size() - pos < payload) throw Error("graph6: truncated bit payload");
    if (line.size() - pos > payload) throw Error("graph6: trailing garbage after payload");
    EdgeList edges;
    long long bit = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row, ++bit) {
            int ch = line[pos + static_cast<std::size_t>(bit / 6)] - 63;
            if ((ch >> (5 - bit % 6)) & 1) edges.push_back(Edge(row, col));
        }
    }
    // Padding bits must be zero.
    for (long long b = bits; b < static_cast<long long>(payload) * 6; ++b) {
        int ch = line[pos + static_cast<std::size_t>(b / 6)] - 63;
        if ((ch >> (5 - b % 6)) & 1) throw Error("graph6: nonzero padding bits");
    }
    return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace purple
