#ifndef EXTREMAL_IO_HPP
#define EXTREMAL_IO_HPP

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "extremal/graph.hpp"

namespace extremal {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// graph6 encoding for n <= 62: size byte n+63, then the upper-triangle
/// bits in column order (0,1),(0,2),(1,2),(0,3),... packed big-endian into
/// 6-bit groups, each emitted as value+63.
inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62)
        throw std::invalid_argument("encode_graph6: graphs with more than 62 vertices are unsupported");
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int acc = 0, nbits = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++nbits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                nbits = 0;
            }
        }
    if (nbits != 0) out.push_back(static_cast<char>(63 + (acc << (6 - nbits))));
    return out;
}

inline Graph decode_graph6(std::string_view s) {
    if (s.empty()) throw ParseError("graph6: empty input");
    const unsigned char size_byte = static_cast<unsigned char>(s[0]);
    if (size_byte == 126)
        throw ParseError("graph6: multi-byte sizes (n > 62) are unsupported");
    if (size_byte < 63 || size_byte > 125)
        throw ParseError("graph6: invalid size byte");
    const int n = size_byte - 63;
    const int nbits = n * (n - 1) / 2;
    const std::size_t expected_len = 1 + static_cast<std::size_t>((nbits + 5) / 6);
    if (s.size() != expected_len)
        throw ParseError("graph6: wrong input length for " + std::to_string(n) + " vertices");

    std::vector<std::pair<int, int>> edges;
    std::size_t byte_idx = 1;
    int bit_idx = 0;  // next bit within the current 6-bit group, MSB first
    int value = 0;
    auto next_bit = [&]() {
        if (bit_idx == 0) {
            const unsigned char c = static_cast<unsigned char>(s[byte_idx++]);
            if (c < 63 || c > 126) throw ParseError("graph6: byte outside 63..126");
            value = c - 63;
        }
        const int bit = (value >> (5 - bit_idx)) & 1;
        bit_idx = (bit_idx + 1) % 6;
        return bit;
    };
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (next_bit()) edges.emplace_back(i, j);
    while (bit_idx != 0)
        if (next_bit()) throw ParseError("graph6: nonzero padding bits");
    return Graph(n, edges);
}

/// Edge-list text: first line "n m", then one "i j" line per edge with
/// 1-based labels and i < j; lines starting with '#' are ignored.
inline std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    const auto edges = g.edges();
    os << g.vertex_count() << ' ' << edges.size() << '\n';
    for (auto [i, j] : edges) os << i + 1 << ' ' << j + 1 << '\n';
    return os.str();
}

inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::string> lines;
    {
        std::string cur;
        for (char c : text) {
            if (c == '\n') {
                lines.push_back(cur);
                cur.clear();
            } else {
                cur.push_back(c);
            }
        }
        if (!cur.empty()) lines.push_back(cur);
    }
    auto significant = [](const std::string& line) {
        const auto pos = line.find_first_not_of(" \t\r");
        return pos != std::string::npos && line[pos] != '#';
    };

    int n = -1;
    long m = -1;
    std::vector<std::pair<int, int>> edges;
    bool seen_mask = false;
    std::vector<bool> seen;  // duplicate detection, indexed by i*n+j
    for (const auto& line : lines) {
        if (!significant(line)) continue;
        std::istringstream is(line);
        if (n < 0) {
            if (!(is >> n >> m) || n < 0 || m < 0)
                throw ParseError("edge list: expected header line \"n m\"");
            if (n > kMaxVertices) throw ParseError("edge list: vertex count exceeds 64");
            std::string rest;
            if (is >> rest) throw ParseError("edge list: trailing tokens on header line");
            continue;
        }
        int i = 0, j = 0;
        if (!(is >> i >> j)) throw ParseError("edge list: expected edge line \"i j\"");
        std::string rest;
        if (is >> rest) throw ParseError("edge list: trailing tokens on edge line");
        if (i < 1 || i > n || j < 1 || j > n)
            throw ParseError("edge list: vertex label out of range 1..n");
        if (i == j) throw ParseError("edge list: loops are not allowed");
        if (i > j) std::swap(i, j);
        if (!seen_mask) {
            seen.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), false);
            seen_mask = true;
        }
        const std::size_t key =
            static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j - 1);
        if (seen[key]) throw ParseError("edge list: duplicate edge");
        seen[key] = true;
        edges.emplace_back(i - 1, j - 1);
    }
    if (n < 0) throw ParseError("edge list: missing header line");
    if (static_cast<long>(edges.size()) != m)
        throw ParseError("edge list: edge count does not match header");
    return Graph(n, edges);
}

}  // namespace extremal

#endif  // EXTREMAL_IO_HPP
