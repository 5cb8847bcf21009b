#include "spx/graph6.hpp"

#include <algorithm>

#include "spx/error.hpp"

namespace spx {

std::string to_graph6(const Graph& g) {
    const int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    int group = 0;
    int filled = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            group = (group << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((group << (6 - filled)) + 63));
    return out;
}

Graph from_graph6(std::string_view text) {
    auto sextet = [&](std::size_t pos) {
        if (pos >= text.size()) throw ParseError("graph6: truncated at byte " + std::to_string(pos), pos);
        const int c = static_cast<unsigned char>(text[pos]);
        if (c < 63 || c > 126) {
            throw ParseError("graph6: invalid byte " + std::to_string(c) + " at offset " + std::to_string(pos), pos);
        }
        return c - 63;
    };

    if (text.empty()) throw ParseError("graph6: empty string at byte 0", 0);
    std::size_t pos = 0;
    int n = 0;
    if (text[0] == '~') {
        if (text.size() > 1 && text[1] == '~') throw ParseError("graph6: order exceeds 64 at byte 1", 1);
        n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
        pos = 4;
    } else {
        n = sextet(0);
        pos = 1;
    }
    if (n > kMaxVertices) {
        throw Error(ErrorKind::unsupported_size, "graph6: order " + std::to_string(n) + " exceeds 64");
    }

    for (std::size_t i = pos; i < text.size(); ++i) sextet(i);  // report a bad byte before a bad length
    const std::size_t bits = static_cast<std::size_t>(n) * static_cast<std::size_t>(n > 0 ? n - 1 : 0) / 2;
    const std::size_t expected = pos + (bits + 5) / 6;
    if (text.size() != expected) {
        const std::size_t at = std::min(text.size(), expected);
        throw ParseError("graph6: expected " + std::to_string(expected) + " bytes for order " + std::to_string(n) +
                             ", got " + std::to_string(text.size()) + " (byte " + std::to_string(at) + ")",
                         at);
    }

    std::vector<VertexSet> rows(static_cast<std::size_t>(n), 0);
    std::size_t k = 0;
    int group = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if (k % 6 == 0) group = sextet(pos + k / 6);
            if ((group >> (5 - k % 6)) & 1) {
                rows[i] |= vertex_bit(j);
                rows[j] |= vertex_bit(i);
            }
        }
    }
    return Graph::from_rows(n, std::move(rows));
}

}  // namespace spx
