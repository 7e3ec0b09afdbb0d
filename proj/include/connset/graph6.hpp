#pragma once

#include <string>
#include <string_view>

#include "connset/graph.hpp"

namespace connset {

inline constexpr std::string_view graph6_header = ">>graph6<<";

// Decodes one graph in graph6 format. `text` is a single record without the
// trailing newline; an optional ">>graph6<<" prefix is skipped. Decoding is
// bit-exact: the size field is one byte n+63 for n <= 62, otherwise 126
// followed by three bytes carrying n in 18 bits big-endian (6 bits each,
// each +63); the body packs the upper-triangle bits x(i,j), i < j, column by
// column, big-endian into 6-bit groups, each +63, zero-padded.
inline Graph parse_graph6(std::string_view text) {
    if (text.substr(0, graph6_header.size()) == graph6_header) text.remove_prefix(graph6_header.size());
    if (text.empty()) fail(errc::truncated_input, "empty graph6 record");

    std::size_t pos = 0;
    auto next_byte = [&]() -> int {
        if (pos >= text.size()) fail(errc::truncated_input, "graph6 record ends inside the size field");
        int b = static_cast<unsigned char>(text[pos++]);
        if (b < 63 || b > 126) fail(errc::byte_out_of_range, "byte value " + std::to_string(b) + " at offset " + std::to_string(pos - 1));
        return b;
    };

    long long n = 0;
    int b0 = next_byte();
    if (b0 < 126) {
        n = b0 - 63;
    } else {
        int b1 = next_byte();
        if (b1 == 126) fail(errc::graph_too_large, "graph6 orders >= 2^18 are not supported");
        int b2 = next_byte();
        int b3 = next_byte();
        n = (static_cast<long long>(b1 - 63) << 12) | ((b2 - 63) << 6) | (b3 - 63);
    }
    if (n < 1) fail(errc::malformed, "graph6 record encodes an empty graph");
    if (n > Graph::max_order) fail(errc::graph_too_large, "graph6 order " + std::to_string(n) + " exceeds " + std::to_string(Graph::max_order));

    const long long bits = n * (n - 1) / 2;
    const long long body = (bits + 5) / 6;
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) < body)
        fail(errc::truncated_input, "graph6 body shorter than " + std::to_string(body) + " bytes");
    if (static_cast<long long>(text.size()) - static_cast<long long>(pos) > body)
        fail(errc::trailing_garbage, "extra bytes after graph6 body");

    Graph g(static_cast<int>(n));
    long long bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            int byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(bit / 6)]);
            if (byte < 63 || byte > 126)
                fail(errc::byte_out_of_range, "byte value " + std::to_string(byte) + " in body");
            if ((byte - 63) >> (5 - bit % 6) & 1) g.add_edge(i, j);
        }
    }
    // Padding bits of the final group must be zero.
    for (; bit < body * 6; ++bit) {
        int byte = static_cast<unsigned char>(text[pos + static_cast<std::size_t>(bit / 6)]);
        if (byte < 63 || byte > 126)
            fail(errc::byte_out_of_range, "byte value " + std::to_string(byte) + " in body");
        if ((byte - 63) >> (5 - bit % 6) & 1) fail(errc::trailing_garbage, "nonzero padding bits");
    }
    return g;
}

inline std::string encode_graph6(const Graph& g) {
    const int n = g.order();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(static_cast<char>(126));
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

// Edge-list format: first line the vertex count, then one "u v" pair per
// line. Blank lines are ignored.
inline Graph parse_edge_list(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        if (end == text.size()) break;
        start = end + 1;
    }
    if (lines.empty()) fail(errc::malformed, "edge list is empty");

    auto parse_int = [](std::string_view tok, long long& out) -> bool {
        if (tok.empty()) return false;
        long long v = 0;
        for (char c : tok) {
            if (c < '0' || c > '9') return false;
            v = v * 10 + (c - '0');
            if (v > Graph::max_order * 2LL) return false;
        }
        out = v;
        return true;
    };
    auto split = [](std::string_view line) {
        std::vector<std::string_view> toks;
        std::size_t i = 0;
        while (i < line.size()) {
            while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
            std::size_t j = i;
            while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
            if (j > i) toks.push_back(line.substr(i, j - i));
            i = j;
        }
        return toks;
    };

    auto head = split(lines[0]);
    long long n = 0;
    if (head.size() != 1 || !parse_int(head[0], n)) fail(errc::malformed, "first line must be the vertex count");
    if (n < 1) fail(errc::malformed, "vertex count must be at least 1");
    if (n > Graph::max_order) fail(errc::graph_too_large, "vertex count exceeds " + std::to_string(Graph::max_order));

    Graph g(static_cast<int>(n));
    for (std::size_t k = 1; k < lines.size(); ++k) {
        auto toks = split(lines[k]);
        long long u = 0, v = 0;
        if (toks.size() != 2 || !parse_int(toks[0], u) || !parse_int(toks[1], v))
            fail(errc::malformed, "expected \"u v\" on line " + std::to_string(k + 1));
        if (u >= n || v >= n)
            fail(errc::vertex_out_of_range, "vertex id beyond count on line " + std::to_string(k + 1));
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    return g;
}

}  // namespace connset
