#pragma once

// Small graph builders and independent brute-force oracles shared by the
// test binaries. The oracles here iterate raw subsets on purpose: they must
// not share code with the engine paths they validate.

#include <bit>
#include <cstdint>
#include <vector>

#include "connset/enumerate.hpp"
#include "connset/graph.hpp"

namespace testsupport {

inline connset::Graph path_graph(int n) {
    connset::Graph g(n);
    for (int v = 1; v < n; ++v) g.add_edge(v - 1, v);
    return g;
}

inline connset::Graph cycle_graph(int n) {
    connset::Graph g = path_graph(n);
    g.add_edge(n - 1, 0);
    return g;
}

inline connset::Graph complete_graph(int n) {
    connset::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

inline connset::Graph star_graph(int leaves) {
    connset::Graph g(leaves + 1);
    for (int v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

// Two complete graphs of order k sharing vertex 0.
inline connset::Graph bowtie(int k) {
    connset::Graph g(2 * k - 1);
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) g.add_edge(u, v);
    std::vector<int> right{0};
    for (int v = k; v < 2 * k - 1; ++v) right.push_back(v);
    for (std::size_t i = 0; i < right.size(); ++i)
        for (std::size_t j = i + 1; j < right.size(); ++j) g.add_edge(right[i], right[j]);
    return g;
}

// Chain of `blocks` complete graphs of order k, consecutive blocks sharing
// one vertex.
inline connset::Graph complete_chain(int blocks, int k) {
    const int n = blocks * (k - 1) + 1;
    connset::Graph g(n);
    for (int b = 0; b < blocks; ++b) {
        const int base = b * (k - 1);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) g.add_edge(base + i, base + j);
    }
    return g;
}

inline bool mask_connected(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    if (mask == 0) return false;
    std::uint64_t comp = std::uint64_t(1) << std::countr_zero(mask);
    std::uint64_t frontier = comp;
    while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t f = frontier;
        while (f) {
            int u = std::countr_zero(f);
            f &= f - 1;
            next |= adj[static_cast<std::size_t>(u)];
        }
        frontier = next & mask & ~comp;
        comp |= frontier;
    }
    return comp == mask;
}

// N(G,x) by raw subset iteration.
inline connset::Int brute_rooted_count(const connset::Graph& g, int x) {
    const auto adj = connset::adjacency_masks(g);
    const int n = g.order();
    connset::Int count = 0;
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;
    const std::uint64_t xbit = std::uint64_t(1) << x;
    for (std::uint64_t mask = 1; mask <= all; ++mask)
        if ((mask & xbit) && mask_connected(adj, mask)) ++count;
    return count;
}

// (N(G,H), S(G,H)) by raw subset iteration.
inline std::pair<connset::Int, connset::Int> brute_rooted_stats(const connset::Graph& g, std::uint64_t h_mask) {
    const auto adj = connset::adjacency_masks(g);
    const int n = g.order();
    connset::Int count = 0, total = 0;
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;
    for (std::uint64_t mask = 1; mask <= all; ++mask)
        if ((mask & h_mask) == h_mask && mask_connected(adj, mask)) {
            ++count;
            total += std::popcount(mask);
        }
    return {count, total};
}

// Induced-P4 scan; independent of the union/join recursion.
inline bool has_induced_p4(const connset::Graph& g) {
    const int n = g.order();
    std::vector<int> q(4);
    for (q[0] = 0; q[0] < n; ++q[0])
        for (q[1] = 0; q[1] < n; ++q[1])
            for (q[2] = 0; q[2] < n; ++q[2])
                for (q[3] = 0; q[3] < n; ++q[3]) {
                    if (q[0] >= q[3]) continue;  // path reversal symmetry
                    if (q[0] == q[1] || q[0] == q[2] || q[1] == q[2] || q[1] == q[3] || q[2] == q[3]) continue;
                    if (g.has_edge(q[0], q[1]) && g.has_edge(q[1], q[2]) && g.has_edge(q[2], q[3]) &&
                        !g.has_edge(q[0], q[2]) && !g.has_edge(q[0], q[3]) && !g.has_edge(q[1], q[3]))
                        return true;
                }
    return false;
}

}  // namespace testsupport
