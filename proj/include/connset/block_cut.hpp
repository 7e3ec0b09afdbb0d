#pragma once

#include <algorithm>
#include <vector>

#include "connset/graph.hpp"

namespace connset {

// Block-cut tree of a connected graph: blocks (maximal 2-connected
// components, single edges included) and cut vertices, with the incidence
// "cut vertex c is adjacent to block B iff c lies in B". A block is red iff
// its order is at least 3; a cut vertex is blue iff its tree degree is at
// least 3; a block is a leaf iff it contains at most one cut vertex (a
// single-block graph's only block counts as a leaf).
struct BlockCutTree {
    std::vector<VertexSet> blocks;         // each sorted; list ordered by (min member, size, lex)
    std::vector<int> cut_vertices;         // ascending
    std::vector<std::vector<int>> block_cuts;  // per block: cut vertices lying in it (ascending)
    std::vector<std::vector<int>> cut_blocks;  // per cut vertex: indices of incident blocks
    std::vector<bool> block_red;
    std::vector<bool> cut_blue;
    std::vector<bool> block_leaf;

    bool is_cut_vertex(int v) const {
        return std::binary_search(cut_vertices.begin(), cut_vertices.end(), v);
    }
};

inline BlockCutTree block_cut_tree(const Graph& g) {
    if (!is_connected(g)) fail(errc::disconnected, "block-cut tree requires a connected graph");
    const int n = g.order();
    BlockCutTree t;

    if (n == 1) {
        t.blocks = {{0}};
        t.block_cuts = {{}};
        t.block_red = {false};
        t.block_leaf = {true};
        return t;
    }

    // Iterative lowpoint DFS with an edge stack; a block is popped whenever a
    // child subtree cannot reach above its attachment vertex.
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next_child(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<int> dfs_stack;
    std::vector<VertexSet> blocks;

    int timer = 0;
    disc[0] = low[0] = timer++;
    dfs_stack.push_back(0);
    while (!dfs_stack.empty()) {
        int u = dfs_stack.back();
        const auto& nbrs = g.neighbors(u);
        if (next_child[static_cast<std::size_t>(u)] < nbrs.size()) {
            int w = nbrs[next_child[static_cast<std::size_t>(u)]++];
            if (disc[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = u;
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                edge_stack.emplace_back(u, w);
                dfs_stack.push_back(w);
            } else if (w != parent[static_cast<std::size_t>(u)] &&
                       disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(u)]) {
                edge_stack.emplace_back(u, w);
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            dfs_stack.pop_back();
            if (dfs_stack.empty()) break;
            int p = dfs_stack.back();
            low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
            if (low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)]) {
                VertexSet members;
                while (true) {
                    auto e = edge_stack.back();
                    edge_stack.pop_back();
                    members.push_back(e.first);
                    members.push_back(e.second);
                    if (e.first == p && e.second == u) break;
                }
                std::sort(members.begin(), members.end());
                members.erase(std::unique(members.begin(), members.end()), members.end());
                blocks.push_back(std::move(members));
            }
        }
    }

    std::sort(blocks.begin(), blocks.end(), [](const VertexSet& a, const VertexSet& b) {
        if (a.front() != b.front()) return a.front() < b.front();
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    t.blocks = std::move(blocks);

    // Cut vertices are exactly the vertices lying in two or more blocks.
    std::vector<int> block_count(static_cast<std::size_t>(n), 0);
    for (const auto& b : t.blocks)
        for (int v : b) ++block_count[static_cast<std::size_t>(v)];
    for (int v = 0; v < n; ++v)
        if (block_count[static_cast<std::size_t>(v)] >= 2) t.cut_vertices.push_back(v);

    t.block_cuts.resize(t.blocks.size());
    t.cut_blocks.resize(t.cut_vertices.size());
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
        for (int v : t.blocks[bi]) {
            auto it = std::lower_bound(t.cut_vertices.begin(), t.cut_vertices.end(), v);
            if (it != t.cut_vertices.end() && *it == v) {
                t.block_cuts[bi].push_back(v);
                t.cut_blocks[static_cast<std::size_t>(it - t.cut_vertices.begin())].push_back(static_cast<int>(bi));
            }
        }
    }

    t.block_red.resize(t.blocks.size());
    t.block_leaf.resize(t.blocks.size());
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
        t.block_red[bi] = t.blocks[bi].size() >= 3;
        t.block_leaf[bi] = t.block_cuts[bi].size() <= 1;
    }
    t.cut_blue.resize(t.cut_vertices.size());
    for (std::size_t ci = 0; ci < t.cut_vertices.size(); ++ci)
        t.cut_blue[ci] = t.cut_blocks[ci].size() >= 3;

    return t;
}

enum class NearTreeClass { tree, one_red_k3, leaf_blocks_34, not_near_tree };

inline const char* near_tree_class_name(NearTreeClass c) {
    switch (c) {
        case NearTreeClass::tree: return "tree";
        case NearTreeClass::one_red_k3: return "one_red_k3";
        case NearTreeClass::leaf_blocks_34: return "leaf_blocks_34";
        case NearTreeClass::not_near_tree: return "not_near_tree";
    }
    return "unknown";
}

// Classification precedence: tree, then exactly-one-red-triangle, then the
// literal "no interior red block and every leaf block has order <= 4".
inline NearTreeClass classify_near_tree(const BlockCutTree& t) {
    int red_count = 0;
    std::size_t red_index = 0;
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
        if (t.block_red[bi]) {
            ++red_count;
            red_index = bi;
        }
    }
    if (red_count == 0) return NearTreeClass::tree;
    if (red_count == 1 && t.blocks[red_index].size() == 3) return NearTreeClass::one_red_k3;
    bool ok = true;
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
        if (t.block_leaf[bi]) {
            if (t.blocks[bi].size() > 4) ok = false;
        } else {
            if (t.block_red[bi]) ok = false;
        }
    }
    return ok ? NearTreeClass::leaf_blocks_34 : NearTreeClass::not_near_tree;
}

inline NearTreeClass classify_near_tree(const Graph& g) { return classify_near_tree(block_cut_tree(g)); }

}  // namespace connset
