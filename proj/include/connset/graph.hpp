#pragma once

#include <algorithm>
#include <cstdint>
#include <queue>
#include <utility>
#include <vector>

#include "connset/core.hpp"

namespace connset {

using VertexSet = std::vector<int>;  // sorted ascending vertex ids

// Simple undirected labeled graph on vertices 0..n-1. Adjacency lists are
// kept sorted, so every traversal below is deterministic.
class Graph {
  public:
    static constexpr int max_order = 16384;

    explicit Graph(int n) : n_(n) {
        if (n < 1) fail(errc::invalid_params, "graph order must be at least 1");
        if (n > max_order) fail(errc::graph_too_large, "graph order exceeds " + std::to_string(max_order));
        adj_.resize(static_cast<std::size_t>(n));
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge(u, v);
        return g;
    }

    void add_edge(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) fail(errc::self_loop, "self-loop at vertex " + std::to_string(u));
        auto& au = adj_[static_cast<std::size_t>(u)];
        auto it = std::lower_bound(au.begin(), au.end(), v);
        if (it != au.end() && *it == v)
            fail(errc::duplicate_edge, "duplicate edge " + std::to_string(u) + " " + std::to_string(v));
        au.insert(it, v);
        auto& av = adj_[static_cast<std::size_t>(v)];
        av.insert(std::lower_bound(av.begin(), av.end(), u), u);
        ++m_;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& au = adj_[static_cast<std::size_t>(u)];
        return std::binary_search(au.begin(), au.end(), v);
    }

    int order() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    // Edges as (u, v) with u < v, lexicographically ordered.
    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<std::size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return n_ == other.n_ && adj_ == other.adj_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            fail(errc::vertex_out_of_range, "vertex " + std::to_string(v) + " out of range for order " + std::to_string(n_));
    }

  private:
    int n_;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// Maximal connected sets of the non-removed vertices, ordered by smallest
// member; members ascending within each component.
inline std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& removed = {}) {
    const int n = g.order();
    std::vector<char> blocked(static_cast<std::size_t>(n), 0);
    for (int v : removed) {
        g.check_vertex(v);
        blocked[static_cast<std::size_t>(v)] = 1;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<VertexSet> comps;
    for (int s = 0; s < n; ++s) {
        if (blocked[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        VertexSet comp;
        std::vector<int> stack{s};
        seen[static_cast<std::size_t>(s)] = 1;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int w : g.neighbors(u)) {
                if (blocked[static_cast<std::size_t>(w)] || seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = 1;
                stack.push_back(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() == 1; }

struct SpanningTree {
    int root = 0;
    std::vector<int> parent;  // -1 for the root
    std::vector<int> depth;   // graph distance from the root
};

// Shortest-distance spanning tree. Tie-break: parent(v) is the smallest-id
// neighbor at depth(v)-1, which fixes the tree uniquely.
inline SpanningTree bfs_spanning_tree(const Graph& g, int root) {
    g.check_vertex(root);
    const int n = g.order();
    SpanningTree t;
    t.root = root;
    t.parent.assign(static_cast<std::size_t>(n), -1);
    t.depth.assign(static_cast<std::size_t>(n), -1);
    std::queue<int> q;
    t.depth[static_cast<std::size_t>(root)] = 0;
    q.push(root);
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : g.neighbors(u)) {
            if (t.depth[static_cast<std::size_t>(w)] != -1) continue;
            t.depth[static_cast<std::size_t>(w)] = t.depth[static_cast<std::size_t>(u)] + 1;
            q.push(w);
        }
    }
    for (int v = 0; v < n; ++v) {
        if (v == root) continue;
        if (t.depth[static_cast<std::size_t>(v)] == -1) fail(errc::disconnected, "graph is not connected");
        for (int w : g.neighbors(v)) {
            if (t.depth[static_cast<std::size_t>(w)] == t.depth[static_cast<std::size_t>(v)] - 1) {
                t.parent[static_cast<std::size_t>(v)] = w;  // smallest id: neighbors are sorted
                break;
            }
        }
    }
    return t;
}

// Induced subgraph on `vertices` (sorted ascending), relabeled 0..k-1.
inline Graph induced_subgraph(const Graph& g, const VertexSet& vertices) {
    const int k = static_cast<int>(vertices.size());
    Graph h(k);
    for (int i = 0; i < k; ++i) {
        const int u = vertices[static_cast<std::size_t>(i)];
        g.check_vertex(u);
        for (int w : g.neighbors(u)) {
            if (w <= u) continue;
            const auto it = std::lower_bound(vertices.begin(), vertices.end(), w);
            if (it != vertices.end() && *it == w)
                h.add_edge(i, static_cast<int>(it - vertices.begin()));
        }
    }
    return h;
}

inline Graph complement(const Graph& g) {
    const int n = g.order();
    Graph h(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) h.add_edge(u, v);
    return h;
}

// Per-vertex neighborhood bitmasks; only valid for n <= 64.
inline std::vector<std::uint64_t> adjacency_masks(const Graph& g) {
    const int n = g.order();
    if (n > 64) fail(errc::budget_exceeded, "bitmask algorithms require order <= 64");
    std::vector<std::uint64_t> masks(static_cast<std::size_t>(n), 0);
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) masks[static_cast<std::size_t>(u)] |= std::uint64_t(1) << v;
    return masks;
}

inline bool is_tree(const Graph& g) { return g.edge_count() == g.order() - 1 && is_connected(g); }

inline bool is_path_graph(const Graph& g) {
    if (!is_tree(g)) return false;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) > 2) return false;
    return true;
}

inline bool is_complete(const Graph& g) {
    return 2 * g.edge_count() == g.order() * (g.order() - 1);
}

inline int min_degree(const Graph& g) {
    int d = g.order();
    for (int v = 0; v < g.order(); ++v) d = std::min(d, g.degree(v));
    return d;
}

}  // namespace connset
