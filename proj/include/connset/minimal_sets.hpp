#pragma once

#include <algorithm>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "connset/check_result.hpp"
#include "connset/enumerate.hpp"

namespace connset {

// One connected set U of G-x together with its closure data: the member
// v_U nearest to the root x in the shortest-distance spanning tree (ties by
// smallest id), the tree path p_U from v_U to x, and Q = U ∪ p_U.
struct MinimalEntry {
    std::uint64_t set_mask = 0;      // U, over original vertex ids
    int anchor = -1;                 // v_U
    std::vector<int> path;           // v_U, ..., x along tree parents
    int path_len = 0;                // edges, == depth(v_U)
    std::uint64_t closure_mask = 0;  // Q = U ∪ p_U
    bool minimal = false;
};

// The closure classes W(Q) each keep one representative: the entry whose
// path is containment-maximal (equivalently the least element of the linear
// order U ⪯ U' iff p_{U'} ⊆ p_U). av is the mean path length over those
// representatives.
struct MinimalFamily {
    int root = -1;
    SpanningTree tree;
    std::vector<MinimalEntry> entries;          // ordered by set_mask
    std::vector<std::size_t> minimal_indices;   // ascending into entries
    Rat av;
};

inline MinimalFamily minimal_family(const Graph& g, int x, WorkBudget& budget) {
    g.check_vertex(x);
    if (!is_connected(g)) fail(errc::disconnected, "minimal family requires a connected graph");
    const int n = g.order();
    if (n > 64) fail(errc::budget_exceeded, "minimal family materialization requires order <= 64");

    MinimalFamily mf;
    mf.root = x;
    mf.tree = bfs_spanning_tree(g, x);
    mf.av = 0;
    if (n == 1) return mf;  // no sets avoid x; av stays 0 by convention

    VertexSet others;
    for (int v = 0; v < n; ++v)
        if (v != x) others.push_back(v);
    const Graph without_x = induced_subgraph(g, others);
    std::vector<std::uint64_t> sets = connected_sets_list(without_x, budget);
    // back to original ids
    for (auto& mask : sets) {
        std::uint64_t global = 0;
        std::uint64_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            global |= std::uint64_t(1) << others[static_cast<std::size_t>(v)];
        }
        mask = global;
    }
    std::sort(sets.begin(), sets.end());

    mf.entries.reserve(sets.size());
    for (std::uint64_t mask : sets) {
        budget.charge();
        MinimalEntry e;
        e.set_mask = mask;
        int best_depth = n + 1;
        std::uint64_t m = mask;
        while (m) {
            int v = std::countr_zero(m);
            m &= m - 1;
            if (mf.tree.depth[static_cast<std::size_t>(v)] < best_depth) {
                best_depth = mf.tree.depth[static_cast<std::size_t>(v)];
                e.anchor = v;  // ascending scan: smallest id at the minimum depth wins
            }
        }
        e.path_len = best_depth;
        for (int v = e.anchor; v != -1; v = mf.tree.parent[static_cast<std::size_t>(v)]) {
            e.path.push_back(v);
            e.closure_mask |= std::uint64_t(1) << v;
        }
        e.closure_mask |= mask;
        mf.entries.push_back(std::move(e));
    }

    std::unordered_map<std::uint64_t, std::size_t> best;  // Q -> entry index of current representative
    for (std::size_t i = 0; i < mf.entries.size(); ++i) {
        auto [it, inserted] = best.try_emplace(mf.entries[i].closure_mask, i);
        if (!inserted) {
            const MinimalEntry& cur = mf.entries[it->second];
            const MinimalEntry& cand = mf.entries[i];
            if (cand.path_len > cur.path_len ||
                (cand.path_len == cur.path_len && cand.set_mask < cur.set_mask))
                it->second = i;
        }
    }
    for (const auto& kv : best) mf.entries[kv.second].minimal = true;
    for (std::size_t i = 0; i < mf.entries.size(); ++i)
        if (mf.entries[i].minimal) mf.minimal_indices.push_back(i);

    Int path_sum = 0;
    for (std::size_t i : mf.minimal_indices) path_sum += mf.entries[i].path_len;
    if (!mf.minimal_indices.empty())
        mf.av = Rat(path_sum, Int(static_cast<std::uint64_t>(mf.minimal_indices.size())));
    return mf;
}

inline MinimalFamily minimal_family(const Graph& g, int x) {
    WorkBudget budget;
    return minimal_family(g, x, budget);
}

// Verifies, in exact arithmetic, av(G,x)·(N(G,x) - 1) ≥ N(G-x) together
// with the construction identities sum|p_U| = N(G-x) over the minimals and
// N(G,x) ≥ |M| + 1.
inline CheckResult check_av_inequality(const Graph& g, int x, WorkBudget& budget) {
    const MinimalFamily mf = minimal_family(g, x, budget);
    const auto [rooted_n, rooted_s] = rooted_count(g, x, budget);
    (void)rooted_s;

    VertexSet others;
    for (int v = 0; v < g.order(); ++v)
        if (v != x) others.push_back(v);
    Int without_count = 0;
    if (!others.empty()) {
        const Graph without_x = induced_subgraph(g, others);
        for (const auto& comp : connected_components(without_x)) {
            auto [ni, si] = detail::stats_connected_impl(induced_subgraph(without_x, comp), budget);
            (void)si;
            without_count += ni;
        }
    }

    Int path_sum = 0;
    for (std::size_t i : mf.minimal_indices) path_sum += mf.entries[i].path_len;
    const Int family_size = Int(static_cast<std::uint64_t>(mf.minimal_indices.size()));

    const bool inequality = mf.av * (rooted_n - 1) >= Rat(without_count);
    const bool sum_identity = path_sum == without_count;
    const bool size_bound = rooted_n >= family_size + 1;

    CheckResult r;
    r.statement = "thm_av";
    r.param = "x=" + std::to_string(x);
    r.status = (inequality && sum_identity && size_bound) ? CheckStatus::pass : CheckStatus::fail;
    r.witness["av"] = to_fraction(mf.av);
    r.witness["rooted_count"] = to_decimal(rooted_n);
    r.witness["count_without_x"] = to_decimal(without_count);
    r.witness["minimals"] = to_decimal(family_size);
    r.witness["equality"] = (mf.av * (rooted_n - 1) == Rat(without_count));
    if (!inequality) r.witness["violated"] = "av*(N(G,x)-1) < N(G-x)";
    if (!sum_identity) r.witness["violated_sum"] = to_decimal(path_sum);
    if (!size_bound) r.witness["violated_size_bound"] = true;
    return r;
}

inline CheckResult check_av_inequality(const Graph& g, int x) {
    WorkBudget budget;
    return check_av_inequality(g, x, budget);
}

// Fills the av(G'_i, x)/n_i ratios of an existing decomposition.
inline void fill_av_ratios(const Graph& g, CutDecomposition& d, WorkBudget& budget) {
    for (auto& c : d.components) {
        VertexSet with_x = c.members;
        with_x.insert(std::lower_bound(with_x.begin(), with_x.end(), d.cut_vertex), d.cut_vertex);
        const Graph gxi = induced_subgraph(g, with_x);
        const int x_local = static_cast<int>(std::lower_bound(with_x.begin(), with_x.end(), d.cut_vertex) - with_x.begin());
        const MinimalFamily mf = minimal_family(gxi, x_local, budget);
        c.av_ratio = mf.av / Int(c.order);
    }
}

}  // namespace connset
