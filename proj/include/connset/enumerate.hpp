#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "connset/block_cut.hpp"
#include "connset/graph.hpp"

namespace connset {

// Exact global statistics: N (count of nonempty connected vertex sets),
// S (sum of their sizes), A = S/N and D = A/n as reduced rationals.
struct ConnStats {
    int order = 0;
    Int count;
    Int total;
    Rat average;
    Rat density;
};

struct RootedStats {
    VertexSet root_set;
    Int count;
    Int total;
    Rat average;
};

struct CutComponent {
    VertexSet members;
    int order = 0;
    Int count;           // N of the bare component
    Int total;           // S of the bare component
    Int rooted_count;    // N of component + cut vertex, rooted there
    Int rooted_total;    // S of component + cut vertex, rooted there
    std::optional<Rat> av_ratio;  // av(component + x, x) / order; filled by minimal-sets
};

struct CutDecomposition {
    int cut_vertex = -1;
    std::vector<CutComponent> components;
};

namespace detail {

// (number of sets, sum of their sizes); the product rule pairs independent
// choices: sizes add across factors.
struct CountSum {
    Int count;
    Int total;
};

inline CountSum cs_mul(const CountSum& a, const CountSum& b) {
    return {a.count * b.count, a.total * b.count + a.count * b.total};
}

// Enumerates every connected superset of `inc` that avoids `ban`, each
// exactly once, by branching on the lowest frontier vertex. `include`
// produces the state after adding a vertex; `emit` sees each new state.
// One budget unit is charged per emitted set.
template <class State, class Include, class Emit>
void expand_connected(const std::vector<std::uint64_t>& adj, std::uint64_t inc, std::uint64_t ban,
                      std::uint64_t frontier, const State& st, WorkBudget& budget,
                      const Include& include, const Emit& emit) {
    std::uint64_t fr = frontier;
    std::uint64_t banned = ban;
    while (fr) {
        const int v = std::countr_zero(fr);
        const std::uint64_t bit = std::uint64_t(1) << v;
        fr ^= bit;
        budget.charge();
        State st2 = include(st, v);
        emit(st2);
        const std::uint64_t inc2 = inc | bit;
        const std::uint64_t fr2 = (fr | adj[static_cast<std::size_t>(v)]) & ~inc2 & ~banned;
        expand_connected(adj, inc2, banned, fr2, st2, budget, include, emit);
        banned |= bit;  // later branches exclude v
    }
}

inline Int int_from_u128(unsigned __int128 v) {
    Int hi = static_cast<std::uint64_t>(v >> 64);
    return (hi << 64) | static_cast<std::uint64_t>(v);
}

// All connected sets of a (possibly disconnected) graph with n <= 64,
// anchored at each vertex as its minimum member.
inline std::pair<Int, Int> count_all_connected_sets(const Graph& g, WorkBudget& budget) {
    const auto adj = adjacency_masks(g);
    const int n = g.order();
    unsigned __int128 count = 0, total = 0;
    for (int v = 0; v < n; ++v) {
        const std::uint64_t bit = std::uint64_t(1) << v;
        const std::uint64_t ban = bit - 1;  // sets whose minimum vertex is v
        budget.charge();
        ++count;
        ++total;
        expand_connected(
            adj, bit, ban, adj[static_cast<std::size_t>(v)] & ~ban & ~bit, 1, budget,
            [](int size, int) { return size + 1; },
            [&](int size) {
                ++count;
                total += static_cast<unsigned __int128>(size);
            });
    }
    return {int_from_u128(count), int_from_u128(total)};
}

inline ConnStats make_stats(int n, Int count, Int total) {
    ConnStats s;
    s.order = n;
    s.average = Rat(total, count);
    s.density = Rat(total, count * n);
    s.count = std::move(count);
    s.total = std::move(total);
    return s;
}

// Weighted anchored enumeration inside one block: sums, over the connected
// subsets W of the block that contain `anchor`, the product of the vertex
// weights of W minus the anchor (empty product = (1, 0)).
inline CountSum block_anchored_factor(const Graph& g, const VertexSet& members, int anchor,
                                      const std::vector<CountSum>& acc, WorkBudget& budget) {
    const int b = static_cast<int>(members.size());
    if (b > 64) fail(errc::budget_exceeded, "block of order " + std::to_string(b) + " exceeds the enumeration width");
    if (b == 2) {  // single edge: W is {anchor} or the whole block
        budget.charge(2);
        const int other = members[0] == anchor ? members[1] : members[0];
        const CountSum& w = acc[static_cast<std::size_t>(other)];
        return {w.count + 1, w.total};
    }
    std::vector<std::uint64_t> adj(static_cast<std::size_t>(b), 0);
    int anchor_local = -1;
    for (int i = 0; i < b; ++i) {
        if (members[static_cast<std::size_t>(i)] == anchor) anchor_local = i;
        for (int j = i + 1; j < b; ++j) {
            if (g.has_edge(members[static_cast<std::size_t>(i)], members[static_cast<std::size_t>(j)])) {
                adj[static_cast<std::size_t>(i)] |= std::uint64_t(1) << j;
                adj[static_cast<std::size_t>(j)] |= std::uint64_t(1) << i;
            }
        }
    }

    CountSum totals{1, 0};  // W = {anchor}
    budget.charge();
    const std::uint64_t bit = std::uint64_t(1) << anchor_local;
    expand_connected(
        adj, bit, 0, adj[static_cast<std::size_t>(anchor_local)] & ~bit, CountSum{1, 0}, budget,
        [&](const CountSum& st, int v) { return cs_mul(st, acc[static_cast<std::size_t>(members[static_cast<std::size_t>(v)])]); },
        [&](const CountSum& st) {
            totals.count += st.count;
            totals.total += st.total;
        });
    return totals;
}

}  // namespace detail

namespace detail {

// Tree specialization of the rooted product pass: every edge is its own
// block, so each child branch contributes the factor (N_child + 1, S_child).
inline std::pair<Int, Int> rooted_count_tree(const Graph& g, int x, WorkBudget& budget) {
    const int n = g.order();
    budget.charge(static_cast<std::uint64_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    parent[static_cast<std::size_t>(x)] = -1;
    order.push_back(x);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int u = order[head];
        for (int w : g.neighbors(u)) {
            if (parent[static_cast<std::size_t>(w)] != -2) continue;
            parent[static_cast<std::size_t>(w)] = u;
            order.push_back(w);
        }
    }
    if (static_cast<int>(order.size()) != n) fail(errc::disconnected, "rooted count requires a connected graph");
    std::vector<CountSum> acc(static_cast<std::size_t>(n), CountSum{1, 1});
    for (std::size_t i = order.size(); i-- > 1;) {
        const int v = order[i];
        CountSum& up = acc[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
        const CountSum& branch = acc[static_cast<std::size_t>(v)];
        up = cs_mul(up, CountSum{branch.count + 1, branch.total});
    }
    return {std::move(acc[static_cast<std::size_t>(x)].count), std::move(acc[static_cast<std::size_t>(x)].total)};
}

}  // namespace detail

// N(G,x) and S(G,x): count and total size of the connected sets containing
// vertex x. Runs a product-form pass over the block-cut tree rooted at x;
// only individual blocks are enumerated exponentially.
inline std::pair<Int, Int> rooted_count(const Graph& g, int x, WorkBudget& budget) {
    g.check_vertex(x);
    const int n = g.order();
    if (n == 1) return {Int(1), Int(1)};
    if (g.edge_count() == n - 1) return detail::rooted_count_tree(g, x, budget);
    const BlockCutTree t = block_cut_tree(g);

    std::vector<std::vector<int>> vblocks(static_cast<std::size_t>(n));
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi)
        for (int v : t.blocks[bi]) vblocks[static_cast<std::size_t>(v)].push_back(static_cast<int>(bi));

    // Orient the block-cut tree away from x; attach[b] is the vertex of
    // block b nearest to x.
    std::vector<int> order;
    std::vector<int> attach(t.blocks.size(), -1);
    std::vector<char> seen(t.blocks.size(), 0);
    std::queue<int> q;
    for (int b : vblocks[static_cast<std::size_t>(x)]) {
        attach[static_cast<std::size_t>(b)] = x;
        seen[static_cast<std::size_t>(b)] = 1;
        q.push(b);
    }
    while (!q.empty()) {
        int b = q.front();
        q.pop();
        order.push_back(b);
        for (int c : t.block_cuts[static_cast<std::size_t>(b)]) {
            if (c == attach[static_cast<std::size_t>(b)]) continue;
            for (int b2 : vblocks[static_cast<std::size_t>(c)]) {
                if (seen[static_cast<std::size_t>(b2)]) continue;
                seen[static_cast<std::size_t>(b2)] = 1;
                attach[static_cast<std::size_t>(b2)] = c;
                q.push(b2);
            }
        }
    }

    std::vector<detail::CountSum> acc(static_cast<std::size_t>(n), detail::CountSum{1, 1});
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        const int b = *it;
        const int a = attach[static_cast<std::size_t>(b)];
        detail::CountSum factor = detail::block_anchored_factor(g, t.blocks[static_cast<std::size_t>(b)], a, acc, budget);
        acc[static_cast<std::size_t>(a)] = detail::cs_mul(acc[static_cast<std::size_t>(a)], factor);
    }
    return {std::move(acc[static_cast<std::size_t>(x)].count), std::move(acc[static_cast<std::size_t>(x)].total)};
}

inline std::pair<Int, Int> rooted_count(const Graph& g, int x) {
    WorkBudget budget;
    return rooted_count(g, x, budget);
}

// Reference oracle: iterates every nonempty vertex subset and tests induced
// connectivity directly. Disconnected hosts are allowed. Kept deliberately
// independent of the decomposition engine it validates.
inline ConnStats stats_bruteforce(const Graph& g, WorkBudget& budget) {
    const int n = g.order();
    if (n > 63) fail(errc::budget_exceeded, "brute force requires order <= 63");
    const auto adj = adjacency_masks(g);
    const std::uint64_t all = (std::uint64_t(1) << n) - 1;
    unsigned __int128 count = 0, total = 0;
    for (std::uint64_t mask = 1; mask <= all; ++mask) {
        budget.charge();
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
        if (comp == mask) {
            ++count;
            total += static_cast<unsigned>(std::popcount(mask));
        }
    }
    return detail::make_stats(n, detail::int_from_u128(count), detail::int_from_u128(total));
}

inline ConnStats stats_bruteforce(const Graph& g) {
    WorkBudget budget;
    return stats_bruteforce(g, budget);
}

namespace detail {

// Smallest articulation vertex, or -1. Lowpoint DFS over flat arrays; no
// block materialization. Assumes g connected.
inline int smallest_cut_vertex(const Graph& g) {
    const int n = g.order();
    if (n <= 2) return -1;
    if (g.edge_count() == n - 1) {  // tree: every internal vertex cuts
        for (int v = 0; v < n; ++v)
            if (g.degree(v) >= 2) return v;
        return -1;
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<std::size_t> next_child(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    int timer = 0;
    disc[0] = low[0] = timer++;
    int best = n;
    int root_children = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        const auto& nbrs = g.neighbors(u);
        if (next_child[static_cast<std::size_t>(u)] < nbrs.size()) {
            const int w = nbrs[next_child[static_cast<std::size_t>(u)]++];
            if (disc[static_cast<std::size_t>(w)] == -1) {
                parent[static_cast<std::size_t>(w)] = u;
                if (u == 0) ++root_children;
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                stack.push_back(w);
            } else if (w != parent[static_cast<std::size_t>(u)]) {
                low[static_cast<std::size_t>(u)] = std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(w)]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                const int p = stack.back();
                low[static_cast<std::size_t>(p)] = std::min(low[static_cast<std::size_t>(p)], low[static_cast<std::size_t>(u)]);
                if (p != 0 && low[static_cast<std::size_t>(u)] >= disc[static_cast<std::size_t>(p)] && p < best) best = p;
            }
        }
    }
    if (root_children >= 2) best = 0;
    return best == n ? -1 : best;
}

inline std::pair<Int, Int> stats_connected_impl(const Graph& g, WorkBudget& budget) {
    const int n = g.order();
    if (n == 1) return {Int(1), Int(1)};
    const int cut = smallest_cut_vertex(g);
    if (cut == -1) return count_all_connected_sets(g, budget);

    // Split at the smallest cut vertex x:
    //   N(G) = N(G,x) + sum_i N(G_i)
    //   S(G) = S(G,x) + sum_i S(G_i)
    // with the rooted statistics combined multiplicatively across the
    // branches G'_i = G_i + x:
    //   N(G,x) = prod_i N(G'_i,x)
    //   S(G,x) = sum_i S(G'_i,x) prod_{j != i} N(G'_j,x) - (M-1) prod_i N(G'_i,x)
    const int x = cut;
    const auto comps = connected_components(g, {x});
    const std::size_t m = comps.size();

    Int count_sum = 0, total_sum = 0;
    std::vector<Int> rooted_n(m), rooted_s(m);
    for (std::size_t i = 0; i < m; ++i) {
        const Graph gi = induced_subgraph(g, comps[i]);
        auto [ni, si] = stats_connected_impl(gi, budget);
        count_sum += ni;
        total_sum += si;

        VertexSet with_x = comps[i];
        with_x.insert(std::lower_bound(with_x.begin(), with_x.end(), x), x);
        const Graph gxi = induced_subgraph(g, with_x);
        const int x_local = static_cast<int>(std::lower_bound(with_x.begin(), with_x.end(), x) - with_x.begin());
        auto [nxi, sxi] = rooted_count(gxi, x_local, budget);
        rooted_n[i] = std::move(nxi);
        rooted_s[i] = std::move(sxi);
    }

    std::vector<Int> prefix(m + 1, Int(1)), suffix(m + 1, Int(1));
    for (std::size_t i = 0; i < m; ++i) prefix[i + 1] = prefix[i] * rooted_n[i];
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * rooted_n[i];
    const Int rooted_product = prefix[m];
    Int rooted_total = 0;
    for (std::size_t i = 0; i < m; ++i) rooted_total += rooted_s[i] * prefix[i] * suffix[i + 1];
    rooted_total -= Int(static_cast<long long>(m) - 1) * rooted_product;

    return {rooted_product + count_sum, rooted_total + total_sum};
}

}  // namespace detail

// Exact N, S, A, D of a connected graph via cut-vertex decomposition; the
// exponential work is confined to individual blocks.
inline ConnStats stats(const Graph& g, WorkBudget& budget) {
    if (!is_connected(g)) fail(errc::disconnected, "stats requires a connected graph");
    auto [count, total] = detail::stats_connected_impl(g, budget);
    return detail::make_stats(g.order(), std::move(count), std::move(total));
}

inline ConnStats stats(const Graph& g) {
    WorkBudget budget;
    return stats(g, budget);
}

// Rooted statistics over a connected set H: contract H to a single vertex
// and count around it; set sizes regain |H| - 1 afterwards.
inline RootedStats rooted_stats(const Graph& g, const VertexSet& root_set, WorkBudget& budget) {
    if (root_set.empty()) fail(errc::empty_root, "H must be nonempty");
    VertexSet h = root_set;
    std::sort(h.begin(), h.end());
    h.erase(std::unique(h.begin(), h.end()), h.end());
    for (int v : h) g.check_vertex(v);
    if (!is_connected(induced_subgraph(g, h))) fail(errc::root_not_connected, "H must induce a connected subgraph");
    if (!is_connected(g)) fail(errc::disconnected, "rooted statistics require a connected graph");

    const int n = g.order();
    const int hsize = static_cast<int>(h.size());
    RootedStats rs;
    rs.root_set = h;
    if (hsize == n) {
        rs.count = 1;
        rs.total = n;
        rs.average = Rat(n);
        return rs;
    }

    std::vector<int> local(static_cast<std::size_t>(n), -1);  // contracted ids; H -> 0
    int next = 1;
    for (int v : h) local[static_cast<std::size_t>(v)] = 0;
    for (int v = 0; v < n; ++v)
        if (local[static_cast<std::size_t>(v)] == -1) local[static_cast<std::size_t>(v)] = next++;

    Graph contracted(next);
    std::vector<char> super_edge(static_cast<std::size_t>(next), 0);
    for (int u = 0; u < n; ++u) {
        for (int v : g.neighbors(u)) {
            if (v < u) continue;
            int lu = local[static_cast<std::size_t>(u)], lv = local[static_cast<std::size_t>(v)];
            if (lu == lv) continue;  // edge inside H
            if (lu == 0 || lv == 0) {
                int other = lu == 0 ? lv : lu;
                if (!super_edge[static_cast<std::size_t>(other)]) {
                    super_edge[static_cast<std::size_t>(other)] = 1;
                    contracted.add_edge(0, other);
                }
            } else {
                contracted.add_edge(lu, lv);
            }
        }
    }

    auto [cnt, tot] = rooted_count(contracted, 0, budget);
    rs.total = tot + Int(hsize - 1) * cnt;
    rs.average = Rat(rs.total, cnt);
    rs.count = std::move(cnt);
    return rs;
}

inline RootedStats rooted_stats(const Graph& g, const VertexSet& root_set) {
    WorkBudget budget;
    return rooted_stats(g, root_set, budget);
}

// N(G,x) for every vertex x; their sum equals S(G).
inline std::vector<Int> vertex_profile(const Graph& g, WorkBudget& budget) {
    if (!is_connected(g)) fail(errc::disconnected, "vertex profile requires a connected graph");
    std::vector<Int> profile;
    profile.reserve(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) profile.push_back(rooted_count(g, x, budget).first);
    return profile;
}

inline std::vector<Int> vertex_profile(const Graph& g) {
    WorkBudget budget;
    return vertex_profile(g, budget);
}

inline CutDecomposition cut_decomposition(const Graph& g, int x, WorkBudget& budget) {
    g.check_vertex(x);
    if (!is_connected(g)) fail(errc::disconnected, "cut decomposition requires a connected graph");
    auto comps = connected_components(g, {x});
    if (comps.size() < 2) fail(errc::not_a_cut_vertex, "vertex " + std::to_string(x) + " is not a cut vertex");

    CutDecomposition d;
    d.cut_vertex = x;
    for (auto& members : comps) {
        CutComponent c;
        c.order = static_cast<int>(members.size());
        const Graph gi = induced_subgraph(g, members);
        auto [ni, si] = detail::stats_connected_impl(gi, budget);
        c.count = std::move(ni);
        c.total = std::move(si);

        VertexSet with_x = members;
        with_x.insert(std::lower_bound(with_x.begin(), with_x.end(), x), x);
        const Graph gxi = induced_subgraph(g, with_x);
        const int x_local = static_cast<int>(std::lower_bound(with_x.begin(), with_x.end(), x) - with_x.begin());
        auto [nxi, sxi] = rooted_count(gxi, x_local, budget);
        c.rooted_count = std::move(nxi);
        c.rooted_total = std::move(sxi);
        c.members = std::move(members);
        d.components.push_back(std::move(c));
    }
    return d;
}

inline CutDecomposition cut_decomposition(const Graph& g, int x) {
    WorkBudget budget;
    return cut_decomposition(g, x, budget);
}

// Materializes every connected set (host order <= 64) as a bitmask over the
// original vertex ids, ascending. Disconnected hosts enumerate per component.
inline std::vector<std::uint64_t> connected_sets_list(const Graph& g, WorkBudget& budget) {
    if (g.order() > 64) fail(errc::budget_exceeded, "set materialization requires order <= 64");
    std::vector<std::uint64_t> out;
    for (const auto& comp : connected_components(g)) {
        const Graph gi = induced_subgraph(g, comp);
        const auto adj = adjacency_masks(gi);
        const int k = gi.order();
        auto to_global = [&](std::uint64_t local) {
            std::uint64_t global = 0;
            while (local) {
                int v = std::countr_zero(local);
                local &= local - 1;
                global |= std::uint64_t(1) << comp[static_cast<std::size_t>(v)];
            }
            return global;
        };
        for (int v = 0; v < k; ++v) {
            const std::uint64_t bit = std::uint64_t(1) << v;
            const std::uint64_t ban = bit - 1;
            budget.charge();
            out.push_back(to_global(bit));
            detail::expand_connected(
                adj, bit, ban, adj[static_cast<std::size_t>(v)] & ~ban & ~bit, bit, budget,
                [](std::uint64_t st, int v2) { return st | (std::uint64_t(1) << v2); },
                [&](std::uint64_t st) { out.push_back(to_global(st)); });
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<std::uint64_t> connected_sets_list(const Graph& g) {
    WorkBudget budget;
    return connected_sets_list(g, budget);
}

}  // namespace connset
