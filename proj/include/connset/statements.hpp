#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "connset/check_result.hpp"
#include "connset/graph6.hpp"
#include "connset/minimal_sets.hpp"

namespace connset {

// ---------------------------------------------------------------------------
// Individual checkers
// ---------------------------------------------------------------------------

// 3·S ≥ (n+2)·N with equality exactly for paths.
inline CheckResult check_main_bound(const Graph& g, WorkBudget& budget) {
    if (!is_connected(g)) fail(errc::disconnected, "main bound requires a connected graph");
    const ConnStats s = stats(g, budget);
    const Int lhs = 3 * s.total;
    const Int rhs = Int(g.order() + 2) * s.count;
    const bool equality = lhs == rhs;
    const bool path = is_path_graph(g);

    CheckResult r;
    r.statement = "thm_main";
    r.status = (lhs >= rhs && equality == path) ? CheckStatus::pass : CheckStatus::fail;
    r.witness["N"] = to_decimal(s.count);
    r.witness["S"] = to_decimal(s.total);
    r.witness["equality"] = equality;
    if (lhs < rhs) r.witness["violated"] = "3S < (n+2)N";
    if (equality != path) r.witness["violated_equality_characterization"] = true;
    return r;
}

// 2·S(G,H) ≥ (n+h)·N(G,H) for a connected root set H.
inline CheckResult check_rooted_bound(const Graph& g, const VertexSet& root_set, WorkBudget& budget) {
    const RootedStats rs = rooted_stats(g, root_set, budget);
    const Int lhs = 2 * rs.total;
    const Int rhs = Int(g.order() + static_cast<int>(rs.root_set.size())) * rs.count;

    CheckResult r;
    r.statement = "thm_rooted";
    std::string p = "H={";
    for (std::size_t i = 0; i < rs.root_set.size(); ++i)
        p += (i ? "," : "") + std::to_string(rs.root_set[i]);
    r.param = p + "}";
    r.status = lhs >= rhs ? CheckStatus::pass : CheckStatus::fail;
    r.witness["rooted_count"] = to_decimal(rs.count);
    r.witness["rooted_total"] = to_decimal(rs.total);
    r.witness["equality"] = (lhs == rhs);
    return r;
}

enum class RootSearchOutcome { found, no_cut_vertex, no_satisfying_cut };

struct RootSearch {
    RootSearchOutcome outcome = RootSearchOutcome::no_cut_vertex;
    std::optional<int> vertex;
};

// Root-vertex inequality at cut vertex x, with the decomposition supplied:
// (n-1)·prod N_i(x) > 2·sum (n-n_i)·N_i, strict.
inline bool root_inequality_holds(int n, const CutDecomposition& d) {
    Int lhs = n - 1;
    for (const auto& c : d.components) lhs *= c.rooted_count;
    Int rhs = 0;
    for (const auto& c : d.components) rhs += Int(n - c.order) * c.count;
    return lhs > 2 * rhs;
}

// Smallest-id cut vertex satisfying the root-vertex inequality.
inline RootSearch find_root_vertex(const Graph& g, WorkBudget& budget) {
    if (!is_connected(g)) fail(errc::disconnected, "root search requires a connected graph");
    const BlockCutTree t = block_cut_tree(g);
    RootSearch result;
    if (t.cut_vertices.empty()) return result;
    result.outcome = RootSearchOutcome::no_satisfying_cut;
    for (int x : t.cut_vertices) {
        const CutDecomposition d = cut_decomposition(g, x, budget);
        if (root_inequality_holds(g.order(), d)) {
            result.outcome = RootSearchOutcome::found;
            result.vertex = x;
            return result;
        }
    }
    return result;
}

inline RootSearch find_root_vertex(const Graph& g) {
    WorkBudget budget;
    return find_root_vertex(g, budget);
}

// Cograph test via the union/join recursion: a graph on >= 2 vertices is a
// cograph iff it or its complement is disconnected, with cograph parts.
inline bool is_cograph(const Graph& g) {
    if (g.order() == 1) return true;
    const auto comps = connected_components(g);
    if (comps.size() > 1) {
        for (const auto& c : comps)
            if (!is_cograph(induced_subgraph(g, c))) return false;
        return true;
    }
    const Graph co = complement(g);
    const auto cocomps = connected_components(co);
    if (cocomps.size() == 1) return false;
    for (const auto& c : cocomps)
        if (!is_cograph(induced_subgraph(co, c))) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

struct Statement {
    std::string id;
    std::string description;
    bool report_only = false;  // violations become findings, never failures
    std::function<std::vector<CheckResult>(const Graph&, WorkBudget&)> run;
};

class StatementRegistry {
  public:
    void add(Statement s) { map_[s.id] = std::move(s); }

    const Statement* find(const std::string& id) const {
        auto it = map_.find(id);
        return it == map_.end() ? nullptr : &it->second;
    }

    std::vector<std::string> ids() const {
        std::vector<std::string> out;
        for (const auto& kv : map_) out.push_back(kv.first);
        return out;
    }

    static StatementRegistry standard();

  private:
    std::map<std::string, Statement> map_;
};

namespace detail {

inline CheckResult na(const std::string& id, const std::string& reason) {
    CheckResult r;
    r.statement = id;
    r.status = CheckStatus::not_applicable;
    r.witness["reason"] = reason;
    return r;
}

inline std::vector<CheckResult> single(CheckResult r) {
    std::vector<CheckResult> v;
    v.push_back(std::move(r));
    return v;
}

inline VertexSet mask_to_set(std::uint64_t mask) {
    VertexSet s;
    while (mask) {
        s.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return s;
}

// Near-tree reading that refuses order-4 leaf blocks outright; classifies a
// superset of graphs as "not near tree" and is reported separately.
inline bool strict_not_near_tree(const BlockCutTree& t) {
    int red_count = 0;
    std::size_t red_index = 0;
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi)
        if (t.block_red[bi]) {
            ++red_count;
            red_index = bi;
        }
    if (red_count == 0) return false;
    if (red_count == 1 && t.blocks[red_index].size() == 3) return false;
    for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
        if (t.block_leaf[bi]) {
            if (t.blocks[bi].size() > 3) return true;
        } else if (t.block_red[bi]) {
            return true;
        }
    }
    return false;
}

inline CheckResult root_existence_result(const Graph& g, WorkBudget& budget, const std::string& id,
                                         bool report_only) {
    const RootSearch rs = find_root_vertex(g, budget);
    CheckResult r;
    r.statement = id;
    if (rs.outcome == RootSearchOutcome::found) {
        r.status = CheckStatus::pass;
        r.witness["root"] = *rs.vertex;
    } else if (report_only) {
        r.status = CheckStatus::pass;
        r.witness["finding"] = true;
        r.witness["reason"] = rs.outcome == RootSearchOutcome::no_cut_vertex ? "no_cut_vertex" : "no_satisfying_cut";
    } else {
        r.status = CheckStatus::fail;
        r.witness["reason"] = rs.outcome == RootSearchOutcome::no_cut_vertex ? "no_cut_vertex" : "no_satisfying_cut";
    }
    return r;
}

}  // namespace detail

inline StatementRegistry StatementRegistry::standard() {
    StatementRegistry reg;

    reg.add({"thm_main", "3S >= (n+2)N, equality exactly for paths", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("thm_main", "disconnected"));
                 return detail::single(check_main_bound(g, b));
             }});

    reg.add({"thm_rooted", "2S(G,H) >= (n+h)N(G,H); all connected H for n <= 6, singletons otherwise", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("thm_rooted", "disconnected"));
                 std::vector<CheckResult> out;
                 if (g.order() <= 6) {
                     for (std::uint64_t mask : connected_sets_list(g, b))
                         out.push_back(check_rooted_bound(g, detail::mask_to_set(mask), b));
                 } else {
                     for (int x = 0; x < g.order(); ++x)
                         out.push_back(check_rooted_bound(g, {x}, b));
                 }
                 return out;
             }});

    reg.add({"cor_v", "2S(G,x) >= (n+1)N(G,x) for every vertex", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("cor_v", "disconnected"));
                 std::vector<CheckResult> out;
                 for (int x = 0; x < g.order(); ++x) {
                     CheckResult r = check_rooted_bound(g, {x}, b);
                     r.statement = "cor_v";
                     r.param = "x=" + std::to_string(x);
                     out.push_back(std::move(r));
                 }
                 return out;
             }});

    reg.add({"cor_nt", "near trees satisfy 3S >= (n+2)N, equality exactly for paths", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("cor_nt", "disconnected"));
                 if (classify_near_tree(g) == NearTreeClass::not_near_tree)
                     return detail::single(detail::na("cor_nt", "not a near tree"));
                 CheckResult r = check_main_bound(g, b);
                 r.statement = "cor_nt";
                 return detail::single(std::move(r));
             }});

    reg.add({"thm_av", "av(G,x)(N(G,x)-1) >= N(G-x) with the construction identities", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("thm_av", "disconnected"));
                 std::vector<CheckResult> out;
                 for (int x = 0; x < g.order(); ++x) out.push_back(check_av_inequality(g, x, b));
                 return out;
             }});

    reg.add({"thm_2av", "2-connected: av(G,x) <= (n-1)/2, equality only for the triangle", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("thm_2av", "disconnected"));
                 if (g.order() < 3) return detail::single(detail::na("thm_2av", "order below 3"));
                 const BlockCutTree t = block_cut_tree(g);
                 if (!t.cut_vertices.empty()) return detail::single(detail::na("thm_2av", "not 2-connected"));
                 const bool triangle = g.order() == 3 && is_complete(g);
                 const Rat bound(g.order() - 1, 2);
                 std::vector<CheckResult> out;
                 for (int x = 0; x < g.order(); ++x) {
                     const MinimalFamily mf = minimal_family(g, x, b);
                     CheckResult r;
                     r.statement = "thm_2av";
                     r.param = "x=" + std::to_string(x);
                     const bool equality = mf.av == bound;
                     const bool ok = mf.av <= bound && equality == triangle;
                     r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                     r.witness["av"] = to_fraction(mf.av);
                     r.witness["bound"] = to_fraction(bound);
                     r.witness["equality"] = equality;
                     out.push_back(std::move(r));
                 }
                 return out;
             }});

    reg.add({"cor_av1", "clique-neighborhood vertex of a red block: av(G,x) <= (n-1)/2, equality only for the triangle", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("cor_av1", "disconnected"));
                 const BlockCutTree t = block_cut_tree(g);
                 std::vector<int> candidates;
                 for (int x = 0; x < g.order(); ++x) {
                     const auto& nb = g.neighbors(x);
                     if (nb.empty()) continue;
                     bool hosted = false;
                     for (std::size_t bi = 0; bi < t.blocks.size() && !hosted; ++bi) {
                         if (t.blocks[bi].size() < 3) continue;
                         if (!std::binary_search(t.blocks[bi].begin(), t.blocks[bi].end(), x)) continue;
                         bool inside = true;
                         for (int w : nb)
                             if (!std::binary_search(t.blocks[bi].begin(), t.blocks[bi].end(), w)) {
                                 inside = false;
                                 break;
                             }
                         if (inside) hosted = true;
                     }
                     if (!hosted) continue;
                     bool clique = true;
                     for (std::size_t i = 0; i < nb.size() && clique; ++i)
                         for (std::size_t j = i + 1; j < nb.size(); ++j)
                             if (!g.has_edge(nb[i], nb[j])) {
                                 clique = false;
                                 break;
                             }
                     if (clique) candidates.push_back(x);
                 }
                 if (candidates.empty()) return detail::single(detail::na("cor_av1", "no qualifying vertex"));
                 const bool triangle = g.order() == 3 && is_complete(g);
                 const Rat bound(g.order() - 1, 2);
                 std::vector<CheckResult> out;
                 for (int x : candidates) {
                     const MinimalFamily mf = minimal_family(g, x, b);
                     CheckResult r;
                     r.statement = "cor_av1";
                     r.param = "x=" + std::to_string(x);
                     const bool equality = mf.av == bound;
                     const bool ok = mf.av <= bound && (!equality || triangle) && (!triangle || equality);
                     r.status = ok ? CheckStatus::pass : CheckStatus::fail;
                     r.witness["av"] = to_fraction(mf.av);
                     r.witness["equality"] = equality;
                     out.push_back(std::move(r));
                 }
                 return out;
             }});

    reg.add({"thm_inequal", "graphs with a cut vertex that are not near trees have a root vertex", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("thm_inequal", "disconnected"));
                 const BlockCutTree t = block_cut_tree(g);
                 if (t.cut_vertices.empty()) return detail::single(detail::na("thm_inequal", "no cut vertex"));
                 if (classify_near_tree(t) != NearTreeClass::not_near_tree)
                     return detail::single(detail::na("thm_inequal", "near tree"));
                 return detail::single(detail::root_existence_result(g, b, "thm_inequal", false));
             }});

    reg.add({"thm_inequal_strict", "root existence under the strict near-tree reading (interpretation probe)", true,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("thm_inequal_strict", "disconnected"));
                 const BlockCutTree t = block_cut_tree(g);
                 if (t.cut_vertices.empty()) return detail::single(detail::na("thm_inequal_strict", "no cut vertex"));
                 if (!detail::strict_not_near_tree(t))
                     return detail::single(detail::na("thm_inequal_strict", "near tree (strict reading)"));
                 return detail::single(detail::root_existence_result(g, b, "thm_inequal_strict", true));
             }});

    reg.add({"lemma_d2", "two-branch cut vertex with a doubled rooted count and small av ratio satisfies the root inequality", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("lemma_d2", "disconnected"));
                 const BlockCutTree t = block_cut_tree(g);
                 std::vector<CheckResult> out;
                 for (int x : t.cut_vertices) {
                     CutDecomposition d = cut_decomposition(g, x, b);
                     if (d.components.size() != 2) continue;
                     fill_av_ratios(g, d, b);
                     bool hypothesis = false;
                     for (const auto& c : d.components)
                         if (c.rooted_count >= 2 * Int(c.order + 1) && *c.av_ratio <= Rat(1, 2)) hypothesis = true;
                     if (!hypothesis) continue;
                     CheckResult r;
                     r.statement = "lemma_d2";
                     r.param = "x=" + std::to_string(x);
                     r.status = root_inequality_holds(g.order(), d) ? CheckStatus::pass : CheckStatus::fail;
                     r.witness["n1"] = d.components[0].order;
                     r.witness["n2"] = d.components[1].order;
                     out.push_back(std::move(r));
                 }
                 if (out.empty()) return detail::single(detail::na("lemma_d2", "hypothesis never holds"));
                 return out;
             }});

    reg.add({"lemma_cut1", "cut vertices with many or large branches satisfy the root inequality", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("lemma_cut1", "disconnected"));
                 const BlockCutTree t = block_cut_tree(g);
                 std::vector<CheckResult> out;
                 for (int x : t.cut_vertices) {
                     const CutDecomposition d = cut_decomposition(g, x, b);
                     const std::size_t m = d.components.size();
                     bool hypothesis = m >= 4;
                     if (m == 3) {
                         int smallest = d.components[0].order, big = 0;
                         for (const auto& c : d.components) {
                             smallest = std::min(smallest, c.order);
                             if (c.order >= 3) ++big;
                         }
                         hypothesis = smallest >= 2 && big >= 2;
                     }
                     if (!hypothesis) continue;
                     CheckResult r;
                     r.statement = "lemma_cut1";
                     r.param = "x=" + std::to_string(x);
                     r.status = root_inequality_holds(g.order(), d) ? CheckStatus::pass : CheckStatus::fail;
                     r.witness["branches"] = static_cast<int>(m);
                     out.push_back(std::move(r));
                 }
                 if (out.empty()) return detail::single(detail::na("lemma_cut1", "hypothesis never holds"));
                 return out;
             }});

    reg.add({"lemma_cut2", "dropping a minimum-count branch preserves the root inequality", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("lemma_cut2", "disconnected"));
                 const BlockCutTree t = block_cut_tree(g);
                 std::vector<CheckResult> out;
                 for (int x : t.cut_vertices) {
                     const CutDecomposition d = cut_decomposition(g, x, b);
                     const std::size_t m = d.components.size();
                     if (m < 3) continue;
                     std::size_t drop = 0;
                     for (std::size_t i = 1; i < m; ++i)
                         if (d.components[i].count < d.components[drop].count) drop = i;
                     VertexSet kept{x};
                     for (std::size_t i = 0; i < m; ++i) {
                         if (i == drop) continue;
                         kept.insert(kept.end(), d.components[i].members.begin(), d.components[i].members.end());
                     }
                     std::sort(kept.begin(), kept.end());
                     const Graph reduced = induced_subgraph(g, kept);
                     const int x_local = static_cast<int>(std::lower_bound(kept.begin(), kept.end(), x) - kept.begin());
                     const CutDecomposition dr = cut_decomposition(reduced, x_local, b);
                     if (!root_inequality_holds(reduced.order(), dr)) continue;  // vacuous
                     CheckResult r;
                     r.statement = "lemma_cut2";
                     r.param = "x=" + std::to_string(x);
                     r.status = root_inequality_holds(g.order(), d) ? CheckStatus::pass : CheckStatus::fail;
                     r.witness["branches"] = static_cast<int>(m);
                     r.witness["dropped_order"] = d.components[drop].order;
                     out.push_back(std::move(r));
                 }
                 if (out.empty()) return detail::single(detail::na("lemma_cut2", "hypothesis never holds"));
                 return out;
             }});

    reg.add({"prop_nx", "sum over x of N(G,x) equals S(G)", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("prop_nx", "disconnected"));
                 const ConnStats s = stats(g, b);
                 Int sum = 0;
                 for (const Int& v : vertex_profile(g, b)) sum += v;
                 CheckResult r;
                 r.statement = "prop_nx";
                 r.status = sum == s.total ? CheckStatus::pass : CheckStatus::fail;
                 r.witness["profile_sum"] = to_decimal(sum);
                 r.witness["S"] = to_decimal(s.total);
                 return detail::single(std::move(r));
             }});

    reg.add({"cograph_bounds", "connected cographs: n/2 < A <= (n+1)/2, right equality only at order 1", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("cograph_bounds", "disconnected"));
                 if (!is_cograph(g)) return detail::single(detail::na("cograph_bounds", "not a cograph"));
                 const ConnStats s = stats(g, b);
                 const int n = g.order();
                 const bool lower = 2 * s.total > Int(n) * s.count;
                 const Int rhs = Int(n + 1) * s.count;
                 const bool upper = 2 * s.total <= rhs;
                 const bool right_equality = 2 * s.total == rhs;
                 CheckResult r;
                 r.statement = "cograph_bounds";
                 r.status = (lower && upper && right_equality == (n == 1)) ? CheckStatus::pass : CheckStatus::fail;
                 r.witness["A"] = to_fraction(s.average);
                 r.witness["equality"] = right_equality;
                 return detail::single(std::move(r));
             }});

    reg.add({"tree_density_bounds", "series-reduced trees: 1/2 <= D < 3/4", false,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("tree_density_bounds", "disconnected"));
                 if (!is_tree(g)) return detail::single(detail::na("tree_density_bounds", "not a tree"));
                 for (int v = 0; v < g.order(); ++v)
                     if (g.degree(v) != 1 && g.degree(v) < 3)
                         return detail::single(detail::na("tree_density_bounds", "internal vertex of degree below 3"));
                 const ConnStats s = stats(g, b);
                 const Int nn = Int(g.order()) * s.count;
                 const bool lower = 2 * s.total >= nn;
                 const bool upper = 4 * s.total < 3 * nn;
                 CheckResult r;
                 r.statement = "tree_density_bounds";
                 r.status = (lower && upper) ? CheckStatus::pass : CheckStatus::fail;
                 r.witness["D"] = to_fraction(s.density);
                 return detail::single(std::move(r));
             }});

    reg.add({"min_degree3_density", "reported: minimum degree 3 implies D > 1/2 (conjecture, findings only)", true,
             [](const Graph& g, WorkBudget& b) {
                 if (!is_connected(g)) return detail::single(detail::na("min_degree3_density", "disconnected"));
                 if (min_degree(g) < 3) return detail::single(detail::na("min_degree3_density", "minimum degree below 3"));
                 const ConnStats s = stats(g, b);
                 const bool above = 2 * s.total > Int(g.order()) * s.count;
                 CheckResult r;
                 r.statement = "min_degree3_density";
                 r.status = CheckStatus::pass;  // conjecture class: never fails the run
                 r.witness["D"] = to_fraction(s.density);
                 if (!above) r.witness["finding"] = true;
                 return detail::single(std::move(r));
             }});

    return reg;
}

// ---------------------------------------------------------------------------
// Suite runner
// ---------------------------------------------------------------------------

// One result per applicable (statement, graph, parameter) triple, ordered by
// (input index, statement id, parameter). Budget errors are recorded per
// item as not_applicable.
inline std::vector<CheckResult> run_statements_on_graph(const Graph& g, std::int64_t graph_index,
                                                        const std::string& graph6,
                                                        const std::vector<std::string>& statement_ids,
                                                        const StatementRegistry& registry,
                                                        std::uint64_t budget_limit) {
    std::vector<CheckResult> out;
    for (const auto& id : statement_ids) {
        const Statement* st = registry.find(id);
        if (st == nullptr) fail(errc::unknown_statement, "no statement named \"" + id + "\"");
        std::vector<CheckResult> results;
        try {
            WorkBudget budget{budget_limit, 0};
            results = st->run(g, budget);
        } catch (const error& e) {
            if (e.code() != errc::budget_exceeded) throw;
            results = detail::single(detail::na(id, "budget_exceeded"));
        }
        for (auto& r : results) {
            r.statement = id;
            r.graph_index = graph_index;
            r.graph6 = graph6;
            out.push_back(std::move(r));
        }
    }
    return out;
}

inline std::vector<CheckResult> run_statement_suite(const std::vector<Graph>& graphs,
                                                    std::vector<std::string> statement_ids,
                                                    const StatementRegistry& registry,
                                                    std::uint64_t budget_limit = WorkBudget{}.limit) {
    std::sort(statement_ids.begin(), statement_ids.end());
    for (const auto& id : statement_ids)
        if (registry.find(id) == nullptr) fail(errc::unknown_statement, "no statement named \"" + id + "\"");
    std::vector<CheckResult> out;
    for (std::size_t i = 0; i < graphs.size(); ++i) {
        auto rows = run_statements_on_graph(graphs[i], static_cast<std::int64_t>(i), encode_graph6(graphs[i]),
                                            statement_ids, registry, budget_limit);
        for (auto& r : rows) out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<CheckResult> run_statement_suite(const std::vector<Graph>& graphs,
                                                    const std::vector<std::string>& statement_ids,
                                                    std::uint64_t budget_limit = WorkBudget{}.limit) {
    return run_statement_suite(graphs, statement_ids, StatementRegistry::standard(), budget_limit);
}

// ---------------------------------------------------------------------------
// Exception mining for the doubled-order rooted-count bound
// ---------------------------------------------------------------------------

struct TwiceBoundException {
    std::size_t graph_index = 0;
    std::string graph6;
    int vertex = -1;
    Int rooted;
    int threshold = 0;  // 2n
};

struct TwiceBoundReport {
    std::vector<TwiceBoundException> exceptions;
    std::size_t graphs = 0;
    std::size_t pairs = 0;
};

enum class TwiceBoundMode {
    trees,      // vertices of degree >= 2 in trees
    red_block,  // vertices contained in a block of order >= 3
};

// Lists every (graph, vertex) pair whose rooted count falls below twice the
// order; every unlisted eligible pair satisfies N(G,x) >= 2n.
inline TwiceBoundReport mine_exceptions_twice(const std::vector<Graph>& stream, TwiceBoundMode mode,
                                              WorkBudget& budget) {
    TwiceBoundReport report;
    for (std::size_t gi = 0; gi < stream.size(); ++gi) {
        const Graph& g = stream[gi];
        if (mode == TwiceBoundMode::trees && !is_tree(g))
            fail(errc::invalid_params, "tree mining expects a stream of trees");
        if (!is_connected(g)) fail(errc::disconnected, "exception mining requires connected graphs");
        ++report.graphs;
        std::vector<char> eligible(static_cast<std::size_t>(g.order()), 0);
        if (mode == TwiceBoundMode::trees) {
            for (int v = 0; v < g.order(); ++v) eligible[static_cast<std::size_t>(v)] = g.degree(v) >= 2;
        } else {
            const BlockCutTree t = block_cut_tree(g);
            for (std::size_t bi = 0; bi < t.blocks.size(); ++bi)
                if (t.blocks[bi].size() >= 3)
                    for (int v : t.blocks[bi]) eligible[static_cast<std::size_t>(v)] = 1;
        }
        for (int x = 0; x < g.order(); ++x) {
            if (!eligible[static_cast<std::size_t>(x)]) continue;
            ++report.pairs;
            Int rooted = rooted_count(g, x, budget).first;
            if (rooted < 2 * g.order()) {
                TwiceBoundException e;
                e.graph_index = gi;
                e.graph6 = encode_graph6(g);
                e.vertex = x;
                e.rooted = std::move(rooted);
                e.threshold = 2 * g.order();
                report.exceptions.push_back(std::move(e));
            }
        }
    }
    return report;
}

inline TwiceBoundReport mine_exceptions_twice(const std::vector<Graph>& stream, TwiceBoundMode mode) {
    WorkBudget budget;
    return mine_exceptions_twice(stream, mode, budget);
}

}  // namespace connset
