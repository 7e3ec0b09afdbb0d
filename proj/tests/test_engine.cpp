#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <numeric>

#include "connset/generators.hpp"
#include "connset/minimal_sets.hpp"
#include "support/catalog.hpp"
#include "support/helpers.hpp"

using namespace connset;
using testsupport::bowtie;
using testsupport::complete_graph;
using testsupport::cycle_graph;
using testsupport::path_graph;
using testsupport::star_graph;

TEST_CASE("brute-force statistics on hand-enumerated graphs") {
    // P_3: {a},{b},{c},{ab},{bc},{abc}
    const ConnStats p3 = stats_bruteforce(path_graph(3));
    CHECK(p3.count == 6);
    CHECK(p3.total == 10);
    CHECK(p3.average == Rat(5, 3));

    // K_3: every nonempty subset is connected
    const ConnStats k3 = stats_bruteforce(complete_graph(3));
    CHECK(k3.count == 7);
    CHECK(k3.total == 12);

    const ConnStats k1 = stats_bruteforce(Graph(1));
    CHECK(k1.count == 1);
    CHECK(k1.total == 1);

    // disconnected input is allowed: 2K_1 has two singletons
    Graph two(2);
    const ConnStats d = stats_bruteforce(two);
    CHECK(d.count == 2);
    CHECK(d.total == 2);
}

TEST_CASE("engine statistics on the named examples") {
    const ConnStats p10 = stats(path_graph(10));
    CHECK(p10.count == 55);
    CHECK(p10.total == 220);
    CHECK(p10.average == Rat(4));

    // star K_{1,3}: center subsets 2^3 plus 3 leaf singletons
    const ConnStats star = stats(star_graph(3));
    CHECK(star.count == 11);
    CHECK(star.total == 23);

    // two triangles sharing a vertex: N(G,x) = 4*4, S(G,x) = 8*4+8*4-16
    const ConnStats bt = stats(bowtie(3));
    CHECK(bt.count == 22);
    CHECK(bt.total == 56);

    const ConnStats c4 = stats(cycle_graph(4));
    CHECK(c4.count == 13);
    CHECK(c4.total == 28);

    Graph two(2);
    CHECK_THROWS_AS(stats(two), error);
}

TEST_CASE("engine equals the oracle exhaustively and on random graphs") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
            const ConnStats a = stats(g);
            const ConnStats b = stats_bruteforce(g);
            REQUIRE(a.count == b.count);
            REQUIRE(a.total == b.total);
            REQUIRE(3 * a.total >= Int(n + 2) * a.count);          // lower bound
            REQUIRE(2 * a.total > a.count * Int(0));               // sanity
            REQUIRE(a.density > Rat(1, 3));
        }
    for (int seed = 0; seed < 30; ++seed) {
        const int n = 8 + seed % 5;
        FamilySpec spec;
        spec.family = Family::connected_gnm;
        spec.params["n"] = n;
        spec.params["m"] = n - 1 + seed % (n + 2);
        spec.seed = static_cast<std::uint64_t>(seed * 977);
        const Graph g = generate(spec);
        const ConnStats a = stats(g);
        const ConnStats b = stats_bruteforce(g);
        REQUIRE(a.count == b.count);
        REQUIRE(a.total == b.total);
    }
}

TEST_CASE("rooted statistics") {
    const auto p3_mid = rooted_stats(path_graph(3), {1});
    CHECK(p3_mid.count == 4);
    CHECK(p3_mid.total == 8);
    CHECK(p3_mid.average == Rat(2));

    // H = V has the single superset V
    const Graph c5 = cycle_graph(5);
    const auto full = rooted_stats(c5, {0, 1, 2, 3, 4});
    CHECK(full.count == 1);
    CHECK(full.total == 5);

    // middle edge of P_4: the four supersets have sizes 2,3,3,4
    const auto p4_edge = rooted_stats(path_graph(4), {1, 2});
    CHECK(p4_edge.count == 4);
    CHECK(p4_edge.total == 12);
    CHECK(p4_edge.average == Rat(3));

    CHECK_THROWS_AS(rooted_stats(c5, {}), error);
    Graph tri_plus(4);
    tri_plus.add_edge(0, 1);
    tri_plus.add_edge(1, 2);
    tri_plus.add_edge(2, 3);
    CHECK_THROWS_AS(rooted_stats(tri_plus, {0, 2}), error);  // H not connected
}

TEST_CASE("rooted statistics match raw subset iteration") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
            for (std::uint64_t h = 1; h < (std::uint64_t(1) << n); ++h) {
                VertexSet members;
                for (int v = 0; v < n; ++v)
                    if (h >> v & 1) members.push_back(v);
                if (!is_connected(induced_subgraph(g, members))) continue;
                const auto [bn, bs] = testsupport::brute_rooted_stats(g, h);
                const RootedStats rs = rooted_stats(g, members);
                REQUIRE(rs.count == bn);
                REQUIRE(rs.total == bs);
            }
        }
}

TEST_CASE("vertex profile and the pair-counting identity") {
    const auto p3 = vertex_profile(path_graph(3));
    CHECK(p3 == std::vector<Int>{3, 4, 3});
    const auto k3 = vertex_profile(complete_graph(3));
    CHECK(k3 == std::vector<Int>{4, 4, 4});
    CHECK(vertex_profile(Graph(1)) == std::vector<Int>{1});

    for (int n = 1; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
            const auto profile = vertex_profile(g);
            const Int sum = std::accumulate(profile.begin(), profile.end(), Int(0));
            REQUIRE(sum == stats(g).total);
        }
}

TEST_CASE("pivot identity: N(G) = N(G,x) + sum of branch counts") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n)))
            for (int x = 0; x < n; ++x) {
                Int total = rooted_count(g, x).first;
                for (const auto& comp : connected_components(g, {x}))
                    total += stats_bruteforce(induced_subgraph(g, comp)).count;
                REQUIRE(total == stats(g).count);
            }
}

TEST_CASE("cut decomposition") {
    SECTION("two triangles sharing vertex 0") {
        const CutDecomposition d = cut_decomposition(bowtie(3), 0);
        REQUIRE(d.components.size() == 2);
        for (const auto& c : d.components) {
            CHECK(c.order == 2);
            CHECK(c.count == 3);
            CHECK(c.rooted_count == 4);
            CHECK(c.rooted_total == 8);
        }
    }
    SECTION("two K_4 sharing vertex 0") {
        const CutDecomposition d = cut_decomposition(bowtie(4), 0);
        REQUIRE(d.components.size() == 2);
        for (const auto& c : d.components) {
            CHECK(c.order == 3);
            CHECK(c.count == 7);
            CHECK(c.rooted_count == 8);
        }
    }
    SECTION("P_2 has no cut vertex") {
        CHECK_THROWS_AS(cut_decomposition(path_graph(2), 0), error);
        CHECK_THROWS_AS(cut_decomposition(path_graph(2), 1), error);
    }
    SECTION("rooted identities hold against direct rooted counts") {
        for (int n = 3; n <= 6; ++n)
            for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
                const BlockCutTree t = block_cut_tree(g);
                for (int x : t.cut_vertices) {
                    const CutDecomposition d = cut_decomposition(g, x);
                    Int product = 1;
                    for (const auto& c : d.components) product *= c.rooted_count;
                    REQUIRE(product == rooted_count(g, x).first);
                    REQUIRE(1 + std::accumulate(d.components.begin(), d.components.end(), Int(0),
                                                [](Int acc, const CutComponent& c) { return acc + c.order; }) ==
                            g.order());
                }
            }
    }
}

TEST_CASE("path closed forms through the decomposition") {
    for (int n : {3, 10, 25, 60, 101}) {
        const ConnStats s = stats(path_graph(n));
        CHECK(s.count == Int(n) * (n + 1) / 2);
        CHECK(s.total == Int(n) * (n + 1) * (n + 2) / 6);
        CHECK(s.average == Rat(n + 2, 3));
    }
}

TEST_CASE("work budget is a hard stop") {
    WorkBudget tiny{100, 0};
    CHECK_THROWS_AS(stats_bruteforce(path_graph(12), tiny), error);
    WorkBudget tiny2{100, 0};
    CHECK_THROWS_AS(stats(complete_graph(10), tiny2), error);
    try {
        WorkBudget tiny3{10, 0};
        stats(complete_graph(8), tiny3);
        FAIL("expected budget_exceeded");
    } catch (const error& e) {
        CHECK(e.code() == errc::budget_exceeded);
    }
}

TEST_CASE("average of the complete graph excludes the empty set") {
    // A(K_n) = n 2^(n-1) / (2^n - 1)
    for (int n : {2, 3, 4, 6}) {
        const ConnStats s = stats(complete_graph(n));
        CHECK(s.count == (Int(1) << n) - 1);
        CHECK(s.average == Rat(Int(n) * (Int(1) << (n - 1)), (Int(1) << n) - 1));
    }
}

TEST_CASE("minimal families on the worked examples") {
    SECTION("triangle rooted anywhere: av = 1") {
        const MinimalFamily mf = minimal_family(complete_graph(3), 0);
        CHECK(mf.minimal_indices.size() == 3);
        for (std::size_t i : mf.minimal_indices) CHECK(mf.entries[i].path_len == 1);
        CHECK(mf.av == Rat(1));
    }
    SECTION("single edge") {
        const MinimalFamily mf = minimal_family(path_graph(2), 0);
        REQUIRE(mf.minimal_indices.size() == 1);
        CHECK(mf.av == Rat(1));
    }
    SECTION("4-cycle 0-1-3-2-0") {
        Graph c(4);
        c.add_edge(0, 1);
        c.add_edge(0, 2);
        c.add_edge(1, 3);
        c.add_edge(2, 3);
        const MinimalFamily mf = minimal_family(c, 0);
        // minimals: {1}:1, {2}:1, {3}:2, {2,3}:1, {1,2,3}:1
        REQUIRE(mf.minimal_indices.size() == 5);
        Int path_sum = 0;
        for (std::size_t i : mf.minimal_indices) path_sum += mf.entries[i].path_len;
        CHECK(path_sum == 6);
        CHECK(mf.av == Rat(6, 5));
        bool saw_deep = false;
        for (std::size_t i : mf.minimal_indices)
            if (mf.entries[i].set_mask == (std::uint64_t(1) << 3)) {
                saw_deep = true;
                CHECK(mf.entries[i].path_len == 2);
            }
        CHECK(saw_deep);
    }
}

TEST_CASE("every singleton besides the root is minimal") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n)))
            for (int x = 0; x < n; ++x) {
                const MinimalFamily mf = minimal_family(g, x);
                for (int v = 0; v < n; ++v) {
                    if (v == x) continue;
                    bool found = false;
                    for (std::size_t i : mf.minimal_indices)
                        if (mf.entries[i].set_mask == std::uint64_t(1) << v) found = true;
                    REQUIRE(found);
                }
            }
}

TEST_CASE("closure classes partition the sets avoiding the root") {
    auto check_partition = [](const Graph& g, int x) {
        const MinimalFamily mf = minimal_family(g, x);
        std::vector<std::uint64_t> covered;
        for (std::size_t i : mf.minimal_indices) {
            const MinimalEntry& e = mf.entries[i];
            REQUIRE(static_cast<int>(e.path.size()) == e.path_len + 1);
            std::uint64_t grown = e.set_mask;
            for (int j = 0; j < e.path_len; ++j) {
                grown |= std::uint64_t(1) << e.path[static_cast<std::size_t>(j)];
                covered.push_back(grown);
            }
        }
        std::sort(covered.begin(), covered.end());
        REQUIRE(std::adjacent_find(covered.begin(), covered.end()) == covered.end());  // pairwise disjoint

        VertexSet others;
        for (int v = 0; v < g.order(); ++v)
            if (v != x) others.push_back(v);
        const auto adj = adjacency_masks(g);
        std::vector<std::uint64_t> expected;
        for (std::uint64_t mask = 1; mask < (std::uint64_t(1) << g.order()); ++mask) {
            if (mask >> x & 1) continue;
            if (testsupport::mask_connected(adj, mask)) expected.push_back(mask);
        }
        REQUIRE(covered == expected);
    };
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n)))
            for (int x = 0; x < n; ++x) check_partition(g, x);
    for (int seed = 0; seed < 10; ++seed) {
        FamilySpec spec;
        spec.family = Family::connected_gnm;
        const int n = 8 + seed % 3;
        spec.params["n"] = n;
        spec.params["m"] = n + seed;
        spec.seed = static_cast<std::uint64_t>(seed);
        const Graph g = generate(spec);
        for (int x = 0; x < g.order(); ++x) check_partition(g, x);
    }
}

TEST_CASE("paths within one closure class are nested") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n)))
            for (int x = 0; x < n; ++x) {
                const MinimalFamily mf = minimal_family(g, x);
                std::map<std::uint64_t, std::vector<std::uint64_t>> paths_by_closure;
                for (const auto& e : mf.entries) {
                    std::uint64_t pmask = 0;
                    for (int v : e.path) pmask |= std::uint64_t(1) << v;
                    paths_by_closure[e.closure_mask].push_back(pmask);
                }
                for (auto& kv : paths_by_closure)
                    for (std::size_t i = 0; i < kv.second.size(); ++i)
                        for (std::size_t j = i + 1; j < kv.second.size(); ++j) {
                            const std::uint64_t a = kv.second[i], b = kv.second[j];
                            REQUIRE(((a & b) == a || (a & b) == b));
                        }
            }
}

TEST_CASE("the av inequality with its construction identities") {
    SECTION("triangle: equality") {
        const CheckResult r = check_av_inequality(complete_graph(3), 0);
        CHECK(r.status == CheckStatus::pass);
        CHECK(r.witness.at("equality").get<bool>());
    }
    SECTION("4-cycle: strict") {
        const CheckResult r = check_av_inequality(cycle_graph(4), 0);
        CHECK(r.status == CheckStatus::pass);
        CHECK_FALSE(r.witness.at("equality").get<bool>());
    }
    SECTION("exhaustive through order 5") {
        for (int n = 1; n <= 5; ++n)
            for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n)))
                for (int x = 0; x < n; ++x) REQUIRE(check_av_inequality(g, x).status == CheckStatus::pass);
    }
}

TEST_CASE("even cycles stay below the two-connected av bound") {
    for (int n = 4; n <= 12; n += 2) {
        const MinimalFamily mf = minimal_family(cycle_graph(n), 0);
        INFO("computed av(C_" << n << ", 0) = " << to_fraction(mf.av));
        CHECK(mf.av < Rat(n - 1, 2));
    }
}

TEST_CASE("av ratios fill into a decomposition") {
    const Graph g = bowtie(3);
    CutDecomposition d = cut_decomposition(g, 0);
    WorkBudget budget;
    fill_av_ratios(g, d, budget);
    for (const auto& c : d.components) {
        REQUIRE(c.av_ratio.has_value());
        CHECK(*c.av_ratio == Rat(1, 2));  // av(K_3, x) = 1, order 2
    }
}
