#include <catch2/catch_amalgamated.hpp>

#include <functional>
#include <map>
#include <set>

#include "connset/block_cut.hpp"
#include "connset/generators.hpp"
#include "connset/graph6.hpp"
#include "support/catalog.hpp"
#include "support/helpers.hpp"

using namespace connset;
using testsupport::complete_graph;
using testsupport::cycle_graph;
using testsupport::path_graph;

namespace {

bool throws_code(const std::function<void()>& fn, errc code) {
    try {
        fn();
    } catch (const error& e) {
        return e.code() == code;
    }
    return false;
}

}  // namespace

TEST_CASE("graph invariants are enforced") {
    Graph g(3);
    g.add_edge(0, 1);
    CHECK(throws_code([&] { g.add_edge(1, 1); }, errc::self_loop));
    CHECK(throws_code([&] { g.add_edge(0, 1); }, errc::duplicate_edge));
    CHECK(throws_code([&] { g.add_edge(0, 3); }, errc::vertex_out_of_range));
    CHECK(throws_code([] { Graph bad(0); }, errc::invalid_params));
    CHECK(throws_code([] { Graph bad(Graph::max_order + 1); }, errc::graph_too_large));
}

TEST_CASE("graph6 decoding of the hand-packed records") {
    // "@" = 63+1: K_1
    const Graph k1 = parse_graph6("@");
    CHECK(k1.order() == 1);
    CHECK(k1.edge_count() == 0);

    // "Bw": n=3, body bits 111 -> all three edges
    const Graph k3 = parse_graph6("Bw");
    CHECK(k3.order() == 3);
    CHECK(k3.has_edge(0, 1));
    CHECK(k3.has_edge(0, 2));
    CHECK(k3.has_edge(1, 2));

    // "Bg": n=3, body bits 101 -> edges {0,1},{1,2}
    const Graph p3 = parse_graph6("Bg");
    CHECK(p3.edge_count() == 2);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));
    CHECK_FALSE(p3.has_edge(0, 2));

    CHECK(parse_graph6(">>graph6<<Bw").edge_count() == 3);
}

TEST_CASE("graph6 decoding failures") {
    CHECK(throws_code([] { parse_graph6(std::string("B") + char(50)); }, errc::byte_out_of_range));
    CHECK(throws_code([] { parse_graph6("B"); }, errc::truncated_input));
    CHECK(throws_code([] { parse_graph6("Bww"); }, errc::trailing_garbage));
    CHECK(throws_code([] { parse_graph6(""); }, errc::truncated_input));
    CHECK(throws_code([] { parse_graph6("?"); }, errc::malformed));       // order 0
    CHECK(throws_code([] { parse_graph6("Bh"); }, errc::trailing_garbage));  // nonzero padding
    CHECK(throws_code([] { parse_graph6("~~?????"); }, errc::graph_too_large));
}

TEST_CASE("graph6 long size field") {
    // n = 63 uses the three-byte form
    Graph g(63);
    for (int v = 1; v < 63; ++v) g.add_edge(v - 1, v);
    const std::string rec = encode_graph6(g);
    REQUIRE(rec.size() >= 4);
    CHECK(static_cast<unsigned char>(rec[0]) == 126);
    const Graph back = parse_graph6(rec);
    CHECK(back == g);
}

TEST_CASE("graph6 round-trip on random graphs") {
    SplitMix64 rng(20240912);
    for (int trial = 0; trial < 1000; ++trial) {
        const int n = 1 + static_cast<int>(rng.below(30));
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng.below(3) == 0) g.add_edge(u, v);
        CHECK(parse_graph6(encode_graph6(g)) == g);
    }
}

TEST_CASE("edge list parsing") {
    const Graph p3 = parse_edge_list("3\n0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.has_edge(0, 1));
    CHECK(p3.has_edge(1, 2));

    CHECK(parse_edge_list("1").order() == 1);

    CHECK(throws_code([] { parse_edge_list("2\n0 0"); }, errc::self_loop));
    CHECK(throws_code([] { parse_edge_list("2\n0 1\n1 0"); }, errc::duplicate_edge));
    CHECK(throws_code([] { parse_edge_list("2\n0 5"); }, errc::vertex_out_of_range));
    CHECK(throws_code([] { parse_edge_list("2\n0"); }, errc::malformed));
    CHECK(throws_code([] { parse_edge_list("x"); }, errc::malformed));
    CHECK(throws_code([] { parse_edge_list(""); }, errc::malformed));
}

TEST_CASE("connected components ordering and removal") {
    const Graph p3 = path_graph(3);
    auto comps = connected_components(p3, {1});
    REQUIRE(comps.size() == 2);
    CHECK(comps[0] == VertexSet{0});
    CHECK(comps[1] == VertexSet{2});

    CHECK(connected_components(p3).size() == 1);
    CHECK(is_connected(p3));

    // two K_4 blocks sharing the cut vertex 0
    const Graph b = testsupport::bowtie(4);
    auto parts = connected_components(b, {0});
    REQUIRE(parts.size() == 2);
    CHECK(parts[0].size() == 3);
    CHECK(parts[1].size() == 3);
}

TEST_CASE("bfs spanning tree tie-breaks and distances") {
    // C_4 as 0-1-3-2-0: parent(3) must be the smaller-id neighbor 1
    const Graph c4 = cycle_graph(4) /* edges 01,12,23,30 */;
    Graph labeled(4);
    labeled.add_edge(0, 1);
    labeled.add_edge(0, 2);
    labeled.add_edge(1, 3);
    labeled.add_edge(2, 3);
    const SpanningTree t = bfs_spanning_tree(labeled, 0);
    CHECK(t.parent[1] == 0);
    CHECK(t.parent[2] == 0);
    CHECK(t.parent[3] == 1);
    CHECK(t.depth == std::vector<int>{0, 1, 1, 2});

    // a tree is its own spanning tree
    const Graph star = testsupport::star_graph(4);
    const SpanningTree ts = bfs_spanning_tree(star, 2);
    CHECK(ts.depth[2] == 0);
    CHECK(ts.depth[0] == 1);
    CHECK(ts.parent[4] == 0);

    Graph two(2);
    CHECK(throws_code([&] { bfs_spanning_tree(two, 0); }, errc::disconnected));
    (void)c4;
}

TEST_CASE("even cycles drop exactly one edge, incident to the antipode") {
    for (int n : {4, 6, 8, 10}) {
        const Graph c = cycle_graph(n);
        const SpanningTree t = bfs_spanning_tree(c, 0);
        std::vector<std::pair<int, int>> tree_edges;
        for (int v = 1; v < n; ++v) tree_edges.emplace_back(std::min(v, t.parent[v]), std::max(v, t.parent[v]));
        int missing = 0;
        std::pair<int, int> dropped{-1, -1};
        for (auto e : c.edges())
            if (std::find(tree_edges.begin(), tree_edges.end(), e) == tree_edges.end()) {
                ++missing;
                dropped = e;
            }
        CHECK(missing == 1);
        const int antipode = n / 2;
        CHECK((dropped.first == antipode || dropped.second == antipode));
    }
}

TEST_CASE("bfs depth equals all-pairs distance") {
    // independent oracle: Floyd-Warshall
    auto check_graph = [](const Graph& g) {
        const int n = g.order();
        std::vector<std::vector<int>> dist(n, std::vector<int>(n, 1 << 20));
        for (int v = 0; v < n; ++v) dist[v][v] = 0;
        for (auto [u, v] : g.edges()) dist[u][v] = dist[v][u] = 1;
        for (int k = 0; k < n; ++k)
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    dist[i][j] = std::min(dist[i][j], dist[i][k] + dist[k][j]);
        for (int root = 0; root < n; ++root) {
            const SpanningTree t = bfs_spanning_tree(g, root);
            for (int v = 0; v < n; ++v) {
                REQUIRE(t.depth[v] == dist[root][v]);
                if (v != root) REQUIRE(t.depth[t.parent[v]] == t.depth[v] - 1);
            }
        }
    };
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) check_graph(g);
    for (int seed = 0; seed < 40; ++seed) {
        const int n = 5 + seed % 6;
        FamilySpec spec;
        spec.family = Family::connected_gnm;
        spec.params["n"] = n;
        spec.params["m"] = n - 1 + seed % n;
        spec.seed = static_cast<std::uint64_t>(seed);
        check_graph(generate(spec));
    }
}

TEST_CASE("2-connected depth bound") {
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
            if (!block_cut_tree(g).cut_vertices.empty()) continue;
            for (int root = 0; root < n; ++root) {
                const SpanningTree t = bfs_spanning_tree(g, root);
                const int max_depth = *std::max_element(t.depth.begin(), t.depth.end());
                CHECK(max_depth <= (n - 1 + 1) / 2);
            }
        }
}

TEST_CASE("block decomposition of small shapes") {
    SECTION("P_4: three edge blocks, two cut vertices, none red") {
        const BlockCutTree t = block_cut_tree(path_graph(4));
        REQUIRE(t.blocks.size() == 3);
        CHECK(t.cut_vertices == VertexSet{1, 2});
        for (std::size_t b = 0; b < t.blocks.size(); ++b) {
            CHECK(t.blocks[b].size() == 2);
            CHECK_FALSE(t.block_red[b]);
        }
        CHECK(t.block_leaf[0]);
        CHECK_FALSE(t.block_leaf[1]);  // middle edge {1,2} holds both cut vertices
        CHECK(t.block_leaf[2]);
        CHECK_FALSE(t.cut_blue[0]);
    }
    SECTION("two K_4 sharing a vertex: two red leaf blocks, one cut vertex") {
        const BlockCutTree t = block_cut_tree(testsupport::bowtie(4));
        REQUIRE(t.blocks.size() == 2);
        CHECK(t.cut_vertices == VertexSet{0});
        CHECK(t.block_red[0]);
        CHECK(t.block_red[1]);
        CHECK(t.block_leaf[0]);
        CHECK(t.block_leaf[1]);
        CHECK_FALSE(t.cut_blue[0]);
    }
    SECTION("K_5: one red block, leaf by convention") {
        const BlockCutTree t = block_cut_tree(complete_graph(5));
        REQUIRE(t.blocks.size() == 1);
        CHECK(t.blocks[0] == VertexSet{0, 1, 2, 3, 4});
        CHECK(t.cut_vertices.empty());
        CHECK(t.block_red[0]);
        CHECK(t.block_leaf[0]);
    }
    SECTION("K_1 and K_2 conventions") {
        const BlockCutTree t1 = block_cut_tree(Graph(1));
        REQUIRE(t1.blocks.size() == 1);
        CHECK(t1.block_leaf[0]);
        CHECK_FALSE(t1.block_red[0]);
        const BlockCutTree t2 = block_cut_tree(path_graph(2));
        REQUIRE(t2.blocks.size() == 1);
        CHECK(t2.blocks[0] == VertexSet{0, 1});
    }
    Graph two(2);
    CHECK_THROWS_AS(block_cut_tree(two), error);
}

TEST_CASE("every edge lies in exactly one block; cuts match the tree") {
    for (int n = 2; n <= 7; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
            const BlockCutTree t = block_cut_tree(g);
            for (auto [u, v] : g.edges()) {
                int hosting = 0;
                for (const auto& b : t.blocks)
                    if (std::binary_search(b.begin(), b.end(), u) && std::binary_search(b.begin(), b.end(), v))
                        ++hosting;
                REQUIRE(hosting == 1);
            }
            for (std::size_t ci = 0; ci < t.cut_vertices.size(); ++ci) {
                const int c = t.cut_vertices[ci];
                for (std::size_t bi = 0; bi < t.blocks.size(); ++bi) {
                    const bool inside = std::binary_search(t.blocks[bi].begin(), t.blocks[bi].end(), c);
                    const bool adjacent = std::find(t.cut_blocks[ci].begin(), t.cut_blocks[ci].end(),
                                                    static_cast<int>(bi)) != t.cut_blocks[ci].end();
                    REQUIRE(inside == adjacent);
                }
            }
        }
}

TEST_CASE("near-tree classification") {
    CHECK(classify_near_tree(path_graph(5)) == NearTreeClass::tree);
    CHECK(classify_near_tree(testsupport::star_graph(3)) == NearTreeClass::tree);

    // triangle with a pendant path on each corner
    Graph tri(9);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    tri.add_edge(0, 3);
    tri.add_edge(3, 4);
    tri.add_edge(1, 5);
    tri.add_edge(5, 6);
    tri.add_edge(2, 7);
    tri.add_edge(7, 8);
    CHECK(classify_near_tree(tri) == NearTreeClass::one_red_k3);

    CHECK(classify_near_tree(complete_graph(5)) == NearTreeClass::not_near_tree);
    CHECK(classify_near_tree(testsupport::bowtie(4)) == NearTreeClass::leaf_blocks_34);
    CHECK(classify_near_tree(complete_graph(3)) == NearTreeClass::one_red_k3);
    CHECK(classify_near_tree(complete_graph(4)) == NearTreeClass::leaf_blocks_34);
    CHECK(classify_near_tree(cycle_graph(4)) == NearTreeClass::leaf_blocks_34);
    CHECK(classify_near_tree(cycle_graph(5)) == NearTreeClass::not_near_tree);

    for (int n = 1; n <= 7; ++n)
        for (const auto& g : catalog::decode_all(catalog::connected_graphs6(n))) {
            const bool acyclic = g.edge_count() == g.order() - 1;
            CHECK((classify_near_tree(g) == NearTreeClass::tree) == acyclic);
        }
}

TEST_CASE("catalog canonicalization agrees with the full-permutation route") {
    // every labeled graph on <= 5 vertices, both canonical forms must induce
    // the same partition into isomorphism classes
    for (int n = 2; n <= 5; ++n) {
        std::map<std::string, std::set<std::string>> buckets;
        const int slots = n * (n - 1) / 2;
        for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots); ++mask) {
            Graph g(n);
            int bit = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++bit)
                    if (mask >> bit & 1) g.add_edge(i, j);
            buckets[catalog::canonical_graph6_bruteforce(g)].insert(catalog::canonical_graph6(g));
        }
        std::set<std::string> refined;
        for (const auto& kv : buckets) {
            REQUIRE(kv.second.size() == 1);  // same class, same refined canonical form
            refined.insert(*kv.second.begin());
        }
        REQUIRE(refined.size() == buckets.size());  // distinct classes stay distinct
        const std::size_t totals[] = {0, 1, 2, 4, 11, 34};
        CHECK(buckets.size() == totals[n]);
    }
}

TEST_CASE("catalog stream sizes") {
    CHECK(catalog::connected_graphs6(3).size() == 2);
    CHECK(catalog::connected_graphs6(4).size() == 6);
    CHECK(catalog::connected_graphs6(5).size() == 21);
    CHECK(catalog::connected_graphs6(6).size() == 112);
    CHECK(catalog::trees6(9).size() == 47);
    CHECK(catalog::trees6(10).size() == 106);
}
