#include <doctest.h>

#include "moorex/constructions.hpp"
#include "moorex/moore.hpp"

using namespace moorex;

TEST_CASE("cycles") {
    const auto c5 = gen_cycle(5);
    CHECK(c5.graph.vertex_count() == 5);
    CHECK(*diameter(c5.graph).diameter == 2);
    CHECK(BigInt(5) == moore_bound(2, 2));  // odd cycles are d=2 Moore graphs

    const auto c7 = gen_cycle(7);
    CHECK(*diameter(c7.graph).diameter == 3);
    CHECK(BigInt(7) == moore_bound(2, 3));

    const auto c4 = gen_cycle(4);
    CHECK(*diameter(c4.graph).diameter == 2);
    CHECK(BigInt(4) < moore_bound(2, 2));

    CHECK_THROWS_AS(gen_cycle(2), std::invalid_argument);
}

TEST_CASE("de Bruijn digraphs") {
    const auto b23 = gen_debruijn_digraph(2, 3);
    CHECK(b23.graph.vertex_count() == 8);
    CHECK(b23.graph.edge_count() == 16);
    CHECK(*diameter(b23.graph).diameter == 3);
    int loops = 0;
    for (auto [u, v] : b23.graph.edges()) {
        if (u == v) ++loops;
    }
    CHECK(loops == 2);  // constant words 000 and 111

    const auto b21 = gen_debruijn_digraph(2, 1);
    CHECK(b21.graph.vertex_count() == 2);
    CHECK(b21.graph.edge_count() == 4);  // complete digraph with loops

    const auto b32 = gen_debruijn_digraph(3, 2);
    CHECK(b32.graph.vertex_count() == 9);
    CHECK(*diameter(b32.graph).diameter == 2);

    CHECK_THROWS_AS(gen_debruijn_digraph(1, 2), std::invalid_argument);
}

TEST_CASE("undirected de Bruijn graphs") {
    const auto u22 = gen_debruijn_undirected(2, 2);
    CHECK(u22.graph.vertex_count() == 4);
    const auto prof = degree_profile(u22.graph);
    CHECK(prof.min_out == 2);  // constant words lose their loop
    CHECK(prof.max_out == 3);
    CHECK_FALSE(prof.is_regular);

    const auto u21 = gen_debruijn_undirected(2, 1);
    CHECK(u21.graph.vertex_count() == 2);
    CHECK(u21.graph.edge_count() == 1);  // K_2 once loops are dropped

    // For 2-letter words the reversed word is a successor and a predecessor
    // at once, so the degree tops out at 2b-1; 2b needs k >= 3.
    const auto u32 = gen_debruijn_undirected(3, 2);
    CHECK(u32.graph.vertex_count() == 9);
    CHECK(degree_profile(u32.graph).max_out == 5);
    CHECK(degree_profile(gen_debruijn_undirected(3, 3).graph).max_out == 6);
}

TEST_CASE("kautz digraphs") {
    const auto k22 = gen_kautz(2, 2);
    CHECK(k22.graph.vertex_count() == 6);
    CHECK(k22.graph.edge_count() == 12);
    CHECK(*diameter(k22.graph).diameter == 2);

    CHECK(gen_kautz(2, 3).graph.vertex_count() == 12);  // d^k + d^{k-1}

    const auto k31 = gen_kautz(3, 1);
    CHECK(k31.graph.vertex_count() == 4);
    CHECK(k31.graph.edge_count() == 12);  // complete digraph, no loops
    for (auto [u, v] : k31.graph.edges()) CHECK(u != v);

    CHECK_THROWS_AS(gen_kautz(1, 2), std::invalid_argument);
}

TEST_CASE("kautz and de Bruijn digraphs are strongly connected") {
    for (int d = 2; d <= 5; ++d) {
        for (int k = 1; k <= 4; ++k) {
            CHECK(diameter(gen_kautz(d, k).graph).strongly_connected);
            CHECK(diameter(gen_debruijn_digraph(d, k).graph).strongly_connected);
        }
    }
}

TEST_CASE("polarity graphs") {
    const auto q2 = gen_polarity(2);
    CHECK(q2.graph.vertex_count() == 7);
    CHECK(*diameter(q2.graph).diameter == 2);
    const auto prof2 = degree_profile(q2.graph);
    CHECK(prof2.min_out == 2);
    CHECK(prof2.max_out == 3);

    const auto q3 = gen_polarity(3);
    CHECK(q3.graph.vertex_count() == 13);
    // n = d^2 - d + 1 with d = q + 1
    CHECK(q3.graph.vertex_count() == 4 * 4 - 4 + 1);

    CHECK_THROWS_WITH_AS(gen_polarity(4), doctest::Contains("prime"),
                         std::invalid_argument);

    for (int q : {2, 3, 5, 7, 11}) {
        const auto gg = gen_polarity(q);
        CHECK(gg.graph.vertex_count() == q * q + q + 1);
        int absolute = 0;
        for (int v = 0; v < gg.graph.vertex_count(); ++v) {
            const int deg = static_cast<int>(gg.graph.neighbors(v).size());
            CHECK(deg >= q);
            CHECK(deg <= q + 1);
            if (deg == q) ++absolute;
        }
        CHECK(absolute == q + 1);
        CHECK(*diameter(gg.graph).diameter == 2);
    }
}

TEST_CASE("two bridged cliques") {
    const auto g8 = gen_two_cliques_bridged(8);
    CHECK(g8.graph.vertex_count() == 8);
    CHECK(*degree_profile(g8.graph).degree == 3);
    CHECK(*diameter(g8.graph).diameter == 3);

    const auto g6 = gen_two_cliques_bridged(6);
    CHECK(*degree_profile(g6.graph).degree == 2);

    CHECK_THROWS_AS(gen_two_cliques_bridged(5), std::invalid_argument);
    CHECK_THROWS_AS(gen_two_cliques_bridged(4), std::invalid_argument);
}

TEST_CASE("named fixtures") {
    const auto p = gen_petersen();
    CHECK(p.graph.vertex_count() == 10);
    CHECK(*degree_profile(p.graph).degree == 3);
    CHECK(*diameter(p.graph).diameter == 2);

    CHECK(gen_complete(4).graph.edge_count() == 6);
    const auto k33 = gen_complete_bipartite(3);
    CHECK(*degree_profile(k33.graph).degree == 3);
    CHECK(*diameter(k33.graph).diameter == 2);
}

TEST_CASE("generator self-check grid") {
    for (int b = 2; b <= 5; ++b) {
        for (int k = 1; k <= 4; ++k) {
            const auto dg = gen_debruijn_digraph(b, k);
            CHECK(dg.graph.vertex_count() == dg.spec.expected_n);
            CHECK_NOTHROW(gen_debruijn_undirected(b, k));
        }
    }
    for (int d = 2; d <= 5; ++d) {
        for (int k = 1; k <= 4; ++k) {
            const auto kz = gen_kautz(d, k);
            CHECK(kz.graph.vertex_count() ==
                  BigInt(ipow(d, static_cast<unsigned>(k)) +
                         ipow(d, static_cast<unsigned>(k - 1))));
        }
    }
}

TEST_CASE("generated graphs emit the canonical edge-list format") {
    const auto text = to_edge_list(gen_cycle(5).graph);
    CHECK(text == "graph undirected 5 5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
}
