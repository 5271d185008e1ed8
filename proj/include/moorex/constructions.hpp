#pragma once

#include <map>
#include <optional>
#include <string>

#include "moorex/graph.hpp"
#include "moorex/numeric.hpp"

namespace moorex {

// Expected parameters of a generated family member. Every generator
// self-checks the constructed graph against these before returning.
struct FamilySpec {
    std::string family;
    std::map<std::string, int> params;
    int expected_n = 0;
    std::optional<int> expected_d;        // regular families
    int expected_min_degree = 0;          // near-regular families
    int expected_max_degree = 0;
    int expected_k = 0;
    bool directed = false;
};

struct GeneratedGraph {
    Graph graph;
    FamilySpec spec;
};

// C_n: the d=2 family; odd cycles meet the Moore bound. n >= 3.
GeneratedGraph gen_cycle(int n);

// K_m, the (m-1, 1) family. m >= 2.
GeneratedGraph gen_complete(int m);

// K_{m,m}, the bipartite (m, 2) family. m >= 2.
GeneratedGraph gen_complete_bipartite(int m);

// The (3, 2) Moore graph on 10 vertices.
GeneratedGraph gen_petersen();

// Shift digraph on words of length k over b symbols; b^k vertices, in- and
// out-degree b, loops at the constant words, diameter k. b >= 2, k >= 1.
GeneratedGraph gen_debruijn_digraph(int b, int k);

// Underlying simple undirected graph of the digraph, loops removed.
// Near-regular with degrees in [2b-2, 2b]; the profile is reported honestly.
GeneratedGraph gen_debruijn_undirected(int b, int k);

// Words of length k over d+1 symbols with distinct consecutive symbols;
// (d+1) d^{k-1} vertices, in- and out-degree d, no loops, diameter k.
GeneratedGraph gen_kautz(int d, int k);

// Projective-plane polarity graph over the prime field F_q: q^2+q+1 points,
// u ~ v iff u.v = 0 (mod q). Exactly q+1 absolute points of degree q, the
// rest have degree q+1; diameter 2. Prime q only.
GeneratedGraph gen_polarity(int q);

// Two cliques of size n/2, one edge removed from each, two disjoint bridges
// restoring (n/2-1)-regularity; diameter 3. The canonical low-diameter
// non-expander. n even, n >= 6.
GeneratedGraph gen_two_cliques_bridged(int n);

}  // namespace moorex
