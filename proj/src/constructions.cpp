#include "moorex/constructions.hpp"

#include <algorithm>
#include <array>
#include <set>
#include <stdexcept>

namespace moorex {

namespace {

void self_check(const GeneratedGraph& gg) {
    const auto& g = gg.graph;
    const auto& s = gg.spec;
    if (g.vertex_count() != s.expected_n) {
        throw std::logic_error(s.family + " self-check: vertex count " +
                               std::to_string(g.vertex_count()) + " != expected " +
                               std::to_string(s.expected_n));
    }
    const auto prof = degree_profile(g);
    if (s.expected_d) {
        if (!prof.is_regular || *prof.degree != *s.expected_d) {
            throw std::logic_error(s.family + " self-check: not " +
                                   std::to_string(*s.expected_d) + "-regular");
        }
    } else {
        if (prof.min_out < s.expected_min_degree || prof.max_out > s.expected_max_degree) {
            throw std::logic_error(s.family + " self-check: degree range [" +
                                   std::to_string(prof.min_out) + ", " +
                                   std::to_string(prof.max_out) + "] outside expected");
        }
    }
    const auto diam = diameter(g);
    if (!diam.diameter || *diam.diameter != s.expected_k) {
        throw std::logic_error(s.family + " self-check: diameter mismatch");
    }
}

GeneratedGraph checked(Graph g, FamilySpec spec) {
    GeneratedGraph gg{std::move(g), std::move(spec)};
    self_check(gg);
    return gg;
}

bool is_prime(int q) {
    if (q < 2) return false;
    for (int p = 2; p * p <= q; ++p) {
        if (q % p == 0) return false;
    }
    return true;
}

}  // namespace

GeneratedGraph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    EdgeList edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    FamilySpec spec{"cycle", {{"n", n}}, n, 2, 2, 2, n / 2, false};
    return checked(Graph(n, false, std::move(edges)), std::move(spec));
}

GeneratedGraph gen_complete(int m) {
    if (m < 2) throw std::invalid_argument("complete graph requires m >= 2");
    EdgeList edges;
    for (int u = 0; u < m; ++u)
        for (int v = u + 1; v < m; ++v) edges.emplace_back(u, v);
    FamilySpec spec{"complete", {{"m", m}}, m, m - 1, m - 1, m - 1, 1, false};
    return checked(Graph(m, false, std::move(edges)), std::move(spec));
}

GeneratedGraph gen_complete_bipartite(int m) {
    if (m < 2) throw std::invalid_argument("complete bipartite requires m >= 2");
    EdgeList edges;
    for (int u = 0; u < m; ++u)
        for (int v = 0; v < m; ++v) edges.emplace_back(u, m + v);
    FamilySpec spec{"complete_bipartite", {{"m", m}}, 2 * m, m, m, m, 2, false};
    return checked(Graph(2 * m, false, std::move(edges)), std::move(spec));
}

GeneratedGraph gen_petersen() {
    EdgeList edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer 5-cycle
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    FamilySpec spec{"petersen", {}, 10, 3, 3, 3, 2, false};
    return checked(Graph(10, false, std::move(edges)), std::move(spec));
}

namespace {

long long checked_word_count(int base, int k, const char* family) {
    long long n = 1;
    for (int i = 0; i < k; ++i) {
        n *= base;
        if (n > (1 << 20)) {
            throw std::invalid_argument(std::string(family) +
                                        ": parameters give more than 2^20 vertices");
        }
    }
    return n;
}

}  // namespace

GeneratedGraph gen_debruijn_digraph(int b, int k) {
    if (b < 2) throw std::invalid_argument("de Bruijn digraph requires alphabet b >= 2");
    if (k < 1) throw std::invalid_argument("de Bruijn digraph requires word length k >= 1");
    const long long n = checked_word_count(b, k, "de Bruijn");
    long long suffix = n / b;  // b^{k-1}
    EdgeList edges;
    for (long long w = 0; w < n; ++w) {
        for (int s = 0; s < b; ++s) {
            edges.emplace_back(static_cast<int>(w),
                               static_cast<int>((w % suffix) * b + s));
        }
    }
    FamilySpec spec{"debruijn_digraph", {{"b", b}, {"k", k}},
                    static_cast<int>(n), b, b, b, k, true};
    return checked(Graph(static_cast<int>(n), true, std::move(edges)), std::move(spec));
}

GeneratedGraph gen_debruijn_undirected(int b, int k) {
    auto base = gen_debruijn_digraph(b, k);
    std::set<std::pair<int, int>> undirected;
    for (auto [u, v] : base.graph.edges()) {
        if (u == v) continue;  // loops dropped
        undirected.insert({std::min(u, v), std::max(u, v)});
    }
    EdgeList edges(undirected.begin(), undirected.end());
    Graph g(base.graph.vertex_count(), false, std::move(edges));
    const auto diam = diameter(g);
    FamilySpec spec{"debruijn_undirected", {{"b", b}, {"k", k}},
                    g.vertex_count(), std::nullopt, 1, 2 * b,
                    diam.diameter.value_or(-1), false};
    // The underlying graph is only near-regular; its diameter never exceeds
    // the digraph's k but may undercut it, so the spec records the measured
    // value and the check below enforces the upper bound.
    if (!diam.diameter || *diam.diameter > k) {
        throw std::logic_error("debruijn_undirected self-check: diameter exceeds k");
    }
    return checked(std::move(g), std::move(spec));
}

GeneratedGraph gen_kautz(int d, int k) {
    if (d < 2) throw std::invalid_argument("Kautz digraph requires d >= 2");
    if (k < 1) throw std::invalid_argument("Kautz digraph requires k >= 1");
    checked_word_count(d + 1, k, "Kautz");

    // Words of length k over {0..d} with distinct consecutive symbols,
    // enumerated lexicographically for stable vertex ids.
    std::vector<std::vector<int>> words;
    std::vector<int> word;
    auto extend = [&](auto&& self) -> void {
        if (static_cast<int>(word.size()) == k) {
            words.push_back(word);
            return;
        }
        for (int s = 0; s <= d; ++s) {
            if (!word.empty() && word.back() == s) continue;
            word.push_back(s);
            self(self);
            word.pop_back();
        }
    };
    extend(extend);

    std::map<std::vector<int>, int> index;
    for (std::size_t i = 0; i < words.size(); ++i) index[words[i]] = static_cast<int>(i);

    EdgeList edges;
    for (std::size_t i = 0; i < words.size(); ++i) {
        std::vector<int> next(words[i].begin() + 1, words[i].end());
        next.push_back(0);
        for (int s = 0; s <= d; ++s) {
            if (s == words[i].back()) continue;
            next.back() = s;
            edges.emplace_back(static_cast<int>(i), index.at(next));
        }
    }
    const int n = static_cast<int>(words.size());
    FamilySpec spec{"kautz", {{"d", d}, {"k", k}}, n, d, d, d, k, true};
    return checked(Graph(n, true, std::move(edges)), std::move(spec));
}

GeneratedGraph gen_polarity(int q) {
    if (!is_prime(q)) throw std::invalid_argument("q must be prime");

    // Canonical projective points over F_q: first nonzero coordinate = 1,
    // enumerated as (1,a,b), then (0,1,b), then (0,0,1).
    std::vector<std::array<int, 3>> points;
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) points.push_back({1, a, b});
    for (int b = 0; b < q; ++b) points.push_back({0, 1, b});
    points.push_back({0, 0, 1});

    const int n = static_cast<int>(points.size());
    EdgeList edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            int dot = 0;
            for (int c = 0; c < 3; ++c) dot += points[u][c] * points[v][c];
            if (dot % q == 0) edges.emplace_back(u, v);
        }
    }
    FamilySpec spec{"polarity", {{"q", q}}, n, std::nullopt, q, q + 1, 2, false};
    auto gg = checked(Graph(n, false, std::move(edges)), std::move(spec));

    // Exactly q+1 absolute points (self-orthogonal) of degree q.
    int absolute = 0;
    for (int v = 0; v < n; ++v) {
        if (static_cast<int>(gg.graph.neighbors(v).size()) == q) ++absolute;
    }
    if (absolute != q + 1) {
        throw std::logic_error("polarity self-check: absolute point count mismatch");
    }
    return gg;
}

GeneratedGraph gen_two_cliques_bridged(int n) {
    if (n < 6 || n % 2 != 0) {
        throw std::invalid_argument("two bridged cliques require even n >= 6");
    }
    const int h = n / 2;
    EdgeList edges;
    auto add_clique = [&](int lo, int skip_a, int skip_b) {
        for (int u = lo; u < lo + h; ++u) {
            for (int v = u + 1; v < lo + h; ++v) {
                if (u == skip_a && v == skip_b) continue;
                edges.emplace_back(u, v);
            }
        }
    };
    // Remove {0,1} and {h,h+1}; bridge {0,h} and {1,h+1}.
    add_clique(0, 0, 1);
    add_clique(h, h, h + 1);
    edges.emplace_back(0, h);
    edges.emplace_back(1, h + 1);
    FamilySpec spec{"two_cliques_bridged", {{"n", n}}, n, h - 1, h - 1, h - 1, 3, false};
    return checked(Graph(n, false, std::move(edges)), std::move(spec));
}

}  // namespace moorex
