#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <queue>

namespace moorex::test {

namespace {

// Builds the tree breadth-first and then recounts it by BFS levels from the
// root, so the result is a vertex count, not a formula.
std::int64_t tree_size(int d, int k, bool directed) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> depth{0};
    std::queue<int> frontier;
    frontier.push(0);
    while (!frontier.empty()) {
        const int u = frontier.front();
        frontier.pop();
        if (depth[u] == k) continue;
        const int children = (directed || u == 0) ? d : d - 1;
        for (int c = 0; c < children; ++c) {
            const int v = static_cast<int>(depth.size());
            depth.push_back(depth[u] + 1);
            edges.emplace_back(u, v);
            frontier.push(v);
        }
    }
    Graph tree(static_cast<int>(depth.size()), directed, edges);
    const auto dist = bfs_distances(tree, 0);
    std::int64_t count = 0;
    for (int x : dist) {
        if (x >= 0 && x <= k) ++count;
    }
    return count;
}

}  // namespace

std::int64_t moore_tree_size(int d, int k) { return tree_size(d, k, false); }

std::int64_t directed_moore_tree_size(int d, int k) { return tree_size(d, k, true); }

std::int64_t count_nb_walks(const Graph& g, int u, int v, int t) {
    std::int64_t count = 0;
    // (previous, current, remaining) depth-first enumeration.
    std::function<void(int, int, int)> walk = [&](int prev, int cur, int left) {
        if (left == 0) {
            if (cur == v) ++count;
            return;
        }
        for (int next : g.neighbors(cur)) {
            if (next == prev) continue;
            walk(cur, next, left - 1);
        }
    };
    walk(-1, u, t);
    return count;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r = r * (n - i) / (i + 1);
    }
    return r;
}

std::vector<BigInt> geronimus_coeffs_closed_form(int d, int t) {
    std::vector<BigInt> coeffs(t + 1, BigInt(0));
    const int q = d - 1;
    coeffs[t] = 1;
    for (int i = 1; 2 * i <= t; ++i) {
        BigInt val = binomial(t - i, i) * ipow(q, static_cast<unsigned>(i)) +
                     binomial(t - 1 - i, i - 1) * ipow(q, static_cast<unsigned>(i - 1));
        if (i % 2 == 1) val = -val;
        coeffs[t - 2 * i] = val;
    }
    return coeffs;
}

std::vector<double> cycle_eigenvalues(int n) {
    std::vector<double> ev(n);
    for (int j = 0; j < n; ++j) {
        ev[j] = 2.0 * std::cos(2.0 * M_PI * j / n);
    }
    std::sort(ev.begin(), ev.end(), std::greater<>());
    return ev;
}

}  // namespace moorex::test
