#include "moorex/moore.hpp"

#include <stdexcept>

namespace moorex {

BigInt moore_bound(int d, int k) {
    if (d < 2) throw std::invalid_argument("moore_bound requires d >= 2");
    if (k < 1) throw std::invalid_argument("moore_bound requires k >= 1");
    if (d == 2) return BigInt(2 * k + 1);
    return 1 + BigInt(d) * (ipow(d - 1, static_cast<unsigned>(k)) - 1) / (d - 2);
}

BigInt directed_moore_bound(int d, int k) {
    if (d < 1) throw std::invalid_argument("directed_moore_bound requires d >= 1");
    if (k < 1) throw std::invalid_argument("directed_moore_bound requires k >= 1");
    if (d == 1) return BigInt(k + 1);
    return (ipow(d, static_cast<unsigned>(k + 1)) - 1) / (d - 1);
}

MooreProfile moore_profile(int d, int k, bool directed, std::optional<BigInt> n) {
    MooreProfile p;
    p.d = d;
    p.k = k;
    p.directed = directed;
    p.mu = directed ? directed_moore_bound(d, k) : moore_bound(d, k);
    if (n) {
        p.n = *n;
        p.additive_gap = p.mu - *n;
        p.alpha = Rational(*n, p.mu);
        p.epsilon = 1 - *p.alpha;
    }
    return p;
}

MooreProfile moore_profile(const Graph& g, std::optional<int> force_degree) {
    int d;
    if (force_degree) {
        d = *force_degree;
    } else {
        const auto prof = degree_profile(g);
        if (!prof.is_regular) {
            throw std::invalid_argument(
                "graph is not regular; supply an override degree");
        }
        d = *prof.degree;
    }
    const auto diam = diameter(g);
    if (!diam.diameter) {
        throw std::invalid_argument(
            "graph has infinite diameter; Moore profile undefined");
    }
    return moore_profile(d, *diam.diameter, g.is_directed(),
                         BigInt(g.vertex_count()));
}

}  // namespace moorex
