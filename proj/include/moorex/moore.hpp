#pragma once

#include <optional>

#include "moorex/graph.hpp"
#include "moorex/numeric.hpp"

namespace moorex {

// Largest conceivable size of a d-regular graph of diameter k:
// 2k+1 when d = 2, otherwise 1 + d((d-1)^k - 1)/(d-2). Exact integer.
BigInt moore_bound(int d, int k);

// Directed analogue: sum_{i=0..k} d^i = (d^{k+1}-1)/(d-1); k+1 when d = 1.
BigInt directed_moore_bound(int d, int k);

// Gap/approximation accounting for one graph or parameter triple.
// alpha = n/mu and epsilon = 1 - alpha are kept as exact rationals.
struct MooreProfile {
    int d = 0;
    int k = 0;
    bool directed = false;
    BigInt mu;
    std::optional<BigInt> n;
    std::optional<BigInt> additive_gap;  // mu - n
    std::optional<Rational> alpha;       // n / mu
    std::optional<Rational> epsilon;     // 1 - alpha
};

MooreProfile moore_profile(int d, int k, bool directed,
                           std::optional<BigInt> n = std::nullopt);

// Fills d from the degree profile and k from the diameter. Throws for
// non-regular graphs unless force_degree is supplied, and for infinite
// diameter always.
MooreProfile moore_profile(const Graph& g,
                           std::optional<int> force_degree = std::nullopt);

}  // namespace moorex
