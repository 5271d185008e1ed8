#include "moorex/expansion.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "moorex/moore.hpp"
#include "moorex/spectral.hpp"

namespace moorex {

namespace {

std::vector<int> mask_to_vertices(std::uint64_t mask) {
    std::vector<int> vs;
    while (mask) {
        const int v = std::countr_zero(mask);
        vs.push_back(v);
        mask &= mask - 1;
    }
    return vs;
}

}  // namespace

ExpansionMeasurement exact_expansion(const Graph& g, int cap) {
    const int n = g.vertex_count();
    if (n < 2) {
        throw std::invalid_argument("expansion undefined for n < 2 (no admissible subset)");
    }
    if (n > cap) {
        throw std::invalid_argument(
            "exhaustive expansion refused: n = " + std::to_string(n) +
            " exceeds the subset cap " + std::to_string(cap) +
            "; raise --exact-cap to force (cost grows as 2^n)");
    }
    if (n > 62) {
        throw std::invalid_argument("exhaustive expansion limited to n <= 62");
    }

    // Out-neighbor bitmasks; for undirected graphs these are the plain
    // neighborhoods, for digraphs a self-loop bit is masked out by ~S below.
    std::vector<std::uint64_t> adj(n, 0);
    for (int u = 0; u < n; ++u) {
        for (int w : g.out_neighbors(u)) adj[u] |= std::uint64_t(1) << w;
    }

    const std::uint64_t full = (std::uint64_t(1) << n) - 1;
    const int half = n / 2;

    // Minimize cut/|S| and |N(S)|/|S| over every subset with 1 <= |S| <= n/2.
    long long best_cut_num = -1, best_cut_den = 1;
    long long best_nbr_num = -1, best_nbr_den = 1;
    std::uint64_t best_cut_mask = 0, best_nbr_mask = 0;

    for (int s = 1; s <= half; ++s) {
        std::uint64_t mask = (std::uint64_t(1) << s) - 1;
        while (mask <= full) {
            const std::uint64_t outside = full & ~mask;
            long long cut = 0;
            std::uint64_t reach = 0;
            std::uint64_t rest = mask;
            while (rest) {
                const int u = std::countr_zero(rest);
                rest &= rest - 1;
                cut += std::popcount(adj[u] & outside);
                reach |= adj[u];
            }
            const long long nbr = std::popcount(reach & outside);
            if (best_cut_num < 0 || cut * best_cut_den < best_cut_num * s) {
                best_cut_num = cut;
                best_cut_den = s;
                best_cut_mask = mask;
            }
            if (best_nbr_num < 0 || nbr * best_nbr_den < best_nbr_num * s) {
                best_nbr_num = nbr;
                best_nbr_den = s;
                best_nbr_mask = mask;
            }
            // Gosper's hack: next subset of the same size.
            const std::uint64_t c = mask & -mask;
            const std::uint64_t r = mask + c;
            if (r > full) break;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
    }

    ExpansionMeasurement m;
    m.subset_cap = cap;
    m.h_e = Rational(best_cut_num, best_cut_den);
    m.h_e_witness = mask_to_vertices(best_cut_mask);
    m.phi_v = Rational(best_nbr_num, best_nbr_den);
    m.phi_v_witness = mask_to_vertices(best_nbr_mask);
    return m;
}

namespace {

BoundEntry rational_entry(std::string id, std::string target, std::string applicability,
                          const Rational& value) {
    BoundEntry e;
    e.id = std::move(id);
    e.target = std::move(target);
    e.kind = "lower";
    e.applicability = std::move(applicability);
    e.applicable = true;
    e.has_value = true;
    e.exact = true;
    e.exact_value = value;
    e.value = to_double(value);
    return e;
}

BoundEntry inapplicable_entry(std::string id, std::string target,
                              std::string applicability, std::string reason) {
    BoundEntry e;
    e.id = std::move(id);
    e.target = std::move(target);
    e.kind = "lower";
    e.applicability = std::move(applicability);
    e.applicable = false;
    e.reason = std::move(reason);
    return e;
}

void require_k(int k) {
    if (k < 1) throw std::invalid_argument("diameter parameter must be >= 1");
}

}  // namespace

std::vector<BoundEntry> coarse_bounds_undirected(int d, int k, const Rational& n) {
    require_k(k);
    if (d <= 2) {
        const std::string why =
            d == 2 ? "derivation divides by d-2; inapplicable at d=2"
                   : "requires degree >= 3";
        return {
            inapplicable_entry("edge_expansion_coarse", "h_e", "undirected", why),
            inapplicable_entry("vertex_expansion_coarse", "phi_V", "undirected", why),
        };
    }
    const BigInt mu = moore_bound(d, k);
    if (n > Rational(mu)) {
        const std::string why = "n exceeds the Moore bound for (d, k)";
        return {
            inapplicable_entry("edge_expansion_coarse", "h_e", "undirected", why),
            inapplicable_entry("vertex_expansion_coarse", "phi_V", "undirected", why),
        };
    }
    const Rational alpha = n / Rational(mu);
    const Rational he =
        alpha * d / (2 * k) * (1 - Rational(1, ipow(d - 1, static_cast<unsigned>(k))));
    const Rational phi = alpha / (2 * (k - 1) + alpha);
    return {
        rational_entry("edge_expansion_coarse", "h_e", "undirected", he),
        rational_entry("vertex_expansion_coarse", "phi_V", "undirected", phi),
    };
}

std::vector<BoundEntry> coarse_bounds_directed(int d, int k, const Rational& n) {
    require_k(k);
    if (d < 2) {
        return {
            inapplicable_entry("edge_expansion_coarse_directed", "h_e", "directed",
                               "derivation divides by d-1; inapplicable at d=1"),
            inapplicable_entry("vertex_expansion_coarse_directed", "phi_V", "directed",
                               "derivation divides by d-1; inapplicable at d=1"),
        };
    }
    const BigInt mu = directed_moore_bound(d, k);
    if (n > Rational(mu)) {
        const std::string why = "n exceeds the directed Moore bound for (d, k)";
        return {
            inapplicable_entry("edge_expansion_coarse_directed", "h_e", "directed", why),
            inapplicable_entry("vertex_expansion_coarse_directed", "phi_V", "directed", why),
        };
    }
    const Rational alpha = n / Rational(mu);
    const Rational he =
        alpha / (2 * k) * (d - Rational(1, ipow(d, static_cast<unsigned>(k))));
    const Rational phi = alpha * d / (2 * (d + 1) * (k - 1) + alpha * d);
    return {
        rational_entry("edge_expansion_coarse_directed", "h_e", "directed", he),
        rational_entry("vertex_expansion_coarse_directed", "phi_V", "directed", phi),
    };
}

std::vector<BoundEntry> refined_bounds_k2(int d, const Rational& n) {
    if (d < 2) {
        return {
            inapplicable_entry("edge_expansion_k2", "h_e", "k=2", "requires degree >= 2"),
            inapplicable_entry("vertex_expansion_k2", "phi_V", "k=2",
                               "requires degree >= 2"),
        };
    }
    const Rational alpha = n / Rational(BigInt(d) * d);
    // 4(1-alpha)d^2 + 4d + 1 = (2d+1)^2 - 4n.
    const Rational radicand = 4 * (1 - alpha) * d * d + 4 * d + 1;

    std::vector<BoundEntry> out;
    if (radicand < 0) {
        out.push_back(inapplicable_entry("edge_expansion_k2", "h_e", "k=2",
                                         "vacuous: radicand negative (n too large)"));
    } else {
        BoundEntry e;
        e.id = "edge_expansion_k2";
        e.target = "h_e";
        e.kind = "lower";
        e.applicability = "k=2";
        e.applicable = true;
        e.has_value = true;
        e.exact = false;
        e.value = (2.0 * d + 1.0 - std::sqrt(to_double(radicand))) / 4.0;
        out.push_back(std::move(e));
    }
    out.push_back(rational_entry("vertex_expansion_k2", "phi_V", "k=2",
                                 2 * alpha / (2 * alpha + 1)));
    return out;
}

std::vector<BoundEntry> refined_bound_k3(int d, const Rational& n) {
    if (d < 2) {
        return {inapplicable_entry("vertex_expansion_k3", "phi_V", "k=3",
                                   "requires degree >= 2")};
    }
    const Rational alpha = n / Rational(ipow(d, 3));
    auto stated = rational_entry("vertex_expansion_k3", "phi_V", "k=3",
                                 alpha / (alpha + 1));
    auto sharper = rational_entry("vertex_expansion_k3_proof_strength", "phi_V", "k=3",
                                  alpha / (alpha + 1 - Rational(1, d)));
    if (d == 2) {
        // C_7 measures phi_V = 1/3 < the stated 7/15: outside the meaningful regime.
        stated.applicable = false;
        stated.reason = "recorded for d >= 3 only; can exceed measured phi_V at d=2";
        sharper.applicable = false;
        sharper.reason = stated.reason;
    }
    return {std::move(stated), std::move(sharper)};
}

std::vector<BoundEntry> cheeger_bounds(int d, int k, const Rational& n, double lambda2) {
    (void)k;
    (void)n;
    BoundEntry e;
    e.id = "edge_expansion_cheeger";
    e.target = "h_e";
    e.kind = "lower";
    e.applicability = "spectral";
    e.applicable = true;
    e.has_value = true;
    e.exact = false;
    e.value = (d - lambda2) / 2.0;

    auto descriptive = [](std::string id) {
        BoundEntry a;
        a.id = std::move(id);
        a.target = "h_e";
        a.kind = "lower";
        a.applicability = "spectral";
        a.applicable = false;
        a.reason = "asymptotic corollary; constants unspecified in source";
        return a;
    };
    return {std::move(e), descriptive("edge_expansion_additive_regime"),
            descriptive("edge_expansion_multiplicative_regime")};
}

std::vector<BoundEntry> bound_table(int d, int k, const Rational& n, bool directed,
                                    std::optional<double> lambda2) {
    std::vector<BoundEntry> out;
    if (directed) {
        for (auto& e : coarse_bounds_directed(d, k, n)) out.push_back(std::move(e));
        return out;
    }
    for (auto& e : coarse_bounds_undirected(d, k, n)) out.push_back(std::move(e));
    if (k == 2) {
        for (auto& e : refined_bounds_k2(d, n)) out.push_back(std::move(e));
        const auto sb = spectral_bound_k2(d, n);
        BoundEntry e;
        e.id = "lambda_k2";
        e.target = "lambda";
        e.kind = "upper";
        e.applicability = "k=2";
        if (sb.vacuous) {
            e.applicable = false;
            e.reason = "vacuous: n exceeds d^2 + d";
        } else {
            e.applicable = true;
            e.has_value = true;
            e.value = sb.value;
        }
        out.push_back(std::move(e));
    }
    if (k == 3) {
        for (auto& e : refined_bound_k3(d, n)) out.push_back(std::move(e));
    }
    if (lambda2) {
        for (auto& e : cheeger_bounds(d, k, n, *lambda2)) out.push_back(std::move(e));
    }
    return out;
}

namespace {

PathCountHelpers path_count_impl(int q, int k, int denom) {
    BigInt f = 0;
    for (int l = 1; l <= k; ++l) {
        f += BigInt(l) * ipow(q, static_cast<unsigned>(l - 1));
    }
    return {f, Rational(BigInt(k) * ipow(q, static_cast<unsigned>(k)), denom)};
}

}  // namespace

PathCountHelpers path_count_helpers(int d, int k) {
    require_k(k);
    if (d < 3) throw std::invalid_argument("path count helper requires d >= 3");
    return path_count_impl(d - 1, k, d - 2);
}

PathCountHelpers path_count_helpers_directed(int d, int k) {
    require_k(k);
    if (d < 2) throw std::invalid_argument("directed path count helper requires d >= 2");
    return path_count_impl(d, k, d - 1);
}

}  // namespace moorex
