#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moorex/graph.hpp"
#include "moorex/numeric.hpp"

namespace moorex {

inline constexpr int kDefaultSubsetCap = 24;

// Exact h_e and phi_V from exhaustive enumeration of all nonempty subsets
// with |S| <= n/2. The witnesses achieve the minima; ties resolve to the
// lexicographically smallest subset so results are reproducible.
struct ExpansionMeasurement {
    Rational h_e;
    std::vector<int> h_e_witness;
    Rational phi_v;
    std::vector<int> phi_v_witness;
    int subset_cap = kDefaultSubsetCap;
};

// Directed cuts count only edges from S to its complement; the neighborhood
// N(S) is the out-neighborhood outside S. Refuses graphs above the cap.
ExpansionMeasurement exact_expansion(const Graph& g, int cap = kDefaultSubsetCap);

// One closed-form guarantee, evaluated from (d, k, n) so it applies both to
// measured graphs and to idealized parametric families.
struct BoundEntry {
    std::string id;             // stable key, e.g. "edge_expansion_coarse"
    std::string target;         // "h_e" | "phi_V" | "lambda"
    std::string kind;           // "lower" | "upper"
    std::string applicability;  // "undirected" | "directed" | "k=2" | "k=3" | "spectral"
    bool applicable = false;    // assertable against measurements
    std::string reason;         // why not applicable, or a qualifying note
    bool has_value = false;     // a value may be reported even when not assertable
    bool exact = false;         // value is an exact rational
    Rational exact_value;
    double value = 0.0;
};

// h_e >= (alpha d / 2k)(1 - 1/(d-1)^k) and phi_V >= alpha/(2(k-1)+alpha),
// alpha = n/mu_{d,k}. Derivation divides by d-2, so d >= 3.
std::vector<BoundEntry> coarse_bounds_undirected(int d, int k, const Rational& n);

// Directed analogue with alpha = n/mu~_{d,k}: h >= (alpha/2k)(d - 1/d^k),
// phi_V >= alpha d/(2(d+1)(k-1) + alpha d). Requires d >= 2.
std::vector<BoundEntry> coarse_bounds_directed(int d, int k, const Rational& n);

// Diameter-2 refinements with alpha = n/d^2 (not n/mu):
// h_e >= (2d+1 - sqrt(4(1-alpha)d^2 + 4d + 1))/4 and phi_V >= 2alpha/(2alpha+1).
std::vector<BoundEntry> refined_bounds_k2(int d, const Rational& n);

// Diameter-3 vertex bound with alpha = n/d^3: the stated alpha/(alpha+1) and
// the sharper alpha/(alpha+1-1/d) that the counting argument actually yields.
// Recorded as applicable for d >= 3 only; at d = 2 the stated bound can
// exceed the measured phi_V of legitimate graphs (C_7), so it is surfaced
// but not asserted there.
std::vector<BoundEntry> refined_bound_k3(int d, const Rational& n);

// h_e >= (d - lambda_2)/2, plus descriptive entries for the two asymptotic
// corollaries whose constants are unspecified.
std::vector<BoundEntry> cheeger_bounds(int d, int k, const Rational& n, double lambda2);

// All rows applicable to one (d, k, n, regime); lambda2 adds the
// spectral-derived rows.
std::vector<BoundEntry> bound_table(int d, int k, const Rational& n, bool directed,
                                    std::optional<double> lambda2 = std::nullopt);

struct PathCountHelpers {
    BigInt f;        // f_q(k) = sum_{l=1..k} l q^{l-1}
    Rational upper;  // closed-form upper bound on f
};

// Undirected counting helper with q = d-1 and bound k(d-1)^k/(d-2); d >= 3.
PathCountHelpers path_count_helpers(int d, int k);

// Directed variant with q = d and bound k d^k/(d-1); d >= 2.
PathCountHelpers path_count_helpers_directed(int d, int k);

}  // namespace moorex
