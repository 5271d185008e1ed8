#pragma once

#include <string>
#include <vector>

#include "moorex/graph.hpp"
#include "moorex/numeric.hpp"

namespace moorex {

// The three-term-recurrence family attached to a d-regular graph:
//   P_0 = 1, P_1 = x, P_2 = x^2 - d, P_t = x P_{t-1} - (d-1) P_{t-2}.
// P_t(A) counts non-backtracking walks of length exactly t.
struct GeronimusPoly {
    int d = 0;
    int order = 0;
    std::vector<BigInt> coeffs;  // a_{t,0} .. a_{t,t}
};

// Exact integer coefficients via polynomial shift-and-subtract.
GeronimusPoly geronimus_coeffs(int d, int t);

// P_0(x) .. P_k(x) by the value recurrence (numerically stable path).
std::vector<double> geronimus_values_upto(int d, int k, double x);

// P_t(x) by the value recurrence.
double geronimus_value(int d, int t, double x);

// Horner evaluation of the expanded coefficients; the independent
// counterpart of geronimus_value, kept as its cross-check oracle.
double geronimus_value_by_coeffs(const GeronimusPoly& p, double x);

// Right-hand side of the trigonometric closed form at x = 2 sqrt(d-1) cos(theta):
//   (d-1)^{t/2-1} ((d-1) sin((t+1)theta) - sin((t-1)theta)) / sin(theta), t >= 1.
double geronimus_closed_form(int d, int t, double theta);

struct CoeffRecurrenceReport {
    bool pass = false;
    int t = -1;  // first violation, if any
    int i = -1;
    std::string message;
};

// Verifies a_{t,i} = a_{t-1,i-1} - (d-1) a_{t-2,i} for all 3 <= t <= t_max,
// plus the parity zeros and the unit leading coefficient, in exact integers.
CoeffRecurrenceReport coeff_recurrence_check(int d, int t_max);

using BigMatrix = std::vector<std::vector<BigInt>>;

// M_t = P_t(A) for t = 0..horizon, exact integer entries. Entry (u,v) is the
// number of non-backtracking walks of length exactly t from u to v.
struct NBWalkMatrices {
    int d = 0;
    int horizon = 0;
    std::vector<BigMatrix> mats;
};

// Requires an undirected d-regular graph with d >= 2. Runs in 64-bit
// arithmetic when the entry bound d^2 (d-1)^{horizon-2} allows it and falls
// back to arbitrary precision otherwise.
NBWalkMatrices nb_walk_matrices(const Graph& g, int horizon);

struct PositivityCertificate {
    bool is_positive = false;
    BigInt min_entry;
};

// S = sum_{t=0..horizon} M_t; positive iff every entry >= 1, which holds
// iff diameter(g) <= horizon.
PositivityCertificate positivity_certificate(const Graph& g, int horizon);

struct EigenvalueBoundEntry {
    double lambda = 0.0;
    double lhs = 0.0;   // |sum_{t=0..k} P_t(lambda)|
    double slack = 0.0; // rhs - lhs
    bool pass = false;
    std::string note;
};

struct EigenvalueBoundReport {
    int d = 0;
    int k = 0;
    BigInt mu;
    BigInt n;
    double rhs = 0.0;  // mu - n
    double tol = 0.0;
    bool all_pass = false;
    std::vector<EigenvalueBoundEntry> entries;
};

// Checks |sum_{t=0..k} P_t(lambda)| <= mu_{d,k} - n for every eigenvalue
// except one copy of the principal lambda_1 = d. spectrum must be sorted
// descending. Default tolerance 1e-6 * max(1, mu - n). The bipartite extreme
// lambda = -d attains equality and is annotated rather than special-cased.
EigenvalueBoundReport eigenvalue_bound_check(
    const Graph& g, const std::vector<double>& spectrum,
    std::optional<double> tol = std::nullopt);

}  // namespace moorex
