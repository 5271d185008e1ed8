#pragma once

#include <optional>
#include <string>
#include <vector>

#include "moorex/graph.hpp"
#include "moorex/moore.hpp"
#include "moorex/numeric.hpp"

namespace moorex {

struct SpectralReport {
    std::vector<double> eigenvalues;     // descending: lambda_1 >= ... >= lambda_n
    std::optional<double> lambda_g;      // max(|lambda_2|, |lambda_n|); needs n >= 2
    std::optional<double> spectral_gap;  // lambda_1 - lambda_g (= d - lambda_g when regular)
    double solver_residual = 0.0;        // max over eigenpairs of ||Av - lambda v||_inf
};

// Full symmetric eigendecomposition of the adjacency matrix. Undirected only.
// Residual contract: solver_residual < 1e-9 * (max_degree + 1) for n <= 2000.
SpectralReport spectrum(const Graph& g);

// Groups eigenvalues whose gaps are below an absolute tolerance; rendering
// aid only, checks always use raw values.
std::vector<std::pair<double, int>> group_eigenvalues(
    const std::vector<double>& descending, double tol = 1e-7);

struct SpectralBoundK2 {
    bool vacuous = false;  // n > d^2 + d: radicand negative
    double value = 0.0;    // (1 + sqrt(1 + 4(d^2 + d - n))) / 2
};

// Closed-form diameter-2 bound on lambda(G). The rational overload serves
// idealized parametric family sizes.
SpectralBoundK2 spectral_bound_k2(int d, const BigInt& n);
SpectralBoundK2 spectral_bound_k2(int d, const Rational& n);

// Indicative scales attached to the asymptotic statements; the constants are
// unspecified in the source material, so nothing here is pass/fail.
struct RegimeReport {
    BigInt additive_gap;       // mu - n
    double d_pow_half_k = 0;   // d^{k/2}, the additive regime scale
    Rational epsilon;          // 1 - n/mu
    double eps_scale = 0;      // epsilon^{1/k} * d, the multiplicative regime scale
    std::string note;
};

RegimeReport regime_report(const MooreProfile& p);

}  // namespace moorex
