#include "moorex/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include <Eigen/Dense>

namespace moorex {

SpectralReport spectrum(const Graph& g) {
    if (g.is_directed()) {
        throw std::invalid_argument("spectral analysis is undirected-only");
    }
    const int n = g.vertex_count();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (const auto& [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigendecomposition failed to converge");
    }

    SpectralReport r;
    r.eigenvalues.resize(n);
    for (int i = 0; i < n; ++i) {
        r.eigenvalues[i] = solver.eigenvalues()(n - 1 - i);  // descending
    }

    const Eigen::MatrixXd residual =
        a * solver.eigenvectors() -
        solver.eigenvectors() * solver.eigenvalues().asDiagonal();
    r.solver_residual = residual.cwiseAbs().maxCoeff();

    if (n >= 2) {
        r.lambda_g = std::max(std::abs(r.eigenvalues[1]),
                              std::abs(r.eigenvalues[n - 1]));
        r.spectral_gap = r.eigenvalues[0] - *r.lambda_g;
    }
    return r;
}

std::vector<std::pair<double, int>> group_eigenvalues(
    const std::vector<double>& descending, double tol) {
    std::vector<std::pair<double, int>> groups;
    for (double v : descending) {
        if (!groups.empty() && std::abs(groups.back().first - v) <= tol) {
            ++groups.back().second;
        } else {
            groups.emplace_back(v, 1);
        }
    }
    return groups;
}

SpectralBoundK2 spectral_bound_k2(int d, const BigInt& n) {
    return spectral_bound_k2(d, Rational(n));
}

SpectralBoundK2 spectral_bound_k2(int d, const Rational& n) {
    SpectralBoundK2 b;
    const Rational radicand = 1 + 4 * (Rational(BigInt(d) * d) + d - n);
    if (radicand < 0) {
        b.vacuous = true;
        return b;
    }
    b.value = (1.0 + std::sqrt(to_double(radicand))) / 2.0;
    return b;
}

RegimeReport regime_report(const MooreProfile& p) {
    if (!p.n) {
        throw std::invalid_argument("regime report requires a profile with n");
    }
    RegimeReport r;
    r.additive_gap = *p.additive_gap;
    r.d_pow_half_k = std::pow(static_cast<double>(p.d), p.k / 2.0);
    r.epsilon = *p.epsilon;
    const double eps = to_double(r.epsilon);
    r.eps_scale = eps <= 0.0 ? 0.0 : std::pow(eps, 1.0 / p.k) * p.d;
    r.note = "indicative, constants unspecified in source";
    return r;
}

}  // namespace moorex
