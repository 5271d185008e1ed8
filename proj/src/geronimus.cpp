#include "moorex/geronimus.hpp"

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "moorex/moore.hpp"

namespace moorex {

namespace {

void require_poly_params(int d, int t) {
    if (d < 2) throw std::invalid_argument("Geronimus polynomials require d >= 2");
    if (t < 0) throw std::invalid_argument("polynomial order must be >= 0");
}

}  // namespace

GeronimusPoly geronimus_coeffs(int d, int t) {
    require_poly_params(d, t);
    std::vector<BigInt> prev2{1};      // P_0
    if (t == 0) return {d, 0, prev2};
    std::vector<BigInt> prev{0, 1};    // P_1
    if (t == 1) return {d, 1, prev};
    std::vector<BigInt> cur{-d, 0, 1}; // P_2
    for (int s = 3; s <= t; ++s) {
        prev2 = std::move(prev);
        prev = std::move(cur);
        cur.assign(s + 1, 0);
        for (int i = 0; i < s; ++i) cur[i + 1] = prev[i];        // x * P_{s-1}
        for (int i = 0; i <= s - 2; ++i) cur[i] -= (d - 1) * prev2[i];
    }
    return {d, t, cur};
}

std::vector<double> geronimus_values_upto(int d, int k, double x) {
    require_poly_params(d, k);
    std::vector<double> vals(k + 1);
    vals[0] = 1.0;
    if (k >= 1) vals[1] = x;
    if (k >= 2) vals[2] = x * x - d;
    for (int t = 3; t <= k; ++t) {
        vals[t] = x * vals[t - 1] - (d - 1) * vals[t - 2];
    }
    return vals;
}

double geronimus_value(int d, int t, double x) {
    return geronimus_values_upto(d, t, x).back();
}

double geronimus_value_by_coeffs(const GeronimusPoly& p, double x) {
    double acc = 0.0;
    for (int i = p.order; i >= 0; --i) {
        acc = acc * x + to_double(p.coeffs[i]);
    }
    return acc;
}

double geronimus_closed_form(int d, int t, double theta) {
    if (t < 1) throw std::invalid_argument("closed form stated for t >= 1");
    const double q = d - 1;
    return std::pow(q, t / 2.0 - 1.0) *
           (q * std::sin((t + 1) * theta) - std::sin((t - 1) * theta)) /
           std::sin(theta);
}

CoeffRecurrenceReport coeff_recurrence_check(int d, int t_max) {
    if (t_max < 3) throw std::invalid_argument("coeff_recurrence_check requires t_max >= 3");
    CoeffRecurrenceReport r;
    std::vector<GeronimusPoly> polys;
    polys.reserve(t_max + 1);
    for (int t = 0; t <= t_max; ++t) polys.push_back(geronimus_coeffs(d, t));

    auto coeff = [&](int t, int i) -> BigInt {
        if (i < 0 || i > t) return BigInt(0);
        return polys[t].coeffs[i];
    };
    auto fail = [&](int t, int i, const std::string& what) {
        r.pass = false;
        r.t = t;
        r.i = i;
        r.message = what + " at t=" + std::to_string(t) + ", i=" + std::to_string(i);
        return r;
    };

    for (int t = 0; t <= t_max; ++t) {
        if (coeff(t, t) != 1) return fail(t, t, "leading coefficient != 1");
        for (int i = 0; i <= t; ++i) {
            if ((t - i) % 2 == 1 && coeff(t, i) != 0) {
                return fail(t, i, "parity violation: nonzero coefficient");
            }
        }
    }
    for (int t = 3; t <= t_max; ++t) {
        for (int i = 0; i <= t; ++i) {
            if (coeff(t, i) != coeff(t - 1, i - 1) - (d - 1) * coeff(t - 2, i)) {
                return fail(t, i, "recurrence violation");
            }
        }
    }
    r.pass = true;
    r.message = "recurrence, parity and leading coefficient verified for t <= " +
                std::to_string(t_max);
    return r;
}

namespace {

int require_regular_undirected(const Graph& g) {
    if (g.is_directed()) {
        throw std::invalid_argument("non-backtracking walk matrices are undirected-only");
    }
    const auto prof = degree_profile(g);
    if (!prof.is_regular) {
        throw std::invalid_argument("non-backtracking walk matrices require a regular graph");
    }
    if (*prof.degree < 2) {
        throw std::invalid_argument("non-backtracking walk matrices require d >= 2");
    }
    return *prof.degree;
}

// M_t = A M_{t-1} - (d-1) M_{t-2}, computed through adjacency lists:
// row u of A*M is the sum of M's rows over u's neighbors.
template <typename Int>
std::vector<std::vector<std::vector<Int>>> walk_matrices(const Graph& g, int d,
                                                         int horizon) {
    const int n = g.vertex_count();
    using Mat = std::vector<std::vector<Int>>;
    std::vector<Mat> mats;
    mats.reserve(horizon + 1);

    Mat ident(n, std::vector<Int>(n, Int(0)));
    for (int v = 0; v < n; ++v) ident[v][v] = Int(1);
    mats.push_back(std::move(ident));
    if (horizon == 0) return mats;

    Mat adj(n, std::vector<Int>(n, Int(0)));
    for (int u = 0; u < n; ++u) {
        for (int w : g.neighbors(u)) adj[u][w] = Int(1);
    }
    mats.push_back(std::move(adj));

    for (int t = 2; t <= horizon; ++t) {
        Mat next(n, std::vector<Int>(n, Int(0)));
        const Mat& m1 = mats[t - 1];
        const Mat& m2 = mats[t - 2];
        for (int u = 0; u < n; ++u) {
            auto& row = next[u];
            for (int w : g.neighbors(u)) {
                const auto& src = m1[w];
                for (int v = 0; v < n; ++v) row[v] += src[v];
            }
        }
        if (t == 2) {
            for (int v = 0; v < n; ++v) next[v][v] -= d;
        } else {
            const Int c(d - 1);
            for (int u = 0; u < n; ++u) {
                for (int v = 0; v < n; ++v) next[u][v] -= c * m2[u][v];
            }
        }
        mats.push_back(std::move(next));
    }
    return mats;
}

}  // namespace

NBWalkMatrices nb_walk_matrices(const Graph& g, int horizon) {
    if (horizon < 0) throw std::invalid_argument("horizon must be >= 0");
    const int d = require_regular_undirected(g);
    const int n = g.vertex_count();

    NBWalkMatrices out;
    out.d = d;
    out.horizon = horizon;

    // Entries of M_t are bounded by the row sum d(d-1)^{t-1}; the largest
    // intermediate value is bounded by d times that. Use int64 when safe.
    BigInt peak = BigInt(d) * d *
                  ipow(d - 1, static_cast<unsigned>(std::max(horizon, 2) - 2));
    if (fits_int64(peak * n)) {
        auto mats = walk_matrices<std::int64_t>(g, d, horizon);
        out.mats.reserve(mats.size());
        for (auto& m : mats) {
            BigMatrix big(n, std::vector<BigInt>(n));
            for (int u = 0; u < n; ++u)
                for (int v = 0; v < n; ++v) big[u][v] = m[u][v];
            out.mats.push_back(std::move(big));
        }
    } else {
        out.mats = walk_matrices<BigInt>(g, d, horizon);
    }
    return out;
}

PositivityCertificate positivity_certificate(const Graph& g, int horizon) {
    const auto walks = nb_walk_matrices(g, horizon);
    const int n = g.vertex_count();
    BigMatrix sum(n, std::vector<BigInt>(n, 0));
    for (const auto& m : walks.mats) {
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) sum[u][v] += m[u][v];
    }
    PositivityCertificate cert;
    cert.min_entry = sum[0][0];
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            if (sum[u][v] < cert.min_entry) cert.min_entry = sum[u][v];
    cert.is_positive = cert.min_entry >= 1;
    return cert;
}

EigenvalueBoundReport eigenvalue_bound_check(const Graph& g,
                                             const std::vector<double>& spectrum,
                                             std::optional<double> tol) {
    if (g.is_directed()) {
        throw std::invalid_argument("eigenvalue bound check is undirected-only");
    }
    const auto profile = moore_profile(g);  // validates regularity + finite diameter
    if (spectrum.size() != static_cast<std::size_t>(g.vertex_count())) {
        throw std::invalid_argument("spectrum size does not match vertex count");
    }

    EigenvalueBoundReport report;
    report.d = profile.d;
    report.k = profile.k;
    report.mu = profile.mu;
    report.n = *profile.n;
    report.rhs = to_double(*profile.additive_gap);
    report.tol = tol ? *tol : 1e-6 * std::max(1.0, report.rhs);
    report.all_pass = true;

    // Skip one copy of the principal eigenvalue lambda_1 = d (index 0).
    for (std::size_t i = 1; i < spectrum.size(); ++i) {
        EigenvalueBoundEntry e;
        e.lambda = spectrum[i];
        const auto vals = geronimus_values_upto(profile.d, profile.k, e.lambda);
        double sum = 0.0;
        for (double v : vals) sum += v;
        e.lhs = std::abs(sum);
        e.slack = report.rhs - e.lhs;
        e.pass = e.slack >= -report.tol;
        if (std::abs(e.lambda + profile.d) <= 1e-7 * std::max(1, profile.d)) {
            e.note = "lambda = -d (bipartite extreme): equality expected";
        }
        if (!e.pass) report.all_pass = false;
        report.entries.push_back(std::move(e));
    }
    return report;
}

}  // namespace moorex
