#include <doctest.h>

#include <cmath>

#include "moorex/constructions.hpp"
#include "moorex/expansion.hpp"
#include "moorex/spectral.hpp"
#include "oracles.hpp"

using namespace moorex;

TEST_CASE("petersen spectrum {3, 1 x5, -2 x4}") {
    const auto s = spectrum(gen_petersen().graph);
    REQUIRE(s.eigenvalues.size() == 10);
    CHECK(s.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-10));
    for (int i = 1; i <= 5; ++i) {
        CHECK(s.eigenvalues[i] == doctest::Approx(1.0).epsilon(1e-10));
    }
    for (int i = 6; i <= 9; ++i) {
        CHECK(s.eigenvalues[i] == doctest::Approx(-2.0).epsilon(1e-10));
    }
    CHECK(*s.lambda_g == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(*s.spectral_gap == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(s.solver_residual < 1e-9 * 4);

    const auto groups = group_eigenvalues(s.eigenvalues);
    REQUIRE(groups.size() == 3);
    CHECK(groups[0].second == 1);
    CHECK(groups[1].second == 5);
    CHECK(groups[2].second == 4);
}

TEST_CASE("cycle spectra match the circulant formula") {
    for (int n : {5, 8, 13}) {
        const auto s = spectrum(gen_cycle(n).graph);
        const auto expected = test::cycle_eigenvalues(n);
        for (int i = 0; i < n; ++i) {
            CHECK(s.eigenvalues[i] == doctest::Approx(expected[i]).epsilon(1e-9));
        }
    }
    // lambda(C_5) = max(|lambda_2|, |lambda_5|) = |2cos(4pi/5)| = (1+sqrt(5))/2
    const auto c5 = spectrum(gen_cycle(5).graph);
    CHECK(*c5.lambda_g == doctest::Approx(-2 * std::cos(4 * M_PI / 5)).epsilon(1e-9));
    CHECK(*c5.lambda_g == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-9));
}

TEST_CASE("K_4 spectrum {3, -1, -1, -1}") {
    const auto s = spectrum(gen_complete(4).graph);
    CHECK(s.eigenvalues[0] == doctest::Approx(3.0));
    for (int i = 1; i < 4; ++i) CHECK(s.eigenvalues[i] == doctest::Approx(-1.0));
    CHECK(*s.lambda_g == doctest::Approx(1.0));
}

TEST_CASE("spectrum rejects directed graphs; trace and moment sums hold") {
    CHECK_THROWS_AS(spectrum(gen_kautz(2, 2).graph), std::invalid_argument);

    for (const auto& gg :
         {gen_petersen(), gen_cycle(9), gen_complete(6), gen_polarity(3)}) {
        const auto s = spectrum(gg.graph);
        double sum = 0, sq = 0;
        for (double ev : s.eigenvalues) {
            sum += ev;
            sq += ev * ev;
        }
        const int n = gg.graph.vertex_count();
        const int maxd = degree_profile(gg.graph).max_out;
        CHECK(std::abs(sum) < 1e-8 * n);
        CHECK(std::abs(sq - 2.0 * gg.graph.edge_count()) < 1e-8 * n * maxd);
    }
}

TEST_CASE("lambda undefined for a single vertex") {
    // n = 1 needs a directed loop or nothing; use a bare vertex
    const Graph trivial(1, false, {});
    const auto s = spectrum(trivial);
    CHECK_FALSE(s.lambda_g.has_value());
    CHECK(s.eigenvalues == std::vector<double>{0.0});
}

TEST_CASE("disconnected regular graph still gets a spectrum") {
    const Graph two_triangles(6, false,
                              {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
    const auto s = spectrum(two_triangles);
    CHECK(s.eigenvalues[0] == doctest::Approx(2.0));
    CHECK(s.eigenvalues[1] == doctest::Approx(2.0));  // one copy per component
    CHECK(*s.spectral_gap == doctest::Approx(0.0));
}

TEST_CASE("diameter-2 spectral bound") {
    const auto petersen = spectral_bound_k2(3, BigInt(10));
    CHECK_FALSE(petersen.vacuous);
    CHECK(petersen.value == 2.0);  // sqrt(9) is exact
    CHECK(*spectrum(gen_petersen().graph).lambda_g ==
          doctest::Approx(2.0).epsilon(1e-10));

    const auto c5 = spectral_bound_k2(2, BigInt(5));
    CHECK(c5.value == doctest::Approx((1 + std::sqrt(5.0)) / 2).epsilon(1e-12));
    // tight on C_5: lambda(C_5) = golden ratio
    CHECK(*spectrum(gen_cycle(5).graph).lambda_g ==
          doctest::Approx(c5.value).epsilon(1e-9));

    for (int d : {2, 3, 5}) {
        CHECK(spectral_bound_k2(d, BigInt(d) * d + d + 1).vacuous);
        CHECK_FALSE(spectral_bound_k2(d, BigInt(d) * d + d).vacuous);
    }
}

TEST_CASE("measured lambda respects the k=2 bound on diameter-2 families") {
    for (const auto& gg : {gen_petersen(), gen_complete_bipartite(3),
                           gen_complete_bipartite(5), gen_polarity(3)}) {
        const auto diam_report = diameter(gg.graph);
        REQUIRE(*diam_report.diameter == 2);
        const int d = degree_profile(gg.graph).max_out;
        const auto bound = spectral_bound_k2(d, BigInt(gg.graph.vertex_count()));
        const auto s = spectrum(gg.graph);
        CHECK(*s.lambda_g <= bound.value + 1e-9);
    }
}

TEST_CASE("cheeger direction against measured expansion") {
    for (const auto& gg : {gen_petersen(), gen_cycle(5), gen_complete(4),
                           gen_complete_bipartite(3), gen_two_cliques_bridged(8)}) {
        const auto s = spectrum(gg.graph);
        const int d = *degree_profile(gg.graph).degree;
        const auto m = exact_expansion(gg.graph);
        CHECK(to_double(m.h_e) >= (d - s.eigenvalues[1]) / 2.0 - 1e-6);
    }
    // petersen is tight: lambda_2 = 1, h_e = 1
    const auto s = spectrum(gen_petersen().graph);
    const auto m = exact_expansion(gen_petersen().graph);
    CHECK(to_double(m.h_e) == doctest::Approx((3 - s.eigenvalues[1]) / 2).epsilon(1e-9));
}

TEST_CASE("regime report arithmetic") {
    const auto p = moore_profile(3, 2, false, BigInt(8));
    const auto r = regime_report(p);
    CHECK(r.additive_gap == 2);
    CHECK(r.epsilon == Rational(1, 5));
    CHECK(r.d_pow_half_k == doctest::Approx(3.0));
    CHECK(r.eps_scale == doctest::Approx(std::sqrt(0.2) * 3).epsilon(1e-12));
    CHECK(r.note.find("constants unspecified") != std::string::npos);

    const auto petersen = regime_report(moore_profile(gen_petersen().graph));
    CHECK(petersen.additive_gap == 0);
    CHECK(petersen.epsilon == 0);
    CHECK(petersen.eps_scale == 0.0);

    const auto c7 = regime_report(moore_profile(gen_cycle(7).graph));
    CHECK(c7.additive_gap == 0);
}

TEST_CASE("two bridged cliques lose their spectral gap as n grows") {
    double prev_ratio = 0.0;
    for (int n : {8, 12, 16, 20}) {
        const auto g = gen_two_cliques_bridged(n).graph;
        const int d = n / 2 - 1;
        const auto s = spectrum(g);
        const double ratio = s.eigenvalues[1] / d;
        CHECK(ratio >= prev_ratio);
        prev_ratio = ratio;
    }
    CHECK(prev_ratio > 0.8);  // nearly closed gap by n = 20
}
