#include "schatten/spectral_functions.hpp"

#include "schatten/psd.hpp"
#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace schatten;
using schatten::testing::rel_err;

TEST_CASE("step_surrogate") {
    CHECK(step_surrogate(0.8, 0.6, 0.5) == 1.0);
    CHECK(step_surrogate(0.55, 0.6, 0.5) == doctest::Approx(0.5));
    CHECK(step_surrogate(0.3, 0.6, 0.5) == 0.0);
    CHECK_THROWS_AS(step_surrogate(0.5, 0.5, 0.5), std::invalid_argument);
    CHECK_THROWS_AS(step_surrogate(0.5, 0.4, 0.5), std::invalid_argument);
}

TEST_CASE("chebyshev_fit reaches the target and reports honestly") {
    const auto fit = chebyshev_fit(0.6, 0.5);
    CHECK(fit.sup_error < 0.1);
    CHECK(fit.degree <= 40);
    CHECK(fit.q.degree() == fit.degree);

    // re-measure on a fresh, denser grid (off-ramp domain)
    double worst = 0.0;
    for (int n = 0; n <= 20000; ++n) {
        const double x = n / 20000.0;
        if (x > 0.5 && x < 0.6) continue;
        worst = std::max(worst, std::abs(fit.q(x) - step_surrogate(x, 0.6, 0.5)));
    }
    CHECK(worst <= 0.1 + 1e-6);

    const auto wide = chebyshev_fit(1.0, 0.0);
    CHECK(wide.sup_error < 0.1);

    CHECK_THROWS_AS(chebyshev_fit(0.6, 0.5, 1e-9, 5), std::runtime_error);
}

TEST_CASE("beta_sharpen exact coefficients") {
    const auto q0 = beta_sharpen(0);
    REQUIRE(q0.coeffs.size() == 2);
    CHECK(q0.coeffs[0] == 0.0);
    CHECK(q0.coeffs[1] == 1.0);

    const auto q1 = beta_sharpen(1);
    REQUIRE(q1.coeffs.size() == 4);
    CHECK(q1.coeffs[2] == 3.0);
    CHECK(q1.coeffs[3] == -2.0);

    for (int s : {0, 1, 2, 5, 10, 15})
        CHECK(beta_sharpen(s)(0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(beta_sharpen(7)(1.0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(beta_sharpen(16), std::invalid_argument);
}

TEST_CASE("compose_expand equals nested evaluation") {
    const Polynomial identity{{0.0, 1.0}};
    const auto q1 = beta_sharpen(1);
    const auto same = compose_expand(q1, identity);
    REQUIRE(same.coeffs.size() == q1.coeffs.size());
    for (std::size_t n = 0; n < q1.coeffs.size(); ++n) CHECK(same.coeffs[n] == q1.coeffs[n]);

    const auto nested_is_identity = compose_expand(identity, identity);
    CHECK(nested_is_identity.coeffs[1] == 1.0);

    const auto fit = chebyshev_fit_to_degree(0.6, 0.5, 2);
    const auto composed = compose_expand(q1, fit.q);
    CHECK(composed.degree() == 6);
    for (int n = 0; n <= 1000; ++n) {
        const double x = n / 1000.0;
        CHECK(std::abs(composed(x) - q1(fit.q(x))) < 1e-10);
    }
}

TEST_CASE("sharpened surrogate halves its off-ramp error per unit s") {
    const auto fit = chebyshev_fit(0.6, 0.5, 0.1);
    for (int s : {1, 2, 3}) {
        const auto qs = beta_sharpen(s);
        double worst = 0.0;
        for (int n = 0; n <= 10000; ++n) {
            const double x = n / 10000.0;
            if (x > 0.5 && x < 0.6) continue;
            worst = std::max(worst, std::abs(qs(fit.q(x)) - step_surrogate(x, 0.6, 0.5)));
        }
        CHECK(worst <= std::pow(2.0, -s) + 1e-9);
    }
}

TEST_CASE("spectrum sandwich: rank(c1) <= sum H(sigma) <= rank(c2)") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        auto [m, model] =
            generate_psd(40, 20, SingularValueLaw::two_uniform(0.0, 0.4, 0.6, 1.0), seed);
        int rank_c1 = 0, rank_c2 = 0;
        double hsum = 0.0;
        for (double sv : model.singular_values) {
            rank_c1 += sv > 0.6;
            rank_c2 += sv > 0.5;
            hsum += step_surrogate(sv, 0.6, 0.5);
        }
        CHECK(hsum >= rank_c1 - 1e-12);
        CHECK(hsum <= rank_c2 + 1e-12);
    }
}

TEST_CASE("surrogate budget keeps the expansion tame") {
    const auto approx = build_rank_surrogate(0.6, 0.5, 1);
    CHECK(approx.degree == (2 * 1 + 1) * approx.chebyshev_degree);
    CHECK(approx.degree <= 7);
    CHECK(std::isfinite(approx.poly(0.0)));
    CHECK(std::isfinite(approx.poly(1.0)));
}

TEST_CASE("generalized rank on a two-point spectrum, exact moments") {
    const int d = 200;
    auto [m, model] = generate_psd(d, 10, SingularValueLaw::two_point(0.2, 0.8, 0.5), 42);
    const auto approx = build_rank_surrogate(0.6, 0.5, 1);

    std::vector<double> moments;
    for (int k = 1; k <= approx.degree; ++k) moments.push_back(schatten_power_exact(m, k));
    const auto report = generalized_rank_from_moments(d, moments, approx);
    CHECK(std::abs(report.r_hat - 5.0) <= d * 0.5 * 1.1);
    // the budget fit does far better than the sandwich bound in practice
    CHECK(std::abs(report.r_hat - 5.0) < 2.0);
}

TEST_CASE("generalized rank through the estimation pipeline") {
    const int d = 60;
    auto [m, model] = generate_psd(d, 8, SingularValueLaw::two_point(0.2, 0.8, 0.5), 7);
    const auto report = generalized_rank(SampledMatrix::full(m),
                                         SamplingModel::erdos_renyi(1.0), 0.6, 0.5, 1);
    CHECK(report.approx.degree == 6);
    CHECK(std::abs(report.r_hat - 4.0) < 2.0); // weight 0.5 of r=8 at the top
}

TEST_CASE("zero matrix gives near-zero rank estimate") {
    const int d = 50;
    const auto zero = SampledMatrix::full(SymmetricMatrix(d));
    const auto report =
        generalized_rank(zero, SamplingModel::erdos_renyi(1.0), 0.6, 0.5, 1);
    const auto approx = build_rank_surrogate(0.6, 0.5, 1);
    const double f0 = approx.poly(0.0);
    CHECK(report.r_hat == doctest::Approx(d * f0));
    CHECK(std::abs(report.r_hat) <= d * (0.5 + 0.55)); // 2^-s plus generous fit slack
}
