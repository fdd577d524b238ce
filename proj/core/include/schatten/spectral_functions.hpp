#pragma once

#include "schatten/estimator.hpp"

#include <span>
#include <vector>

namespace schatten {

/// Monomial polynomial a_0 + a_1 x + ... (coefficients ascending).
struct Polynomial {
    std::vector<double> coeffs{0.0};

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    double operator()(double x) const;

    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial scaled(double c) const;
};

/**
 * Piecewise-linear step surrogate: 1 above c1, 0 below c2, linear ramp in
 * between. Requires 0 <= c2 < c1 <= 1.
 */
double step_surrogate(double x, double c1, double c2);

struct ChebyshevFit {
    Polynomial q;           // monomial form
    int degree = 0;         // C_b
    double sup_error = 0.0; // measured on a uniform grid over [0, 1]
};

/**
 * Chebyshev-series approximation of the step surrogate: coefficients from
 * the weighted integrals over [c2, c1] (ramp) and [c1, 1] (plateau), degree
 * grown until the sup error over [0, c2] union [c1, 1] drops below
 * `target_sup_error`. Throws if `degree_cap` is reached first.
 */
ChebyshevFit chebyshev_fit(double c1, double c2, double target_sup_error = 0.1,
                           int degree_cap = 40);

/// Same series truncated at a fixed degree; records the achieved sup error.
ChebyshevFit chebyshev_fit_to_degree(double c1, double c2, int degree);

/**
 * Sharpening polynomial of degree 2s+1: the regularized incomplete Beta
 * integral q_s(x) = (1/B(s+1,s+1)) int_0^x t^s (1-t)^s dt, with exact
 * integer coefficient arithmetic. Requires 0 <= s <= 15.
 */
Polynomial beta_sharpen(int s);

/// Monomial expansion of the composition outer(inner(x)).
Polynomial compose_expand(const Polynomial& outer, const Polynomial& inner);

struct PolynomialApprox {
    Polynomial poly;               // monomial coefficients a_0..a_m
    int degree = 0;                // m == (2s+1) * chebyshev_degree
    double c1 = 0.0, c2 = 0.0;
    int chebyshev_degree = 0;      // C_b
    int sharpening = 0;            // s
    double sup_error_estimate = 0.0;
};

struct SurrogateOptions {
    double target_sup_error = 0.1;
    int degree_cap = 40;
    /**
     * Budget on the composed degree (2s+1)*C_b. Expanded monomial
     * coefficients grow like 2^(C_b*(2s+1)), so past a few dozen the
     * combination with Schatten moments loses all precision in doubles;
     * when the target fit would blow the budget, C_b is truncated to
     * max_total_degree/(2s+1) and the (larger) achieved sup error is
     * recorded instead.
     */
    int max_total_degree = 7;
};

/// Fit + sharpen + compose: the polynomial f = q_s(q(x)) used by the rank estimator.
PolynomialApprox build_rank_surrogate(double c1, double c2, int s,
                                      const SurrogateOptions& options = {});

struct GenRankReport {
    double r_hat = 0.0;
    PolynomialApprox approx;
    std::vector<double> per_k; // Schatten power estimates for k = 1..degree
};

/// r_hat = a_0 d + sum_k a_k theta_k for caller-provided moments theta_1..theta_m.
GenRankReport generalized_rank_from_moments(int d, std::span<const double> moments,
                                            const PolynomialApprox& approx);

struct GenRankOptions {
    SurrogateOptions surrogate;
    /// Estimation path stops at k = 7 closed forms; beyond that the
    /// enumeration path runs under this budget.
    std::uint64_t walk_cap = 500'000'000ULL;
};

/**
 * Generalized rank estimate from a sample: builds the surrogate, estimates
 * the first (2s+1)C_b Schatten powers, and combines. Assumes the caller's
 * matrix satisfies ||M||_2 <= 1. Reports which k failed if the enumeration
 * guard trips above k = 7.
 */
GenRankReport generalized_rank(const SampledMatrix& s, const SamplingModel& model, double c1,
                               double c2, int sharpening, const GenRankOptions& options = {});

} // namespace schatten
