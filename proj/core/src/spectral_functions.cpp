#include "schatten/spectral_functions.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace schatten {

double Polynomial::operator()(double x) const {
    double acc = 0.0;
    for (std::size_t n = coeffs.size(); n-- > 0;) acc = acc * x + coeffs[n];
    return acc;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out;
    out.coeffs.assign(std::max(coeffs.size(), other.coeffs.size()), 0.0);
    for (std::size_t n = 0; n < coeffs.size(); ++n) out.coeffs[n] += coeffs[n];
    for (std::size_t n = 0; n < other.coeffs.size(); ++n) out.coeffs[n] += other.coeffs[n];
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    out.coeffs.assign(coeffs.size() + other.coeffs.size() - 1, 0.0);
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        for (std::size_t j = 0; j < other.coeffs.size(); ++j)
            out.coeffs[i + j] += coeffs[i] * other.coeffs[j];
    return out;
}

Polynomial Polynomial::scaled(double c) const {
    Polynomial out = *this;
    for (double& a : out.coeffs) a *= c;
    return out;
}

double step_surrogate(double x, double c1, double c2) {
    if (!(0.0 <= c2 && c2 < c1 && c1 <= 1.0))
        throw std::invalid_argument("step_surrogate: need 0 <= c2 < c1 <= 1");
    if (x > c1) return 1.0;
    if (x < c2) return 0.0;
    return (x - c2) / (c1 - c2);
}

namespace {

// int_lo^hi (1-x^2)^(-1/2) f(x) T_i(x) dx via the substitution x = cos(theta):
// a plain midpoint rule in theta where the Chebyshev factor is cos(i*theta).
template <typename F>
double chebyshev_weighted_integral(double lo, double hi, int i, F&& f) {
    constexpr int nodes = 2048;
    const double theta_lo = std::acos(std::min(1.0, std::max(-1.0, hi)));
    const double theta_hi = std::acos(std::min(1.0, std::max(-1.0, lo)));
    const double h = (theta_hi - theta_lo) / nodes;
    double acc = 0.0;
    for (int n = 0; n < nodes; ++n) {
        const double theta = theta_lo + (n + 0.5) * h;
        acc += f(std::cos(theta)) * std::cos(i * theta);
    }
    return acc * h;
}

// Monomial coefficients of T_i by the three-term recurrence.
std::vector<Polynomial> chebyshev_basis(int max_degree) {
    std::vector<Polynomial> t(max_degree + 1);
    t[0].coeffs = {1.0};
    if (max_degree >= 1) t[1].coeffs = {0.0, 1.0};
    const Polynomial two_x{{0.0, 2.0}};
    for (int i = 2; i <= max_degree; ++i) t[i] = two_x * t[i - 1] + t[i - 2].scaled(-1.0);
    return t;
}

// Fit accuracy is measured off the ramp, on [0, c2] union [c1, 1]: the
// domain the downstream sandwich argument uses. (Measuring across the open
// ramp (c2, c1) as well would force the degree far beyond what the
// composed monomial expansion can carry in double precision.)
double sup_error_on_grid(const Polynomial& q, double c1, double c2, int points = 10001) {
    double worst = 0.0;
    for (int n = 0; n < points; ++n) {
        const double x = static_cast<double>(n) / (points - 1);
        if (x > c2 && x < c1) continue;
        worst = std::max(worst, std::abs(q(x) - step_surrogate(x, c1, c2)));
    }
    return worst;
}

} // namespace

namespace {

ChebyshevFit fit_series(double c1, double c2, double target_sup_error, int degree_cap,
                        bool throw_at_cap) {
    if (!(0.0 <= c2 && c2 < c1 && c1 <= 1.0))
        throw std::invalid_argument("chebyshev_fit: need 0 <= c2 < c1 <= 1");
    const auto basis = chebyshev_basis(degree_cap);
    const auto ramp = [&](double x) { return (x - c2) / (c1 - c2); };
    const auto one = [](double) { return 1.0; };

    Polynomial q;
    int degree = 0;
    const double b0 = (chebyshev_weighted_integral(c2, c1, 0, ramp) +
                       chebyshev_weighted_integral(c1, 1.0, 0, one)) /
                      std::numbers::pi;
    q = basis[0].scaled(b0);

    double sup = sup_error_on_grid(q, c1, c2);
    while (sup >= target_sup_error) {
        if (degree == degree_cap) {
            if (throw_at_cap)
                throw std::runtime_error("chebyshev_fit: degree cap " +
                                         std::to_string(degree_cap) + " reached at sup error " +
                                         std::to_string(sup));
            break;
        }
        ++degree;
        const double bi = 2.0 *
                          (chebyshev_weighted_integral(c2, c1, degree, ramp) +
                           chebyshev_weighted_integral(c1, 1.0, degree, one)) /
                          std::numbers::pi;
        q = q + basis[degree].scaled(bi);
        sup = sup_error_on_grid(q, c1, c2);
    }

    return {std::move(q), degree, sup};
}

} // namespace

ChebyshevFit chebyshev_fit(double c1, double c2, double target_sup_error, int degree_cap) {
    return fit_series(c1, c2, target_sup_error, degree_cap, true);
}

ChebyshevFit chebyshev_fit_to_degree(double c1, double c2, int degree) {
    return fit_series(c1, c2, 0.0, degree, false);
}

Polynomial beta_sharpen(int s) {
    if (s < 0 || s > 15)
        throw std::invalid_argument("beta_sharpen: need 0 <= s <= 15 for exact arithmetic");
    // 1/B(s+1, s+1) = (2s+1)! / (s! s!) = (2s+1) C(2s, s)
    auto binomial = [](int n, int k) {
        std::int64_t value = 1;
        for (int i = 1; i <= k; ++i) value = value * (n - k + i) / i;
        return value;
    };
    const std::int64_t beta_inv = (2 * s + 1) * binomial(2 * s, s);

    Polynomial q;
    q.coeffs.assign(2 * s + 2, 0.0);
    for (int j = 0; j <= s; ++j) {
        const std::int64_t numerator = beta_inv * binomial(s, j) * (j % 2 == 0 ? 1 : -1);
        q.coeffs[s + j + 1] = static_cast<double>(numerator) / (s + j + 1);
    }
    return q;
}

Polynomial compose_expand(const Polynomial& outer, const Polynomial& inner) {
    Polynomial acc{{outer.coeffs.back()}};
    for (std::size_t n = outer.coeffs.size() - 1; n-- > 0;) {
        acc = acc * inner;
        acc.coeffs[0] += outer.coeffs[n];
    }
    for (const double a : acc.coeffs)
        if (!std::isfinite(a)) throw std::runtime_error("compose_expand: non-finite coefficient");
    return acc;
}

PolynomialApprox build_rank_surrogate(double c1, double c2, int s,
                                      const SurrogateOptions& options) {
    ChebyshevFit fit =
        fit_series(c1, c2, options.target_sup_error, options.degree_cap, false);
    const int budget = std::max(1, options.max_total_degree / (2 * s + 1));
    if ((2 * s + 1) * fit.degree > options.max_total_degree)
        fit = chebyshev_fit_to_degree(c1, c2, budget);
    const Polynomial sharpener = beta_sharpen(s);
    PolynomialApprox approx;
    approx.poly = compose_expand(sharpener, fit.q);
    approx.degree = (2 * s + 1) * fit.degree;
    approx.poly.coeffs.resize(approx.degree + 1, 0.0);
    approx.c1 = c1;
    approx.c2 = c2;
    approx.chebyshev_degree = fit.degree;
    approx.sharpening = s;
    approx.sup_error_estimate = fit.sup_error;
    return approx;
}

GenRankReport generalized_rank_from_moments(int d, std::span<const double> moments,
                                            const PolynomialApprox& approx) {
    if (static_cast<int>(moments.size()) < approx.degree)
        throw std::invalid_argument("generalized_rank_from_moments: need degree-many moments");
    GenRankReport report;
    report.approx = approx;
    report.per_k.assign(moments.begin(), moments.begin() + approx.degree);
    report.r_hat = approx.poly.coeffs[0] * d;
    for (int k = 1; k <= approx.degree; ++k)
        report.r_hat += approx.poly.coeffs[k] * moments[k - 1];
    return report;
}

GenRankReport generalized_rank(const SampledMatrix& s, const SamplingModel& model, double c1,
                               double c2, int sharpening, const GenRankOptions& options) {
    const PolynomialApprox approx = build_rank_surrogate(c1, c2, sharpening, options.surrogate);
    std::vector<double> moments;
    moments.reserve(approx.degree);
    for (int k = 1; k <= approx.degree; ++k) {
        EstimatorOptions est;
        est.walk_cap = options.walk_cap;
        try {
            moments.push_back(estimate_schatten(s, model, k, est).theta_hat);
        } catch (const ResourceGuardError& err) {
            throw ResourceGuardError("generalized_rank: moment k=" + std::to_string(k) +
                                     " failed: " + err.what());
        }
    }
    return generalized_rank_from_moments(s.dim(), moments, approx);
}

} // namespace schatten
