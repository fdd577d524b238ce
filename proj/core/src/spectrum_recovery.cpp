#include "schatten/spectrum_recovery.hpp"

#include "schatten/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace schatten {

MomentVector MomentVector::exact(const SymmetricMatrix& m, int K) {
    MomentVector out;
    out.K = K;
    const Vector evals = m.eigenvalues();
    for (int k = 1; k <= K; ++k) {
        double acc = 0.0;
        for (int i = 0; i < evals.size(); ++i) acc += std::pow(std::abs(evals[i]), k);
        out.values.push_back(acc);
    }
    return out;
}

MomentVector MomentVector::estimated(const SampledMatrix& s, const SamplingModel& model, int K,
                                     const EstimatorOptions& options) {
    MomentVector out;
    out.K = K;
    for (int k = 1; k <= K; ++k)
        out.values.push_back(estimate_schatten(s, model, k, options).theta_hat);
    return out;
}

GridDistribution moment_match(const MomentVector& moments, double a, double b, double eps,
                              int r) {
    if (!(a < b) || eps <= 0.0) throw std::invalid_argument("moment_match: need a < b, eps > 0");
    if (moments.K < 1 || static_cast<int>(moments.values.size()) != moments.K)
        throw std::invalid_argument("moment_match: invalid moment vector");
    if (r < 1) throw std::invalid_argument("moment_match: need r >= 1");

    const int K = moments.K;
    const int t = static_cast<int>(std::ceil((b - a) / eps)) + 1;

    GridDistribution dist;
    dist.a = a;
    dist.b = b;
    dist.eps = eps;
    dist.grid.resize(t);
    for (int j = 0; j < t; ++j) dist.grid[j] = a + eps * j;

    Eigen::MatrixXd v(K, t);
    for (int j = 0; j < t; ++j)
        for (int i = 0; i < K; ++i) v(i, j) = std::pow(dist.grid[j], i + 1);
    Eigen::VectorXd target(K);
    for (int i = 0; i < K; ++i) target[i] = moments.values[i] / r;

    // Column scaling of the Vandermonde-like system for conditioning
    // (masses are rescaled back through the simplex constraint row).
    Eigen::VectorXd scale(t);
    for (int j = 0; j < t; ++j) scale[j] = std::max(1.0, std::pow(std::abs(dist.grid[j]), K));
    Eigen::MatrixXd vs = v;
    for (int j = 0; j < t; ++j) vs.col(j) /= scale[j];

    // Variables: [p' (t), u (K), s1 (K), s2 (K)]; rows:
    //   Vs p' - u + s1 = L/r
    //  -Vs p' - u + s2 = -L/r
    //   sum_j p'_j / scale_j = 1
    const int ncols = t + 3 * K;
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(2 * K + 1, ncols);
    Eigen::VectorXd rhs(2 * K + 1);
    A.block(0, 0, K, t) = vs;
    A.block(K, 0, K, t) = -vs;
    A.block(0, t, K, K) = -Eigen::MatrixXd::Identity(K, K);
    A.block(K, t, K, K) = -Eigen::MatrixXd::Identity(K, K);
    A.block(0, t + K, K, K) = Eigen::MatrixXd::Identity(K, K);
    A.block(K, t + 2 * K, K, K) = Eigen::MatrixXd::Identity(K, K);
    rhs.head(K) = target;
    rhs.segment(K, K) = -target;
    for (int j = 0; j < t; ++j) A(2 * K, j) = 1.0 / scale[j];
    rhs[2 * K] = 1.0;

    Eigen::VectorXd cost = Eigen::VectorXd::Zero(ncols);
    cost.segment(t, K).setOnes();

    const LpSolution sol = solve_lp(A, rhs, cost);
    if (!sol.feasible) throw std::runtime_error("moment_match: LP reported infeasible");
    if (!sol.optimal) throw std::runtime_error("moment_match: LP did not converge");

    dist.masses.resize(t);
    double total = 0.0;
    for (int j = 0; j < t; ++j) {
        double mass = sol.x[j] / scale[j];
        if (mass < -1e-10)
            throw std::runtime_error("moment_match: negative mass beyond tolerance");
        mass = std::max(mass, 0.0);
        dist.masses[j] = mass;
        total += mass;
    }
    if (total <= 0.0) throw std::runtime_error("moment_match: zero total mass");
    for (double& mass : dist.masses) mass /= total;

    Eigen::VectorXd p(t);
    for (int j = 0; j < t; ++j) p[j] = dist.masses[j];
    dist.objective = (v * p - target).cwiseAbs().sum();
    return dist;
}

std::vector<double> quantile_extract(const GridDistribution& dist, int r) {
    if (r < 1) throw std::invalid_argument("quantile_extract: need r >= 1");
    std::vector<double> quantiles;
    quantiles.reserve(r);
    for (int i = 1; i <= r; ++i) {
        const double level = static_cast<double>(i) / (r + 1);
        double cum = 0.0;
        double value = dist.grid.back();
        for (std::size_t j = 0; j < dist.grid.size(); ++j) {
            cum += dist.masses[j];
            if (cum >= level - 1e-12) {
                value = dist.grid[j];
                break;
            }
        }
        quantiles.push_back(value);
    }
    return quantiles;
}

} // namespace schatten
