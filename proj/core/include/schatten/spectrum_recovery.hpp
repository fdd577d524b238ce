#pragma once

#include "schatten/estimator.hpp"

#include <vector>

namespace schatten {

/// First K Schatten power estimates: values[k-1] ~ ||M||_k^k.
struct MomentVector {
    int K = 0;
    std::vector<double> values;

    static MomentVector exact(const SymmetricMatrix& m, int K);
    static MomentVector estimated(const SampledMatrix& s, const SamplingModel& model, int K,
                                  const EstimatorOptions& options = {});
};

/**
 * Discrete distribution on the grid x_i = a + eps*(i-1): the l1
 * moment-matching solution. Masses sum to one; `objective` is the residual
 * |V p - L/r|_1 at the solution.
 */
struct GridDistribution {
    double a = 0.0, b = 0.0, eps = 0.0;
    std::vector<double> grid;
    std::vector<double> masses;
    double objective = 0.0;
};

/**
 * min_p |V p - L/r|_1 over the probability simplex, V_ij = x_j^i. The
 * moments are divided by the declared rank r so both sides are moments of
 * a single-atom distribution. Requires a < b, eps > 0, K >= 1, r >= 1.
 */
GridDistribution moment_match(const MomentVector& moments, double a, double b, double eps, int r);

/// sigma_i = min{ x_j : cumulative mass >= i/(r+1) }, i = 1..r, ascending.
std::vector<double> quantile_extract(const GridDistribution& dist, int r);

} // namespace schatten
