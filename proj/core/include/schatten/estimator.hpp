#pragma once

#include "schatten/sampling.hpp"

#include <map>
#include <string>
#include <vector>

namespace schatten {

/**
 * De-biased Schatten k-norm estimate assembled from per-pattern walk
 * weights: theta_hat = sum_H gamma_obs(H) / p(H) over patterns with
 * p(H) > 0. Patterns with p(H) == 0 and nonzero observed weight cannot be
 * de-biased; they are dropped from the sum and reported.
 */
struct EstimateReport {
    struct PerPattern {
        double gamma_obs = 0.0;
        double prob = 0.0;
        double contribution = 0.0;
    };

    int k = 0;
    double theta_hat = 0.0;
    std::vector<std::string> dropped_patterns;
    std::map<std::string, PerPattern> per_pattern;
};

struct EstimatorOptions {
    /// Work budget for the enumeration path (k outside 1..7).
    std::uint64_t walk_cap = 500'000'000ULL;
    /// Reuse a precomputed de-bias table (e.g. across trials with one model).
    const DebiasTable* debias = nullptr;
};

/**
 * Estimate of ||M||_k^k from a sample. k in {1,2} uses the direct linear /
 * quadratic sums, 3 <= k <= 7 the closed-form weight tables on the
 * densified sample, and k >= 8 the enumeration path under the resource
 * guard. The estimate is signed; no clamping happens here.
 */
EstimateReport estimate_schatten(const SampledMatrix& s, const SamplingModel& model, int k,
                                 const EstimatorOptions& options = {});

struct SchattenNormEstimate {
    double value = 0.0; // max(theta_hat, 0)^(1/k)
    bool clamped = false;
    EstimateReport report;
};

/// Norm-level wrapper: clamps negative theta_hat to zero before the k-th root.
SchattenNormEstimate estimate_schatten_norm(const SampledMatrix& s, const SamplingModel& model,
                                            int k, const EstimatorOptions& options = {});

} // namespace schatten
