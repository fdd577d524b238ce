#include "schatten/estimator.hpp"

#include <cmath>

namespace schatten {

EstimateReport estimate_schatten(const SampledMatrix& s, const SamplingModel& model, int k,
                                 const EstimatorOptions& options) {
    if (k < 1) throw std::invalid_argument("estimate_schatten: k must be >= 1");

    // Fast path: under Erdos-Renyi every k = 1, 2 pattern has p(H) = p, so
    // the estimate collapses to a single de-biased sum.
    if ((k == 1 || k == 2) && model.is_er()) {
        const double p = model.er_probability();
        EstimateReport report;
        report.k = k;
        report.theta_hat = schatten_power_direct(s, k, p);
        return report;
    }

    WalkWeightTable table;
    if (k <= 2) {
        table = detail::gamma_small(s.to_dense(), k);
    } else if (k <= 7) {
        table = gamma_closed_form(s.to_dense(), k);
    } else {
        table = gamma_oracle(s, k, options.walk_cap);
    }

    DebiasTable fallback;
    const DebiasTable* debias = options.debias;
    if (debias == nullptr) {
        fallback = debias_for(model, k);
        debias = &fallback;
    }
    if (debias->k != k) throw std::invalid_argument("estimate_schatten: de-bias table k mismatch");

    EstimateReport report;
    report.k = k;
    for (const auto& [key, gamma_obs] : table.weights) {
        EstimateReport::PerPattern pattern;
        pattern.gamma_obs = gamma_obs;
        pattern.prob = debias->at(key);
        if (pattern.prob > 0.0) {
            pattern.contribution = gamma_obs / pattern.prob;
            report.theta_hat += pattern.contribution;
        } else if (gamma_obs != 0.0) {
            report.dropped_patterns.push_back(key);
        }
        report.per_pattern.emplace(key, pattern);
    }
    return report;
}

SchattenNormEstimate estimate_schatten_norm(const SampledMatrix& s, const SamplingModel& model,
                                            int k, const EstimatorOptions& options) {
    SchattenNormEstimate out;
    out.report = estimate_schatten(s, model, k, options);
    out.clamped = out.report.theta_hat < 0.0;
    out.value = std::pow(std::max(out.report.theta_hat, 0.0), 1.0 / k);
    return out;
}

} // namespace schatten
