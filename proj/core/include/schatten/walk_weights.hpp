#pragma once

#include "schatten/matrix.hpp"
#include "schatten/pseudograph.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace schatten {

/// Thrown when an operation would exceed its configured work budget.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * gamma_M(H) = omega_M(H) * c(H) for every H in the k-walk catalog, keyed
 * by canonical key. Always satisfies sum_H gamma(H) == tr(M^k).
 */
struct WalkWeightTable {
    enum class Source { closed_form, oracle };

    int k = 0;
    Source source = Source::closed_form;
    std::map<std::string, double> weights;

    double at(const std::string& key) const {
        auto it = weights.find(key);
        if (it == weights.end()) throw std::out_of_range("WalkWeightTable: unknown key " + key);
        return it->second;
    }
    double partition_sum() const {
        double acc = 0.0;
        for (const auto& [key, w] : weights) acc += w;
        return acc;
    }
};

/**
 * Closed-form path: evaluates the per-pattern matrix-operation formulas.
 * Requires 3 <= k <= 7 and a symmetric M; O(d^3) worst case (a bounded
 * number of dense multiplies).
 */
WalkWeightTable gamma_closed_form(const SymmetricMatrix& m, int k);

/**
 * Exact walk-enumeration path for any k >= 1: sums the weight of every
 * closed k-walk through nonzero entries into its pattern bucket.
 * Cost O(d * Delta^(k-1)); throws ResourceGuardError if the walk-count
 * estimate exceeds `walk_cap`.
 */
WalkWeightTable gamma_oracle(const SymmetricMatrix& m, int k,
                             std::uint64_t walk_cap = 500'000'000ULL);
WalkWeightTable gamma_oracle(const SampledMatrix& s, int k,
                             std::uint64_t walk_cap = 500'000'000ULL);

/**
 * De-biased k = 1, 2 estimates under Erdos-Renyi sampling:
 * (1/p) sum_i S_ii and (1/p) sum_ij S_ij^2. O(d) / O(|Omega|).
 */
double schatten_power_direct(const SampledMatrix& s, int k, double p);

namespace detail {

/// gamma table for k in {1, 2} by direct summation (used by the general paths).
WalkWeightTable gamma_small(const SymmetricMatrix& m, int k);

/// Formula values in the order of the transcription tables, with their labels.
std::vector<std::pair<std::string, double>> closed_form_values(const Matrix& m, int k);

/// Frozen (formula label -> canonical key) association for 3 <= k <= 7.
const std::vector<std::pair<const char*, const char*>>& closed_form_label_keys(int k);

} // namespace detail

} // namespace schatten
