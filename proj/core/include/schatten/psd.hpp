#pragma once

#include "schatten/matrix.hpp"

#include <cstdint>
#include <variant>
#include <vector>

namespace schatten {

/**
 * Ground-truth spectral metadata attached to a synthesized matrix:
 * rank r, singular values (descending), condition number kappa, and the
 * measured incoherence mu (smallest value satisfying conditions A1/A2,
 * i.e. max over rows of d*M_ii/(r*sigma_1) and d*|M_ij|/(sqrt(r)*sigma_1)).
 */
struct SpectrumModel {
    int rank = 0;
    std::vector<double> singular_values; // descending, size == rank
    double kappa = 0.0;                  // sigma_max / sigma_min (inf if sigma_min == 0)
    double mu = 0.0;                     // measured, not controlled
};

/// Distribution of the r positive singular values of a synthetic matrix.
struct SingularValueLaw {
    struct Constant { double value = 1.0; };
    struct Uniform { double lo = 1.0, hi = 2.0; };
    /// Mass `weight_hi` of the values equal `hi`, the rest equal `lo`.
    struct TwoPoint { double lo = 0.2, hi = 0.8; double weight_hi = 0.5; };
    /// Half Uniform(lo1, hi1), half Uniform(lo2, hi2).
    struct TwoUniform { double lo1 = 0.0, hi1 = 0.4, lo2 = 0.6, hi2 = 1.0; };

    std::variant<Constant, Uniform, TwoPoint, TwoUniform> law = Uniform{};

    static SingularValueLaw constant(double v) { return {Constant{v}}; }
    static SingularValueLaw uniform(double lo, double hi) { return {Uniform{lo, hi}}; }
    static SingularValueLaw two_point(double lo, double hi, double weight_hi = 0.5) {
        return {TwoPoint{lo, hi, weight_hi}};
    }
    static SingularValueLaw two_uniform(double lo1, double hi1, double lo2, double hi2) {
        return {TwoUniform{lo1, hi1, lo2, hi2}};
    }
};

/**
 * M = U Sigma U^T with U the first r columns of an orthonormal factor of a
 * Gaussian d x d matrix (QR) and Sigma drawn from `law`. Deterministic in
 * `seed`. Requires 1 <= r <= d.
 */
std::pair<SymmetricMatrix, SpectrumModel> generate_psd(int d, int r,
                                                       const SingularValueLaw& law,
                                                       std::uint64_t seed);

/**
 * Baseline: ||P_r((1/p) dense(S))||_k^k where P_r keeps the r eigen-
 * components of largest magnitude. Requires 0 < p <= 1 and r <= d.
 */
double rank_r_projection_baseline(const SampledMatrix& s, double p, int r, double k);

/// Incoherence of a known factorization (see SpectrumModel).
double measure_incoherence(const SymmetricMatrix& m, const SpectrumModel& model);

} // namespace schatten
