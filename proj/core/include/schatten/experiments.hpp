#pragma once

#include "schatten/estimator.hpp"
#include "schatten/psd.hpp"
#include "schatten/spectral_functions.hpp"
#include "schatten/spectrum_recovery.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace schatten {

/**
 * Desk-scale experiment recipes. Each one regenerates a study from the
 * estimator's evaluation suite with fixed seeds and writes a deterministic
 * CSV (byte-identical given the same config): identical trials are driven
 * by per-trial derived seeds and reduced in index order.
 *
 *   fig2: relative error of the de-biased estimator vs the rescaled
 *         rank-r projection baseline across an ER p-grid.
 *   fig4: true spectrum vs spectrum of the rescaled sampled matrix.
 *   fig5: ER success-probability map over (r, p) with the p = r^(1-2/k)/d line.
 *   fig6: generalized-rank absolute error across an ER p-grid.
 *   fig7: spectrum recovery (moment matching + quantiles) vs ground truth.
 *   fig8: clique-sampling success map over (r, l) with l = sqrt(k) r^(1-2/k).
 */
struct ExperimentConfig {
    std::string recipe;
    int d = 200;
    int r = 40;
    std::vector<int> ks = {5};
    std::vector<int> r_grid;
    std::vector<double> p_grid;       // absolute probabilities; empty = auto
    std::vector<int> ell_grid;        // absolute clique sizes (fig8); empty = auto
    std::vector<double> grid_factors; // multiples of the theory line for auto grids
    int trials = 20;
    std::uint64_t seed = 1;
    double delta = 0.5;
    // generalized rank
    double c1 = 0.6, c2 = 0.5;
    int s = 1;
    // spectrum recovery
    int K = 7;
    double a = 0.0, b = 2.0, eps = 0.05;
    int peaks = 1; // 1: all sigma = 1; 2: half at 1, half at 2 (rescaled into [0,1] internally)
    double alpha = 8.0; // sampling level p = (alpha/d) r^(1-2/K) for fig7
    bool full_observation = false;
    std::string out = "";
    int threads = 0; // 0: SCHATTEN_THREADS env or hardware concurrency
};

/// p at which ER sampling reaches the completion budget r d log d samples.
double completion_threshold(int d, int r);
/// Fig-5 theory line p* = r^(1-2/k) / d.
double er_theory_line(int d, int r, int k);
/// Fig-8 theory line l* = sqrt(k) r^(1-2/k).
double clique_theory_line(int r, int k);

struct ErrorCurveCell {
    double p = 0.0;
    int trial = 0;
    double estimator_err = 0.0;
    double baseline_err = 0.0;
};
struct Fig2Result {
    std::vector<ErrorCurveCell> rows;
    double completion_p = 0.0;
    int k = 0;
};
Fig2Result fig2_run(const ExperimentConfig& cfg);

struct PhaseCell {
    int k = 0;
    int r = 0;
    double p = 0.0;      // fig5: probability; fig8: clique size
    double theory = 0.0; // the theoretical line value
    int successes = 0;
    int trials = 0;
};
struct PhaseResult {
    std::vector<PhaseCell> cells;
};
PhaseResult fig5_run(const ExperimentConfig& cfg);
PhaseResult fig8_run(const ExperimentConfig& cfg);

struct Fig6Row {
    double p = 0.0;
    int trial = 0;
    double r_hat = 0.0;
    double abs_err = 0.0;
};
struct Fig6Result {
    std::vector<Fig6Row> rows;
    int rank_c1 = 0; // generalized rank of the truth at c1
    int rank_c2 = 0;
    int degree = 0;
};
Fig6Result fig6_run(const ExperimentConfig& cfg);

struct Fig7Result {
    std::vector<double> truth;                  // sorted sigma
    std::vector<std::vector<double>> estimates; // per trial, sorted sigma-hat
    double p = 0.0;
};
Fig7Result fig7_run(const ExperimentConfig& cfg);

struct Fig4Result {
    std::vector<double> sigma_true;
    std::vector<double> sigma_sampled; // of (1/p) P_Omega(M), magnitudes sorted desc
    double p = 0.0;
};
Fig4Result fig4_run(const ExperimentConfig& cfg);

/// Dispatches on cfg.recipe and writes cfg.out (CSV). Returns the path written.
std::string run_recipe(const ExperimentConfig& cfg);

/// Deterministic parallel map: fn(i) for i in [0, n), results independent of schedule.
void parallel_for(int n, int threads, const std::function<void(int)>& fn);

} // namespace schatten
