#include "schatten/experiments.hpp"

#include "schatten/rng.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <stdexcept>
#include <thread>

namespace schatten {

double completion_threshold(int d, int r) {
    return std::min(1.0, static_cast<double>(r) * std::log(d) / d);
}

double er_theory_line(int d, int r, int k) {
    return std::pow(r, 1.0 - 2.0 / k) / d;
}

double clique_theory_line(int r, int k) {
    return std::sqrt(static_cast<double>(k)) * std::pow(r, 1.0 - 2.0 / k);
}

void parallel_for(int n, int threads, const std::function<void(int)>& fn) {
    if (threads <= 0) {
        if (const char* env = std::getenv("SCHATTEN_THREADS")) threads = std::atoi(env);
        if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
        if (threads <= 0) threads = 1;
    }
    threads = std::min(threads, std::max(n, 1));
    if (threads == 1) {
        for (int i = 0; i < n; ++i) fn(i);
        return;
    }
    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(threads);
    for (int t = 0; t < threads; ++t) {
        pool.emplace_back([&, t]() {
            try {
                for (int i = t; i < n; i += threads) fn(i);
            } catch (...) {
                errors[t] = std::current_exception();
            }
        });
    }
    for (auto& th : pool) th.join();
    for (const auto& err : errors)
        if (err) std::rethrow_exception(err);
}

namespace {

std::vector<double> default_factors() {
    return {0.2, 1.0 / 3.0, 0.5, 0.75, 1.0, 1.5, 2.25, 3.4, 5.0};
}

std::uint64_t cell_seed(std::uint64_t seed, int a, int b, int c, int trial) {
    std::uint64_t stream = static_cast<std::uint64_t>(a);
    stream = stream * 1009 + static_cast<std::uint64_t>(b);
    stream = stream * 1009 + static_cast<std::uint64_t>(c);
    stream = stream * 100003 + static_cast<std::uint64_t>(trial);
    return Rng::derive(seed, stream);
}

void format_cell(std::string& line, double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    line += buf;
}

class Csv {
public:
    explicit Csv(const std::string& path) : out_(path) {
        if (!out_) throw std::runtime_error("cannot open output file: " + path);
    }
    void comment(const std::string& text) { out_ << "# " << text << "\n"; }
    void row(const std::vector<double>& cells) {
        std::string line;
        for (std::size_t n = 0; n < cells.size(); ++n) {
            if (n) line += ',';
            format_cell(line, cells[n]);
        }
        out_ << line << "\n";
    }

private:
    std::ofstream out_;
};

} // namespace

Fig2Result fig2_run(const ExperimentConfig& cfg) {
    const int k = cfg.ks.at(0);
    auto [m, model] = generate_psd(cfg.d, cfg.r, SingularValueLaw::uniform(1.0, 2.0),
                                   Rng::derive(cfg.seed, 0));
    const double truth = schatten_power_exact(m, k);

    Fig2Result result;
    result.k = k;
    result.completion_p = completion_threshold(cfg.d, cfg.r);
    std::vector<double> ps = cfg.p_grid;
    if (ps.empty())
        for (double p = 0.05; p < 0.501; p += 0.05) ps.push_back(p);

    result.rows.resize(ps.size() * cfg.trials);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        const double p = ps[pi];
        const DebiasTable debias = debias_er(k, p);
        parallel_for(cfg.trials, cfg.threads, [&, pi, p](int trial) {
            const auto sample = sample_er(m, p, cell_seed(cfg.seed, 2, static_cast<int>(pi), 0, trial));
            EstimatorOptions opts;
            opts.debias = &debias;
            const double theta =
                estimate_schatten(sample, SamplingModel::erdos_renyi(p), k, opts).theta_hat;
            const double baseline = rank_r_projection_baseline(sample, p, cfg.r, k);
            ErrorCurveCell cell;
            cell.p = p;
            cell.trial = trial;
            cell.estimator_err = std::abs(theta - truth) / truth;
            cell.baseline_err = std::abs(baseline - truth) / truth;
            result.rows[pi * cfg.trials + trial] = cell;
        });
    }
    return result;
}

PhaseResult fig5_run(const ExperimentConfig& cfg) {
    PhaseResult result;
    const std::vector<int> rs = cfg.r_grid.empty() ? std::vector<int>{cfg.r} : cfg.r_grid;
    const std::vector<double> factors =
        cfg.grid_factors.empty() ? default_factors() : cfg.grid_factors;

    for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
        const int k = cfg.ks[ki];
        for (std::size_t ri = 0; ri < rs.size(); ++ri) {
            const int r = rs[ri];
            auto [m, model] = generate_psd(cfg.d, r, SingularValueLaw::uniform(1.0, 2.0),
                                           Rng::derive(cfg.seed, 900 + ri));
            const double truth = schatten_power_exact(m, k);
            const double line = er_theory_line(cfg.d, r, k);

            std::vector<double> ps = cfg.p_grid;
            if (ps.empty())
                for (double f : factors) {
                    const double p = f * line;
                    if (p > 0.0 && p <= 1.0) ps.push_back(p);
                }

            for (std::size_t pi = 0; pi < ps.size(); ++pi) {
                const double p = ps[pi];
                const DebiasTable debias = debias_er(k, p);
                std::vector<int> success(cfg.trials, 0);
                parallel_for(cfg.trials, cfg.threads, [&](int trial) {
                    const auto sample = sample_er(
                        m, p, cell_seed(cfg.seed, 5 * 100 + k, static_cast<int>(ri),
                                        static_cast<int>(pi), trial));
                    EstimatorOptions opts;
                    opts.debias = &debias;
                    const double theta =
                        estimate_schatten(sample, SamplingModel::erdos_renyi(p), k, opts)
                            .theta_hat;
                    success[trial] = std::abs(theta - truth) / truth <= cfg.delta ? 1 : 0;
                });
                PhaseCell cell;
                cell.k = k;
                cell.r = r;
                cell.p = p;
                cell.theory = line;
                cell.trials = cfg.trials;
                for (int ok : success) cell.successes += ok;
                result.cells.push_back(cell);
            }
        }
    }
    return result;
}

PhaseResult fig8_run(const ExperimentConfig& cfg) {
    PhaseResult result;
    const std::vector<int> rs = cfg.r_grid.empty() ? std::vector<int>{cfg.r} : cfg.r_grid;
    const std::vector<double> factors =
        cfg.grid_factors.empty() ? default_factors() : cfg.grid_factors;

    for (std::size_t ki = 0; ki < cfg.ks.size(); ++ki) {
        const int k = cfg.ks[ki];
        for (std::size_t ri = 0; ri < rs.size(); ++ri) {
            const int r = rs[ri];
            auto [m, model] = generate_psd(cfg.d, r, SingularValueLaw::uniform(1.0, 2.0),
                                           Rng::derive(cfg.seed, 800 + ri));
            const double truth = schatten_power_exact(m, k);
            const double line = clique_theory_line(r, k);

            std::vector<int> ells = cfg.ell_grid;
            if (ells.empty()) {
                for (double f : factors) {
                    int l = static_cast<int>(std::lround(f * line));
                    l = std::max(l, k);
                    l = std::min(l, cfg.d);
                    if (ells.empty() || ells.back() != l) ells.push_back(l);
                }
            }

            for (std::size_t li = 0; li < ells.size(); ++li) {
                const int l = ells[li];
                // Clique sampling observes a principal submatrix, so the
                // pattern carries loops: the submatrix diagonal is visible.
                const PatternGraph pattern = clique_pattern(cfg.d, l, true);
                const DebiasTable debias = debias_graph(k, pattern);
                const SamplingModel model_graph = SamplingModel::graph(pattern);
                std::vector<int> success(cfg.trials, 0);
                parallel_for(cfg.trials, cfg.threads, [&](int trial) {
                    const auto sample = sample_graph(
                        m, pattern,
                        cell_seed(cfg.seed, 8 * 100 + k, static_cast<int>(ri),
                                  static_cast<int>(li), trial));
                    EstimatorOptions opts;
                    opts.debias = &debias;
                    const double theta =
                        estimate_schatten(sample, model_graph, k, opts).theta_hat;
                    success[trial] = std::abs(theta - truth) / truth <= cfg.delta ? 1 : 0;
                });
                PhaseCell cell;
                cell.k = k;
                cell.r = r;
                cell.p = l;
                cell.theory = line;
                cell.trials = cfg.trials;
                for (int ok : success) cell.successes += ok;
                result.cells.push_back(cell);
            }
        }
    }
    return result;
}

Fig6Result fig6_run(const ExperimentConfig& cfg) {
    auto [m, model] = generate_psd(cfg.d, cfg.r, SingularValueLaw::two_uniform(0.0, 0.4, 0.6, 1.0),
                                   Rng::derive(cfg.seed, 600));
    Fig6Result result;
    for (double sv : model.singular_values) {
        result.rank_c1 += sv > cfg.c1 ? 1 : 0;
        result.rank_c2 += sv > cfg.c2 ? 1 : 0;
    }
    const PolynomialApprox approx = build_rank_surrogate(cfg.c1, cfg.c2, cfg.s);
    result.degree = approx.degree;

    std::vector<double> ps = cfg.p_grid;
    if (ps.empty())
        for (double p = 0.1; p < 0.901; p += 0.1) ps.push_back(p);

    result.rows.resize(ps.size() * cfg.trials);
    for (std::size_t pi = 0; pi < ps.size(); ++pi) {
        const double p = ps[pi];
        parallel_for(cfg.trials, cfg.threads, [&, pi, p](int trial) {
            const auto sample =
                sample_er(m, p, cell_seed(cfg.seed, 6, static_cast<int>(pi), 0, trial));
            std::vector<double> moments;
            for (int k = 1; k <= approx.degree; ++k)
                moments.push_back(
                    estimate_schatten(sample, SamplingModel::erdos_renyi(p), k).theta_hat);
            const auto report = generalized_rank_from_moments(cfg.d, moments, approx);
            Fig6Row row;
            row.p = p;
            row.trial = trial;
            row.r_hat = report.r_hat;
            row.abs_err = std::abs(report.r_hat - result.rank_c1);
            result.rows[pi * cfg.trials + trial] = row;
        });
    }
    return result;
}

Fig7Result fig7_run(const ExperimentConfig& cfg) {
    const SingularValueLaw law = cfg.peaks == 1 ? SingularValueLaw::constant(1.0)
                                                : SingularValueLaw::two_point(1.0, 2.0, 0.5);
    auto [m, model] = generate_psd(cfg.d, cfg.r, law, Rng::derive(cfg.seed, 700));

    Fig7Result result;
    result.truth = model.singular_values;
    std::sort(result.truth.begin(), result.truth.end());
    result.p = cfg.full_observation
                   ? 1.0
                   : std::min(1.0, (cfg.alpha / cfg.d) * std::pow(cfg.r, 1.0 - 2.0 / cfg.K));

    result.estimates.resize(cfg.trials);
    parallel_for(cfg.trials, cfg.threads, [&](int trial) {
        const auto sample = cfg.full_observation
                                ? SampledMatrix::full(m)
                                : sample_er(m, result.p, cell_seed(cfg.seed, 7, 0, 0, trial));
        const auto moments = MomentVector::estimated(
            sample, SamplingModel::erdos_renyi(result.p), cfg.K);
        const auto dist = moment_match(moments, cfg.a, cfg.b, cfg.eps, cfg.r);
        result.estimates[trial] = quantile_extract(dist, cfg.r);
    });
    return result;
}

Fig4Result fig4_run(const ExperimentConfig& cfg) {
    auto [m, model] = generate_psd(cfg.d, cfg.r, SingularValueLaw::uniform(1.0, 2.0),
                                   Rng::derive(cfg.seed, 400));
    Fig4Result result;
    result.p = cfg.p_grid.empty() ? er_theory_line(cfg.d, cfg.r, 7) : cfg.p_grid.front();
    result.sigma_true.assign(cfg.d, 0.0);
    for (int i = 0; i < model.rank; ++i) result.sigma_true[i] = model.singular_values[i];

    const auto sample = sample_er(m, result.p, Rng::derive(cfg.seed, 401));
    const Vector evals =
        SymmetricMatrix::from_upper(sample.to_dense().mat() / result.p).eigenvalues();
    result.sigma_sampled.resize(cfg.d);
    for (int i = 0; i < cfg.d; ++i) result.sigma_sampled[i] = std::abs(evals[i]);
    std::sort(result.sigma_sampled.begin(), result.sigma_sampled.end(), std::greater<>());
    return result;
}

std::string run_recipe(const ExperimentConfig& cfg) {
    const std::string path = cfg.out.empty() ? cfg.recipe + ".csv" : cfg.out;
    Csv csv(path);
    char header[256];

    if (cfg.recipe == "fig2") {
        const auto result = fig2_run(cfg);
        std::snprintf(header, sizeof(header),
                      "estimator vs rank-r projection baseline; d=%d r=%d k=%d trials=%d seed=%llu",
                      cfg.d, cfg.r, result.k, cfg.trials,
                      static_cast<unsigned long long>(cfg.seed));
        csv.comment(header);
        std::snprintf(header, sizeof(header), "completion_threshold_p=%.17g", result.completion_p);
        csv.comment(header);
        csv.comment("columns: p, trial, estimator_rel_err, baseline_rel_err");
        for (const auto& row : result.rows)
            csv.row({row.p, static_cast<double>(row.trial), row.estimator_err, row.baseline_err});
    } else if (cfg.recipe == "fig4") {
        const auto result = fig4_run(cfg);
        std::snprintf(header, sizeof(header), "true vs rescaled sampled spectrum; d=%d r=%d p=%.17g",
                      cfg.d, cfg.r, result.p);
        csv.comment(header);
        csv.comment("columns: index, sigma_true, sigma_sampled");
        for (int i = 0; i < cfg.d; ++i)
            csv.row({static_cast<double>(i), result.sigma_true[i], result.sigma_sampled[i]});
    } else if (cfg.recipe == "fig5" || cfg.recipe == "fig8") {
        const auto result = cfg.recipe == "fig5" ? fig5_run(cfg) : fig8_run(cfg);
        std::snprintf(header, sizeof(header),
                      "%s success map; d=%d trials=%d delta=%.17g seed=%llu",
                      cfg.recipe.c_str(), cfg.d, cfg.trials, cfg.delta,
                      static_cast<unsigned long long>(cfg.seed));
        csv.comment(header);
        csv.comment(cfg.recipe == "fig5"
                        ? "columns: k, r, p, p_theory, successes, trials, success_rate"
                        : "columns: k, r, ell, ell_theory, successes, trials, success_rate");
        for (const auto& cell : result.cells)
            csv.row({static_cast<double>(cell.k), static_cast<double>(cell.r), cell.p, cell.theory,
                     static_cast<double>(cell.successes), static_cast<double>(cell.trials),
                     static_cast<double>(cell.successes) / cell.trials});
    } else if (cfg.recipe == "fig6") {
        const auto result = fig6_run(cfg);
        std::snprintf(header, sizeof(header),
                      "generalized rank; d=%d r=%d c1=%.17g c2=%.17g s=%d degree=%d rank_c1=%d "
                      "rank_c2=%d",
                      cfg.d, cfg.r, cfg.c1, cfg.c2, cfg.s, result.degree, result.rank_c1,
                      result.rank_c2);
        csv.comment(header);
        csv.comment("columns: p, trial, r_hat, abs_err");
        for (const auto& row : result.rows)
            csv.row({row.p, static_cast<double>(row.trial), row.r_hat, row.abs_err});
    } else if (cfg.recipe == "fig7") {
        const auto result = fig7_run(cfg);
        std::snprintf(header, sizeof(header),
                      "spectrum recovery; d=%d r=%d K=%d peaks=%d p=%.17g grid=[%.17g,%.17g] "
                      "eps=%.17g",
                      cfg.d, cfg.r, cfg.K, cfg.peaks, result.p, cfg.a, cfg.b, cfg.eps);
        csv.comment(header);
        csv.comment("columns: series(0=truth,trial+1=estimate), index, sigma");
        for (std::size_t i = 0; i < result.truth.size(); ++i)
            csv.row({0.0, static_cast<double>(i), result.truth[i]});
        for (std::size_t t = 0; t < result.estimates.size(); ++t)
            for (std::size_t i = 0; i < result.estimates[t].size(); ++i)
                csv.row({static_cast<double>(t + 1), static_cast<double>(i),
                         result.estimates[t][i]});
    } else {
        throw std::invalid_argument("run_recipe: unknown recipe " + cfg.recipe);
    }
    return path;
}

} // namespace schatten
