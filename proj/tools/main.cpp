#include "schatten/experiments.hpp"
#include "schatten/matrix_io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <set>

using json = nlohmann::ordered_json;
using namespace schatten;

namespace {

void emit(const json& payload, const std::string& out) {
    if (out.empty()) {
        std::cout << payload.dump(2) << "\n";
    } else {
        std::ofstream file(out);
        if (!file) throw std::runtime_error("cannot open output file: " + out);
        file << payload.dump(2) << "\n";
    }
}

struct ModelFlags {
    std::string model = "er";
    double p = 1.0;
    std::string pattern_file;
    bool pattern_loops = false;

    void attach(CLI::App* cmd) {
        cmd->add_option("--model", model, "Sampling model: er | graph")
            ->check(CLI::IsMember({"er", "graph"}));
        cmd->add_option("--p", p, "ER observation probability");
        cmd->add_option("--pattern", pattern_file, "Pattern graph triplet file (graph model)");
        cmd->add_flag("--pattern-loops", pattern_loops,
                      "Add loops on every pattern node listed in the file");
    }

    SamplingModel build(int d) const {
        if (model == "er") return SamplingModel::erdos_renyi(p);
        if (pattern_file.empty())
            throw CLI::ValidationError("--pattern is required for the graph model");
        const auto triplets = read_triplets_file(pattern_file, d, false);
        std::set<std::pair<int, int>> edges;
        for (const auto& e : triplets.entries()) {
            edges.emplace(e.i, e.j);
            if (pattern_loops) {
                edges.emplace(e.i, e.i);
                edges.emplace(e.j, e.j);
            }
        }
        PatternGraph g;
        g.d = d;
        for (const auto& [u, v] : edges) g.add_edge(u, v);
        return SamplingModel::graph(std::move(g));
    }
};

SampledMatrix load_sample(const std::string& matrix_file, const std::string& omega_file, int* d) {
    if (!matrix_file.empty()) {
        const SymmetricMatrix m = read_dense_csv_file(matrix_file);
        *d = m.dim();
        if (omega_file.empty()) return SampledMatrix::full(m);
        const auto omega = read_triplets_file(omega_file, m.dim(), false);
        SampledMatrix s(m.dim());
        for (const auto& e : omega.entries()) s.add(e.i, e.j, m(e.i, e.j));
        return s;
    }
    if (omega_file.empty())
        throw CLI::ValidationError("need --matrix and/or --omega");
    if (*d <= 0) throw CLI::ValidationError("--d is required when only --omega is given");
    return read_triplets_file(omega_file, *d, true);
}

json table_to_json(const std::map<std::string, double>& table) {
    json out = json::object();
    for (const auto& [key, value] : table) out[key] = value;
    return out;
}

json report_to_json(const EstimateReport& report) {
    json per = json::object();
    for (const auto& [key, pp] : report.per_pattern)
        per[key] = {{"gamma_obs", pp.gamma_obs}, {"p", pp.prob}, {"contribution", pp.contribution}};
    return {{"k", report.k},
            {"theta_hat", report.theta_hat},
            {"dropped_patterns", report.dropped_patterns},
            {"per_pattern", per}};
}

void apply_config_file(const std::string& path, ExperimentConfig& cfg) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open config file: " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos) throw std::runtime_error("bad config line: " + line);
        const std::string key = line.substr(0, eq);
        const std::string value = line.substr(eq + 1);
        if (key == "d") cfg.d = std::stoi(value);
        else if (key == "r") cfg.r = std::stoi(value);
        else if (key == "trials") cfg.trials = std::stoi(value);
        else if (key == "seed") cfg.seed = std::stoull(value);
        else if (key == "delta") cfg.delta = std::stod(value);
        else if (key == "k") cfg.ks = {std::stoi(value)};
        else if (key == "out") cfg.out = value;
        else throw std::runtime_error("unknown config key: " + key);
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Schatten norm, generalized rank and spectrum estimation from matrix samples"};
    app.require_subcommand(1);

    // --- catalog ---
    int cat_k = 3;
    std::string cat_out;
    auto* cat = app.add_subcommand("catalog", "Dump the k-walk pattern catalog as JSON");
    cat->add_option("--k", cat_k, "Walk length")->required();
    cat->add_option("--out", cat_out, "Output file (default stdout)");

    // --- weights ---
    std::string w_matrix, w_out;
    int w_k = 3;
    bool w_oracle = false;
    auto* wts = app.add_subcommand("weights", "Per-pattern walk weights gamma(H) of a matrix");
    wts->add_option("--matrix", w_matrix, "Dense CSV matrix file")->required();
    wts->add_option("--k", w_k, "Walk length")->required();
    wts->add_flag("--oracle", w_oracle, "Use the enumeration path instead of closed forms");
    wts->add_option("--out", w_out, "Output file (default stdout)");

    // --- debias ---
    int db_k = 3, db_d = 0;
    std::string db_out;
    ModelFlags db_model;
    auto* db = app.add_subcommand("debias", "Observation probabilities p(H) for a model");
    db->add_option("--k", db_k, "Walk length")->required();
    db->add_option("--d", db_d, "Matrix dimension (graph model pattern size)");
    db->add_option("--out", db_out, "Output file (default stdout)");
    db_model.attach(db);

    // --- estimate ---
    std::string est_matrix, est_omega, est_out;
    int est_k = 5, est_d = 0;
    ModelFlags est_model;
    auto* est = app.add_subcommand("estimate", "De-biased Schatten k-norm estimate from a sample");
    est->add_option("--matrix", est_matrix, "Dense CSV ground-truth matrix");
    est->add_option("--omega", est_omega, "Observed index/value triplet file");
    est->add_option("--d", est_d, "Dimension (when only --omega is given)");
    est->add_option("--k", est_k, "Norm order")->required();
    est->add_option("--out", est_out, "Output file (default stdout)");
    est_model.attach(est);

    // --- genrank ---
    std::string gr_matrix, gr_omega, gr_out;
    int gr_d = 0, gr_s = 1;
    double gr_c1 = 0.6, gr_c2 = 0.5;
    ModelFlags gr_model;
    auto* gr = app.add_subcommand("genrank", "Generalized rank estimate from a sample");
    gr->add_option("--matrix", gr_matrix, "Dense CSV ground-truth matrix");
    gr->add_option("--omega", gr_omega, "Observed index/value triplet file");
    gr->add_option("--d", gr_d, "Dimension (when only --omega is given)");
    gr->add_option("--c1", gr_c1, "Upper threshold")->required();
    gr->add_option("--c2", gr_c2, "Lower threshold")->required();
    gr->add_option("--s", gr_s, "Sharpening degree");
    gr->add_option("--out", gr_out, "Output file (default stdout)");
    gr_model.attach(gr);

    // --- spectrum ---
    std::string sp_matrix, sp_omega, sp_moments, sp_out, sp_cdf;
    int sp_d = 0, sp_r = 1, sp_K = 7;
    double sp_a = 0.0, sp_b = 2.0, sp_eps = 0.05;
    ModelFlags sp_model;
    auto* sp = app.add_subcommand("spectrum", "Recover singular values by moment matching");
    bool sp_from_omega = false;
    sp->add_option("--moments", sp_moments, "File with theta_k per line (k = 1..K)");
    sp->add_flag("--from-omega", sp_from_omega,
                 "Estimate the moments from --matrix/--omega instead of --moments");
    sp->add_option("--matrix", sp_matrix, "Dense CSV ground-truth matrix");
    sp->add_option("--omega", sp_omega, "Observed index/value triplet file");
    sp->add_option("--d", sp_d, "Dimension (when only --omega is given)");
    sp->add_option("--a", sp_a, "Grid lower bound");
    sp->add_option("--b", sp_b, "Grid upper bound");
    sp->add_option("--eps", sp_eps, "Grid spacing");
    sp->add_option("--r", sp_r, "Target rank")->required();
    sp->add_option("--K", sp_K, "Number of moments");
    sp->add_option("--out", sp_out, "Output file (default stdout)");
    sp->add_option("--cdf-csv", sp_cdf, "Also write the empirical CDF as CSV");
    sp_model.attach(sp);

    // --- experiment ---
    ExperimentConfig cfg;
    std::string exp_config;
    std::vector<int> exp_ks;
    auto* exp = app.add_subcommand("experiment", "Run a study recipe and write CSV");
    exp->add_option("--recipe", cfg.recipe, "fig2 | fig4 | fig5 | fig6 | fig7 | fig8")->required();
    exp->add_option("--d", cfg.d, "Dimension");
    exp->add_option("--r", cfg.r, "Rank");
    exp->add_option("--k", exp_ks, "Norm order(s)");
    exp->add_option("--r-grid", cfg.r_grid, "Rank grid (fig5/fig8)");
    exp->add_option("--p", cfg.p_grid, "Probability grid");
    exp->add_option("--factors", cfg.grid_factors, "Grid as multiples of the theory line");
    exp->add_option("--trials", cfg.trials, "Trials per cell");
    exp->add_option("--seed", cfg.seed, "Base seed");
    exp->add_option("--delta", cfg.delta, "Success threshold on relative error");
    exp->add_option("--c1", cfg.c1, "Upper threshold (fig6)");
    exp->add_option("--c2", cfg.c2, "Lower threshold (fig6)");
    exp->add_option("--s", cfg.s, "Sharpening degree (fig6)");
    exp->add_option("--K", cfg.K, "Moments (fig7)");
    exp->add_option("--a", cfg.a, "Grid lower bound (fig7)");
    exp->add_option("--b", cfg.b, "Grid upper bound (fig7)");
    exp->add_option("--eps", cfg.eps, "Grid spacing (fig7)");
    exp->add_option("--peaks", cfg.peaks, "Spectrum peaks, 1 or 2 (fig7)");
    exp->add_option("--alpha", cfg.alpha, "Sampling level (fig7)");
    exp->add_flag("--full-observation", cfg.full_observation, "Use p = 1 (fig7)");
    exp->add_option("--ell", cfg.ell_grid, "Absolute clique sizes (fig8)");
    exp->add_option("--threads", cfg.threads, "Worker threads (0: SCHATTEN_THREADS or all)");
    exp->add_option("--out", cfg.out, "Output CSV path");
    exp->add_option("--config", exp_config, "key=value config file applied before flags");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (*cat) {
            json entries = json::array();
            for (const auto& entry : enumerate_catalog(cat_k)) {
                json edges = json::array();
                for (const auto& e : entry.graph.edges())
                    edges.push_back({{"u", e.u}, {"v", e.v}, {"mult", e.mult}});
                entries.push_back({{"key", entry.graph.key()},
                                   {"num_vertices", entry.graph.num_vertices()},
                                   {"m", entry.m},
                                   {"loops", entry.loops},
                                   {"c", entry.c},
                                   {"edges", edges}});
            }
            emit({{"k", cat_k}, {"size", entries.size()}, {"entries", entries}}, cat_out);
        } else if (*wts) {
            const SymmetricMatrix m = read_dense_csv_file(w_matrix);
            const WalkWeightTable table = w_oracle ? gamma_oracle(m, w_k)
                                                   : gamma_closed_form(m, w_k);
            emit({{"k", w_k},
                  {"source", table.source == WalkWeightTable::Source::oracle ? "oracle"
                                                                             : "closed_form"},
                  {"weights", table_to_json(table.weights)}},
                 w_out);
        } else if (*db) {
            DebiasTable table;
            if (db_model.model == "er") {
                table = debias_er(db_k, db_model.p);
            } else {
                if (db_d <= 0) throw CLI::ValidationError("--d required for graph model");
                const auto model = db_model.build(db_d);
                table = debias_graph(db_k, model.pattern());
            }
            emit({{"k", db_k},
                  {"model", db_model.model},
                  {"probs", table_to_json(table.probs)},
                  {"zero_patterns", table.zero_keys()}},
                 db_out);
        } else if (*est) {
            const SampledMatrix s = load_sample(est_matrix, est_omega, &est_d);
            const auto model = est_model.build(s.dim());
            const auto report = estimate_schatten(s, model, est_k);
            json payload = report_to_json(report);
            const double value = std::pow(std::max(report.theta_hat, 0.0), 1.0 / est_k);
            payload["norm_estimate"] = value;
            payload["clamped"] = report.theta_hat < 0.0;
            emit(payload, est_out);
        } else if (*gr) {
            const SampledMatrix s = load_sample(gr_matrix, gr_omega, &gr_d);
            const auto model = gr_model.build(s.dim());
            const auto report = generalized_rank(s, model, gr_c1, gr_c2, gr_s);
            emit({{"r_hat", report.r_hat},
                  {"degree", report.approx.degree},
                  {"chebyshev_degree", report.approx.chebyshev_degree},
                  {"s", report.approx.sharpening},
                  {"fit_sup_error", report.approx.sup_error_estimate},
                  {"coeffs", report.approx.poly.coeffs},
                  {"per_k_estimates", report.per_k}},
                 gr_out);
        } else if (*sp) {
            MomentVector moments;
            if (sp_from_omega && !sp_moments.empty())
                throw CLI::ValidationError("--from-omega and --moments are exclusive");
            if (!sp_moments.empty()) {
                std::ifstream in(sp_moments);
                if (!in) throw std::runtime_error("cannot open moments file: " + sp_moments);
                double value;
                while (in >> value) moments.values.push_back(value);
                moments.K = static_cast<int>(moments.values.size());
                if (sp_K < moments.K) {
                    moments.values.resize(sp_K);
                    moments.K = sp_K;
                }
            } else {
                const SampledMatrix s = load_sample(sp_matrix, sp_omega, &sp_d);
                moments = MomentVector::estimated(s, sp_model.build(s.dim()), sp_K);
            }
            const auto dist = moment_match(moments, sp_a, sp_b, sp_eps, sp_r);
            const auto quantiles = quantile_extract(dist, sp_r);
            emit({{"grid", dist.grid},
                  {"masses", dist.masses},
                  {"quantiles", quantiles},
                  {"objective", dist.objective}},
                 sp_out);
            if (!sp_cdf.empty()) {
                std::ofstream cdf(sp_cdf);
                if (!cdf) throw std::runtime_error("cannot open cdf file: " + sp_cdf);
                cdf << "# columns: sigma, cdf\n";
                double cum = 0.0;
                char buf[96];
                for (std::size_t n = 0; n < dist.grid.size(); ++n) {
                    cum += dist.masses[n];
                    std::snprintf(buf, sizeof(buf), "%.17g,%.17g\n", dist.grid[n], cum);
                    cdf << buf;
                }
            }
        } else if (*exp) {
            if (!exp_config.empty()) apply_config_file(exp_config, cfg);
            if (!exp_ks.empty()) cfg.ks = exp_ks;
            const std::string path = run_recipe(cfg);
            std::cout << path << "\n";
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const ResourceGuardError& e) {
        std::cerr << "resource guard: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
