#include "schatten/psd.hpp"

#include "schatten/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace schatten {
namespace {

std::vector<double> draw_singular_values(int r, const SingularValueLaw& law, Rng& rng) {
    std::vector<double> sv(r);
    std::visit(
        [&](const auto& l) {
            using L = std::decay_t<decltype(l)>;
            if constexpr (std::is_same_v<L, SingularValueLaw::Constant>) {
                std::fill(sv.begin(), sv.end(), l.value);
            } else if constexpr (std::is_same_v<L, SingularValueLaw::Uniform>) {
                for (double& v : sv) v = rng.uniform(l.lo, l.hi);
            } else if constexpr (std::is_same_v<L, SingularValueLaw::TwoPoint>) {
                const int n_hi = static_cast<int>(std::lround(l.weight_hi * r));
                for (int i = 0; i < r; ++i) sv[i] = i < n_hi ? l.hi : l.lo;
            } else {
                for (int i = 0; i < r; ++i)
                    sv[i] = i < r / 2 ? rng.uniform(l.lo1, l.hi1) : rng.uniform(l.lo2, l.hi2);
            }
        },
        law.law);
    std::sort(sv.begin(), sv.end(), std::greater<>());
    return sv;
}

} // namespace

double measure_incoherence(const SymmetricMatrix& m, const SpectrumModel& model) {
    const int d = m.dim();
    const double sigma1 = model.singular_values.empty() ? 0.0 : model.singular_values.front();
    if (sigma1 <= 0.0 || model.rank == 0) return 0.0;
    // A1/A2 read off M itself: sum_a U_ia U_ja sigma_a = M_ij / sigma_1 scaled.
    const double r = static_cast<double>(model.rank);
    double mu = 0.0;
    for (int i = 0; i < d; ++i) {
        mu = std::max(mu, m(i, i) * d / (r * sigma1));
        for (int j = i + 1; j < d; ++j)
            mu = std::max(mu, std::abs(m(i, j)) * d / (std::sqrt(r) * sigma1));
    }
    return mu;
}

std::pair<SymmetricMatrix, SpectrumModel> generate_psd(int d, int r,
                                                       const SingularValueLaw& law,
                                                       std::uint64_t seed) {
    if (d < 1 || r < 1 || r > d)
        throw std::invalid_argument("generate_psd: need 1 <= r <= d");
    Rng rng(seed);
    Matrix g(d, d);
    for (int j = 0; j < d; ++j)
        for (int i = 0; i < d; ++i) g(i, j) = rng.gaussian();
    Eigen::HouseholderQR<Matrix> qr(g);
    Matrix q = qr.householderQ() * Matrix::Identity(d, r);
    // Fix column signs so the factor is unique given g (QR sign ambiguity).
    const Matrix rfac = qr.matrixQR().topRows(r).triangularView<Eigen::Upper>();
    for (int j = 0; j < r; ++j)
        if (rfac(j, j) < 0.0) q.col(j) = -q.col(j);

    std::vector<double> sv = draw_singular_values(r, law, rng);
    Matrix sigma = Matrix::Zero(r, r);
    for (int i = 0; i < r; ++i) sigma(i, i) = sv[i];
    SymmetricMatrix m = SymmetricMatrix::from_upper(q * sigma * q.transpose());

    SpectrumModel model;
    model.rank = r;
    model.singular_values = std::move(sv);
    const double smin = model.singular_values.back();
    model.kappa = smin > 0.0 ? model.singular_values.front() / smin
                             : std::numeric_limits<double>::infinity();
    model.mu = measure_incoherence(m, model);
    return {std::move(m), std::move(model)};
}

double rank_r_projection_baseline(const SampledMatrix& s, double p, int r, double k) {
    if (p <= 0.0 || p > 1.0)
        throw std::invalid_argument("rank_r_projection_baseline: need 0 < p <= 1");
    if (r < 0 || r > s.dim())
        throw std::invalid_argument("rank_r_projection_baseline: need 0 <= r <= d");
    const Matrix rescaled = s.to_dense().mat() / p;
    Eigen::SelfAdjointEigenSolver<Matrix> solver(rescaled, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("rank_r_projection_baseline: eigendecomposition failed");
    Vector evals = solver.eigenvalues();
    std::vector<double> mags(evals.size());
    for (int i = 0; i < evals.size(); ++i) mags[i] = std::abs(evals[i]);
    std::sort(mags.begin(), mags.end(), std::greater<>());
    double acc = 0.0;
    for (int i = 0; i < r; ++i) acc += std::pow(mags[i], k);
    return acc;
}

} // namespace schatten
