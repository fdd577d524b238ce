#include "schatten/matrix.hpp"
#include "schatten/matrix_io.hpp"
#include "schatten/psd.hpp"

#include "test_helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace schatten;
using schatten::testing::random_symmetric;
using schatten::testing::rel_err;

TEST_CASE("split_diag_offdiag reassembles exactly") {
    SymmetricMatrix m(2);
    m.set(0, 0, 2.0);
    m.set(0, 1, 1.0);
    m.set(1, 1, 3.0);
    const auto [diag, off] = split_diag_offdiag(m);
    CHECK(diag(0, 0) == 2.0);
    CHECK(diag(1, 1) == 3.0);
    CHECK(diag(0, 1) == 0.0);
    CHECK(off(0, 1) == 1.0);
    CHECK(off(0, 0) == 0.0);
    CHECK((diag.mat() + off.mat() - m.mat()).cwiseAbs().maxCoeff() == 0.0);

    const auto [di, oi] = split_diag_offdiag(SymmetricMatrix::identity(3));
    CHECK(di.mat().isApprox(Matrix::Identity(3, 3)));
    CHECK(oi.mat().cwiseAbs().maxCoeff() == 0.0);

    const auto ones = SymmetricMatrix::from_upper(Matrix::Ones(2, 2));
    const auto [d1, o1] = split_diag_offdiag(ones);
    CHECK(d1.mat().isApprox(Matrix::Identity(2, 2)));
    CHECK(o1(0, 1) == 1.0);
    CHECK(o1(1, 0) == 1.0);
}

TEST_CASE("elementwise kernels") {
    CHECK(trace(Matrix{{2.0, 0.0}, {0.0, 3.0}}) == 5.0);
    CHECK(ones_offdiag(2).isApprox(Matrix{{0.0, 1.0}, {1.0, 0.0}}));
    const Matrix a{{1.0, 2.0}, {2.0, 1.0}};
    CHECK(hadamard(a, a).isApprox(Matrix{{1.0, 4.0}, {4.0, 1.0}}));
    CHECK_THROWS_AS(hadamard(a, Matrix::Ones(3, 3)), std::invalid_argument);
    CHECK(matmul(a, Matrix::Identity(2, 2)).isApprox(a));
    CHECK_THROWS_AS(matmul(a, Matrix::Ones(3, 3)), std::invalid_argument);
    CHECK(total_sum(a) == 6.0);
    CHECK(row_sums(a).isApprox(Vector::Constant(2, 3.0)));
}

TEST_CASE("schatten_norm_exact") {
    CHECK(rel_err(schatten_norm_exact(SymmetricMatrix::identity(5), 3.0),
                  std::pow(5.0, 1.0 / 3.0)) < 1e-12);
    const auto ones2 = SymmetricMatrix::from_upper(Matrix::Ones(2, 2));
    CHECK(rel_err(schatten_norm_exact(ones2, 3.0), 2.0) < 1e-12);

    // PSD case: matches the trace of the repeatedly squared matrix.
    auto [m, model] = generate_psd(6, 6, SingularValueLaw::uniform(0.5, 2.0), 7);
    const Matrix m2 = m.mat() * m.mat();
    const double tr4 = (m2 * m2).trace();
    CHECK(rel_err(schatten_norm_exact(m, 4.0), std::pow(tr4, 0.25)) < 1e-10);
}

TEST_CASE("trace power identity for k in 1..7") {
    const auto m = random_symmetric(12, 99);
    Matrix power = Matrix::Identity(12, 12);
    const Vector evals = m.eigenvalues();
    for (int k = 1; k <= 7; ++k) {
        power = power * m.mat();
        double eig_sum = 0.0;
        for (int i = 0; i < evals.size(); ++i) eig_sum += std::pow(evals[i], k);
        CHECK(rel_err(power.trace(), eig_sum) < 1e-9);
    }
}

TEST_CASE("generate_psd contracts") {
    auto [m, model] = generate_psd(4, 4, SingularValueLaw::constant(1.0), 3);
    for (int k = 1; k <= 5; ++k)
        CHECK(rel_err(schatten_power_exact(m, k), 4.0) < 1e-10);

    auto [m2, model2] = generate_psd(60, 12, SingularValueLaw::uniform(1.0, 2.0), 5);
    const Vector evals = m2.eigenvalues();
    int above = 0;
    for (int i = 0; i < evals.size(); ++i) above += evals[i] > 1e-8 * model2.singular_values[0];
    CHECK(above == 12);
    CHECK(model2.kappa <= 2.0 + 1e-12);
    CHECK(model2.kappa >= 1.0);
    CHECK(model2.mu > 0.0);

    auto [ma, xa] = generate_psd(20, 5, SingularValueLaw::uniform(1.0, 2.0), 11);
    auto [mb, xb] = generate_psd(20, 5, SingularValueLaw::uniform(1.0, 2.0), 11);
    CHECK((ma.mat() - mb.mat()).cwiseAbs().maxCoeff() == 0.0);

    // the factor is orthonormal: eigenvalues of M reproduce the drawn
    // singular values to solver precision, the rest vanish
    const Vector evals_a = ma.eigenvalues();
    for (int i = 0; i < 5; ++i)
        CHECK(std::abs(evals_a[19 - i] - xa.singular_values[i]) < 1e-10);
    for (int i = 0; i < 15; ++i) CHECK(std::abs(evals_a[i]) < 1e-10);

    CHECK_THROWS_AS(generate_psd(4, 5, SingularValueLaw::constant(1.0), 0), std::invalid_argument);
}

TEST_CASE("rank_r_projection_baseline") {
    auto [m, model] = generate_psd(16, 8, SingularValueLaw::uniform(1.0, 2.0), 21);
    const auto full = SampledMatrix::full(m);
    CHECK(rel_err(rank_r_projection_baseline(full, 1.0, 16, 5),
                  schatten_power_exact(m, 5.0)) < 1e-9);
    CHECK(rank_r_projection_baseline(full, 1.0, 4, 5) <= schatten_power_exact(m, 5.0) + 1e-9);
    CHECK_THROWS_AS(rank_r_projection_baseline(full, 1.0, 17, 5), std::invalid_argument);
}

TEST_CASE("sampled matrix densification and duplicates") {
    SampledMatrix s(3);
    s.add(2, 0, 5.0); // reordered to (0, 2)
    s.add(1, 1, -1.0);
    const auto dense = s.to_dense();
    CHECK(dense(0, 2) == 5.0);
    CHECK(dense(2, 0) == 5.0);
    CHECK(dense(1, 1) == -1.0);
    CHECK(dense(0, 0) == 0.0);
    s.add(0, 2, 1.0);
    CHECK_THROWS_AS(s.entries(), std::invalid_argument);
}

TEST_CASE("matrix io round trips bit-exactly") {
    const auto m = random_symmetric(7, 1234, 3.7e-3);
    std::stringstream csv;
    write_dense_csv(csv, m);
    const auto m2 = read_dense_csv(csv);
    CHECK((m.mat() - m2.mat()).cwiseAbs().maxCoeff() == 0.0);

    SampledMatrix s(5);
    s.add(0, 3, 1.0 / 3.0);
    s.add(2, 2, -7.77e-11);
    std::stringstream trip;
    write_triplets(trip, s);
    const auto s2 = read_triplets(trip, 5);
    REQUIRE(s2.count() == 2);
    CHECK(s2.entries()[0].value == 1.0 / 3.0);
    CHECK(s2.entries()[1].value == -7.77e-11);
}
