#include "schatten/matrix.hpp"

#include <algorithm>
#include <cmath>

namespace schatten {

SymmetricMatrix::SymmetricMatrix(int dim) {
    if (dim < 1) throw std::invalid_argument("SymmetricMatrix: dim must be >= 1");
    mat_ = Matrix::Zero(dim, dim);
}

SymmetricMatrix SymmetricMatrix::from_upper(const Matrix& dense) {
    if (dense.rows() != dense.cols() || dense.rows() < 1)
        throw std::invalid_argument("SymmetricMatrix: matrix must be square, d >= 1");
    SymmetricMatrix out(static_cast<int>(dense.rows()));
    const int d = out.dim();
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            out.mat_(i, j) = dense(i, j);
            out.mat_(j, i) = dense(i, j);
        }
    return out;
}

SymmetricMatrix SymmetricMatrix::from_symmetric(const Matrix& dense, double tol) {
    if (dense.rows() != dense.cols() || dense.rows() < 1)
        throw std::invalid_argument("SymmetricMatrix: matrix must be square, d >= 1");
    const double asym = (dense - dense.transpose()).cwiseAbs().maxCoeff();
    if (asym > tol)
        throw std::invalid_argument("SymmetricMatrix: input is not symmetric (max asymmetry " +
                                    std::to_string(asym) + ")");
    return from_upper(dense);
}

SymmetricMatrix SymmetricMatrix::identity(int dim) {
    SymmetricMatrix out(dim);
    out.mat_.setIdentity();
    return out;
}

SymmetricMatrix SymmetricMatrix::scaled(double c) const {
    SymmetricMatrix out(dim());
    out.mat_ = mat_ * c;
    return out;
}

Vector SymmetricMatrix::eigenvalues() const {
    if (!mat_.allFinite())
        throw std::runtime_error("eigenvalues: matrix has non-finite entries");
    Eigen::SelfAdjointEigenSolver<Matrix> solver(mat_, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("eigenvalues: eigendecomposition failed");
    return solver.eigenvalues();
}

void SampledMatrix::add(int i, int j, double value) {
    if (i < 0 || j < 0 || i >= dim_ || j >= dim_)
        throw std::invalid_argument("SampledMatrix::add: index out of range");
    if (i > j) std::swap(i, j);
    entries_.push_back({i, j, value});
    sorted_ = false;
}

void SampledMatrix::normalize() const {
    if (sorted_) return;
    std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
        return a.i != b.i ? a.i < b.i : a.j < b.j;
    });
    for (std::size_t n = 1; n < entries_.size(); ++n)
        if (entries_[n].i == entries_[n - 1].i && entries_[n].j == entries_[n - 1].j)
            throw std::invalid_argument("SampledMatrix: duplicate entry (" +
                                        std::to_string(entries_[n].i) + ", " +
                                        std::to_string(entries_[n].j) + ")");
    sorted_ = true;
}

const std::vector<SampledMatrix::Entry>& SampledMatrix::entries() const {
    normalize();
    return entries_;
}

SymmetricMatrix SampledMatrix::to_dense() const {
    normalize();
    Matrix dense = Matrix::Zero(dim_, dim_);
    for (const Entry& e : entries_) {
        dense(e.i, e.j) = e.value;
        dense(e.j, e.i) = e.value;
    }
    return SymmetricMatrix::from_upper(dense);
}

SampledMatrix SampledMatrix::relabeled(const std::vector<int>& perm) const {
    if (static_cast<int>(perm.size()) != dim_)
        throw std::invalid_argument("SampledMatrix::relabeled: permutation size mismatch");
    SampledMatrix out(dim_);
    for (const Entry& e : entries()) out.add(perm[e.i], perm[e.j], e.value);
    return out;
}

SampledMatrix SampledMatrix::full(const SymmetricMatrix& m) {
    SampledMatrix out(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = i; j < m.dim(); ++j) out.add(i, j, m(i, j));
    return out;
}

std::pair<SymmetricMatrix, SymmetricMatrix> split_diag_offdiag(const SymmetricMatrix& m) {
    const int d = m.dim();
    Matrix diag = Matrix::Zero(d, d);
    diag.diagonal() = m.mat().diagonal();
    Matrix off = m.mat();
    off.diagonal().setZero();
    return {SymmetricMatrix::from_upper(diag), SymmetricMatrix::from_upper(off)};
}

Matrix matmul(const Matrix& a, const Matrix& b) {
    if (a.cols() != b.rows()) throw std::invalid_argument("matmul: dimension mismatch");
    return a * b;
}

Matrix hadamard(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols())
        throw std::invalid_argument("hadamard: dimension mismatch");
    return a.cwiseProduct(b);
}

double trace(const Matrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("trace: matrix must be square");
    return a.trace();
}

Vector row_sums(const Matrix& a) { return a.rowwise().sum(); }

double total_sum(const Matrix& a) { return a.sum(); }

Matrix ones_offdiag(int d) {
    if (d < 1) throw std::invalid_argument("ones_offdiag: d must be >= 1");
    Matrix r = Matrix::Ones(d, d);
    r.diagonal().setZero();
    return r;
}

double schatten_power_exact(const SymmetricMatrix& m, double k) {
    if (k <= 0.0) throw std::invalid_argument("schatten_power_exact: k must be positive");
    const Vector evals = m.eigenvalues();
    double acc = 0.0;
    for (int i = 0; i < evals.size(); ++i) acc += std::pow(std::abs(evals[i]), k);
    return acc;
}

double schatten_norm_exact(const SymmetricMatrix& m, double k) {
    return std::pow(schatten_power_exact(m, k), 1.0 / k);
}

} // namespace schatten
