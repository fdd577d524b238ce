#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace schatten {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/**
 * Dense symmetric d x d matrix. Symmetry holds exactly by construction:
 * every factory mirrors the upper triangle, so A(i,j) == A(j,i) bitwise.
 */
class SymmetricMatrix {
public:
    /// Zero matrix of dimension d >= 1.
    explicit SymmetricMatrix(int dim);

    /// Mirrors the upper triangle (j >= i) of `dense` onto the lower one.
    static SymmetricMatrix from_upper(const Matrix& dense);

    /// Requires `dense` to be symmetric up to `tol` (max abs difference).
    static SymmetricMatrix from_symmetric(const Matrix& dense, double tol = 0.0);

    static SymmetricMatrix identity(int dim);

    int dim() const { return static_cast<int>(mat_.rows()); }
    double operator()(int i, int j) const { return mat_(i, j); }
    const Matrix& mat() const { return mat_; }

    /// In-place entry update keeping symmetry (sets both (i,j) and (j,i)).
    void set(int i, int j, double value) {
        mat_(i, j) = value;
        mat_(j, i) = value;
    }

    SymmetricMatrix scaled(double c) const;

    /// Eigenvalues in ascending order (self-adjoint solver).
    Vector eigenvalues() const;

private:
    Matrix mat_;
};

/**
 * Sparse symmetric set of observed entries: P_Omega(M) as data. Only keys
 * with i <= j are stored; consumers mirror on read. Loops (i == j) allowed.
 */
class SampledMatrix {
public:
    struct Entry {
        int i, j;   // i <= j
        double value;
    };

    explicit SampledMatrix(int dim) : dim_(dim) {
        if (dim < 1) throw std::invalid_argument("SampledMatrix: dim must be >= 1");
    }

    /// Adds an observation; indices are reordered to i <= j. Duplicate keys throw.
    void add(int i, int j, double value);

    int dim() const { return dim_; }
    std::size_t count() const { return entries_.size(); }
    /// Entries sorted by (i, j).
    const std::vector<Entry>& entries() const;

    /// Densifies with zeros elsewhere; mirrors across the diagonal.
    SymmetricMatrix to_dense() const;

    /// Relabels indices by `perm` (entry (i,j) -> (perm[i], perm[j])).
    SampledMatrix relabeled(const std::vector<int>& perm) const;

    /// Full observation of M (every i <= j pair).
    static SampledMatrix full(const SymmetricMatrix& m);

private:
    int dim_;
    mutable std::vector<Entry> entries_;
    mutable bool sorted_ = true;
    void normalize() const;
};

// --- elementwise / product kernels used by the closed-form weight formulas ---

/// M = D + O with D the diagonal part and O the off-diagonal part.
std::pair<SymmetricMatrix, SymmetricMatrix> split_diag_offdiag(const SymmetricMatrix& m);

Matrix matmul(const Matrix& a, const Matrix& b);
Matrix hadamard(const Matrix& a, const Matrix& b);
double trace(const Matrix& a);
/// v_i = sum_j A_ij
Vector row_sums(const Matrix& a);
double total_sum(const Matrix& a);
/// All-ones matrix with a zero diagonal (the R of the weight formulas).
Matrix ones_offdiag(int d);

/// Schatten k-norm (sum_i |lambda_i|^k)^(1/k) by eigendecomposition; k > 0 real.
double schatten_norm_exact(const SymmetricMatrix& m, double k);

/// sum_i |lambda_i|^k without the root; the quantity the estimator targets.
double schatten_power_exact(const SymmetricMatrix& m, double k);

} // namespace schatten
