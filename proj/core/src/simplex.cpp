#include "schatten/simplex.hpp"

#include <cmath>
#include <stdexcept>

namespace schatten {
namespace {

// Primal simplex over an explicit tableau. Rows are constraints, the basis
// holds one column index per row. Bland's rule: smallest eligible index.
class Tableau {
public:
    // Requires b >= 0 (the caller flips rows first).
    Tableau(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, double tol)
        : m_(static_cast<int>(a.rows())), n_(static_cast<int>(a.cols())), tol_(tol) {
        t_.resize(m_, n_ + 1);
        t_.leftCols(n_) = a;
        t_.col(n_) = b;
        basis_.assign(m_, -1);
    }

    int rows() const { return m_; }
    int cols() const { return n_; }
    std::vector<int>& basis() { return basis_; }

    double rhs(int r) const { return t_(r, n_); }

    void pivot(int row, int col) {
        t_.row(row) /= t_(row, col);
        for (int r = 0; r < m_; ++r) {
            if (r == row) continue;
            const double factor = t_(r, col);
            if (factor != 0.0) t_.row(r) -= factor * t_.row(row);
        }
        basis_[row] = col;
    }

    // Minimizes obj (length n) over the current feasible tableau; only
    // columns below `entering_limit` may enter the basis. Returns false if
    // unbounded or the iteration cap is hit.
    bool run(const Eigen::VectorXd& obj, int entering_limit, int max_iterations) {
        Eigen::VectorXd cost = obj;
        Eigen::VectorXd reduced = Eigen::VectorXd::Zero(n_ + 1);
        for (int iter = 0; iter < max_iterations; ++iter) {
            // reduced costs: c_j - c_B' B^-1 A_j over the tableau
            reduced.setZero();
            reduced.head(n_) = cost;
            for (int r = 0; r < m_; ++r) {
                const double cb = cost[basis_[r]];
                if (cb != 0.0) reduced -= cb * t_.row(r).transpose();
            }
            int entering = -1;
            for (int j = 0; j < entering_limit; ++j) {
                if (reduced[j] < -tol_) {
                    entering = j;
                    break; // Bland: first eligible
                }
            }
            if (entering < 0) return true; // optimal

            int leaving = -1;
            double best_ratio = 0.0;
            for (int r = 0; r < m_; ++r) {
                const double a = t_(r, entering);
                if (a > tol_) {
                    const double ratio = t_(r, n_) / a;
                    if (leaving < 0 || ratio < best_ratio - 1e-15 ||
                        (std::abs(ratio - best_ratio) <= 1e-15 &&
                         basis_[r] < basis_[leaving])) {
                        leaving = r;
                        best_ratio = ratio;
                    }
                }
            }
            if (leaving < 0) return false; // unbounded
            pivot(leaving, entering);
        }
        return false;
    }

    Eigen::MatrixXd t_;

private:
    int m_, n_;
    double tol_;
    std::vector<int> basis_;
};

} // namespace

LpSolution solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                    double tol, int max_iterations) {
    const int m = static_cast<int>(a.rows());
    const int n = static_cast<int>(a.cols());
    if (b.size() != m || c.size() != n) throw std::invalid_argument("solve_lp: shape mismatch");

    // Normalize to b >= 0, then add one artificial variable per row.
    Eigen::MatrixXd a0 = a;
    Eigen::VectorXd b0 = b;
    for (int r = 0; r < m; ++r) {
        if (b0[r] < 0.0) {
            a0.row(r) = -a0.row(r);
            b0[r] = -b0[r];
        }
    }
    Eigen::MatrixXd a1(m, n + m);
    a1.leftCols(n) = a0;
    a1.rightCols(m) = Eigen::MatrixXd::Identity(m, m);
    Tableau tab(a1, b0, tol);
    for (int r = 0; r < m; ++r) tab.basis()[r] = n + r;
    Eigen::VectorXd phase1 = Eigen::VectorXd::Zero(n + m);
    phase1.tail(m).setOnes();

    LpSolution sol;
    if (!tab.run(phase1, n + m, max_iterations)) return sol;
    double artificial_mass = 0.0;
    for (int r = 0; r < m; ++r)
        if (tab.basis()[r] >= n) artificial_mass += tab.rhs(r);
    if (artificial_mass > 1e-7) return sol; // infeasible
    sol.feasible = true;

    // Drive leftover (degenerate) artificials out of the basis.
    for (int r = 0; r < m; ++r) {
        if (tab.basis()[r] < n) continue;
        int col = -1;
        for (int j = 0; j < n; ++j)
            if (std::abs(tab.t_(r, j)) > tol) {
                col = j;
                break;
            }
        if (col >= 0) tab.pivot(r, col);
        // else: redundant row; keep the artificial at value zero
    }

    // Phase 2 on the original objective; artificial columns stay out.
    Eigen::VectorXd phase2 = Eigen::VectorXd::Zero(n + m);
    phase2.head(n) = c;
    if (!tab.run(phase2, n, max_iterations)) return sol;

    sol.x = Eigen::VectorXd::Zero(n);
    for (int r = 0; r < m; ++r)
        if (tab.basis()[r] < n) sol.x[tab.basis()[r]] = tab.rhs(r);
    sol.objective = c.dot(sol.x);
    sol.optimal = true;
    return sol;
}

} // namespace schatten
