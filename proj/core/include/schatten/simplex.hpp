#pragma once

#include <Eigen/Dense>

#include <vector>

namespace schatten {

/**
 * Small dense LP in computational standard form:
 *     min c'x   s.t.   A x = b,  x >= 0
 * solved by a two-phase primal simplex with Bland's rule (no cycling).
 * Sized for the moment-matching problems here: a handful of rows, a few
 * hundred columns.
 */
struct LpSolution {
    Eigen::VectorXd x;
    double objective = 0.0;
    bool optimal = false;
    bool feasible = false;
};

LpSolution solve_lp(const Eigen::MatrixXd& a, const Eigen::VectorXd& b, const Eigen::VectorXd& c,
                    double tol = 1e-9, int max_iterations = 200000);

} // namespace schatten
