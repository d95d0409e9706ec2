#pragma once

#include <functional>

#include <Eigen/Dense>

namespace bdae {

/// Tikhonov weight used on every pseudoinverse-style solve.
struct RidgeParams {
    double epsilon = 1e-6;
};

/// Returns W minimising ||A - W B||_F^2 + eps ||W||_F^2, i.e.
/// W = A B^T (B B^T + eps I)^{-1}. Throws SolverError when eps == 0 and
/// B B^T is numerically singular.
Eigen::MatrixXd ridge_solve_left(const Eigen::Ref<const Eigen::MatrixXd>& a,
                                 const Eigen::Ref<const Eigen::MatrixXd>& b,
                                 const RidgeParams& params);

using LinearOperator = std::function<Eigen::VectorXd(const Eigen::VectorXd&)>;

struct CgResult {
    Eigen::VectorXd x;
    int iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
};

/// Conjugate gradient for a symmetric positive definite operator. Stops
/// once ||apply(x) - rhs|| <= tol * ||rhs|| or after `max_iterations`.
/// Non-convergence is reported through CgResult, never thrown.
CgResult cg_solve(const LinearOperator& apply, const Eigen::VectorXd& rhs,
                  const Eigen::VectorXd& x0, double tol, int max_iterations);

CgResult cg_solve(const LinearOperator& apply, const Eigen::VectorXd& rhs, double tol,
                  int max_iterations);

/// Largest singular value by power iteration on M^T M.
double spectral_norm(const Eigen::Ref<const Eigen::MatrixXd>& m, int max_iterations = 50,
                     double tol = 1e-8);

}  // namespace bdae
