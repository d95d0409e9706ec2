#pragma once

#include <Eigen/Dense>

#include "bdae/image.hpp"
#include "bdae/patches.hpp"

namespace bdae {

/// Outcome of one image-space least-squares update.
struct ImageSolve {
    Image image;
    int cg_iterations = 0;
    double relative_residual = 0.0;
    bool converged = false;
};

/// Applies v -> alpha v + sum_i P_i^T M P_i v without materialising the
/// (h*w) x (h*w) matrix. `m` is patch_dim x patch_dim and should be
/// symmetric positive semidefinite.
Image apply_patch_operator(double alpha, const Eigen::MatrixXd& m, const Image& v,
                           const PatchConfig& cfg);

/// Solves (alpha I + sum_i P_i^T M P_i) x = rhs by conjugate gradient,
/// starting from `x0`.
ImageSolve solve_patch_system(double alpha, const Eigen::MatrixXd& m, const Image& rhs,
                              const Image& x0, const PatchConfig& cfg, double tol, int maxit);

}  // namespace bdae
