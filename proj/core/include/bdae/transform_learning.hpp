#pragma once

#include <Eigen/Dense>

#include "bdae/config.hpp"
#include "bdae/image.hpp"
#include "bdae/patch_system.hpp"
#include "bdae/patches.hpp"
#include "bdae/report.hpp"

namespace bdae {

/// State of the sparsifying-transform baseline (square transform).
struct TransformState {
    Eigen::MatrixXd transform;  ///< T, patch_dim x patch_dim
    Eigen::MatrixXd codes;      ///< Z, patch_dim x count
    Image estimate;
    double tl_lambda = 0.0;
    int tau = 0;
    double coupling = 0.5;
    double eps_reg = 1.0;
};

/// Z = column-wise best tau-sparse approximation of T X.
Eigen::MatrixXd tl_sparse_code(const Eigen::MatrixXd& transform, const PatchMatrix& patches, int tau);

/// Closed-form minimiser of ||T X - Z||_F^2 + lambda (eps ||T||_F^2 - log|det T|):
///   X X^T + lambda eps I = L L^T,  L^{-1} X Z^T = U S V^T,
///   T = 0.5 V (S + (S^2 + 2 lambda I)^{1/2}) U^T L^{-1}.
/// The result is always nonsingular. Throws SolverError if the Cholesky
/// factorisation fails.
Eigen::MatrixXd tl_update_transform(const Eigen::MatrixXd& x, const Eigen::MatrixXd& z,
                                    double lambda, double eps);

/// The objective tl_update_transform minimises.
double tl_transform_objective(const Eigen::MatrixXd& t, const Eigen::MatrixXd& x,
                              const Eigen::MatrixXd& z, double lambda, double eps);

/// min_{x_hat} ||x - x_hat||^2 + coupling sum_i ||T P_i x_hat - z_i||^2
ImageSolve tl_update_image(const TransformState& s, const Image& noisy, double coupling,
                           const SolverConfig& cfg);

/// ||x - x_hat||^2 + coupling sum_i ||T P_i x_hat - z_i||^2
double tl_objective(const TransformState& s, const Image& noisy, const SolverConfig& cfg);

/// T = 2-D DCT, x_hat = noisy, tl_lambda scaled to the noisy patch energy.
TransformState tl_init_state(const Image& noisy, const SolverConfig& cfg);

/// Alternates sparse coding, transform update and image update.
DenoiseResult tl_denoise(const Image& noisy, const SolverConfig& cfg,
                         const Image* reference = nullptr);

}  // namespace bdae
