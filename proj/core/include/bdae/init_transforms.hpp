#pragma once

#include <Eigen/Dense>

namespace bdae {

/// Orthonormal type-II DCT matrix of size n x n (rows are basis vectors).
Eigen::MatrixXd dct_matrix(int n);

/// Orthonormal Haar matrix of size n x n; n must be a power of two.
Eigen::MatrixXd haar_matrix(int n);

/// Separable 2-D transform acting on row-major vectorised n x n patches.
Eigen::MatrixXd separable_2d(const Eigen::MatrixXd& basis_1d);

struct InitTransforms {
    Eigen::MatrixXd encoder;  ///< 2d^2 x d^2, DCT rows stacked over Haar rows
    Eigen::MatrixXd decoder;  ///< d^2 x 2d^2, 0.5 [C^T, H^T]
    bool haar = true;         ///< false when the DCT was duplicated instead
};

/// Encoder/decoder starting point for patches of side `patch_size`.
/// decoder * encoder is the identity. A non power-of-two size cannot carry
/// a Haar basis; the DCT is then used twice and a warning is logged.
InitTransforms build_init_transforms(int patch_size);

}  // namespace bdae
