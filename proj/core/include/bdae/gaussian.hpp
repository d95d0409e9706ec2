#pragma once

#include <Eigen/Dense>

#include "bdae/config.hpp"
#include "bdae/image.hpp"
#include "bdae/patch_system.hpp"
#include "bdae/patches.hpp"
#include "bdae/report.hpp"

namespace bdae {

/// Variables of the split autoencoder objective. Columns of `codes` and
/// `bregman` are aligned with the columns of extract_patches(estimate).
struct AutoencoderState {
    Eigen::MatrixXd encoder;  ///< W,  hidden x patch_dim
    Eigen::MatrixXd decoder;  ///< W', patch_dim x hidden
    Eigen::MatrixXd codes;    ///< Z,  hidden x count
    Eigen::MatrixXd bregman;  ///< B,  hidden x count
    Image estimate;           ///< x_hat

    bool all_finite() const;
};

/// W, W' from the DCT+Haar pair (or seeded random orthonormal rows when
/// `hidden` differs from 2 * patch_dim), x_hat = noisy, Z = phi(W P x_hat), B = 0.
AutoencoderState init_state(const Image& noisy, const SolverConfig& cfg);

// Block updates. Each returns the new value of its block and leaves the
// state untouched; `patches` must be extract_patches(state.estimate).

/// min_{W'} sum_i ||P_i x_hat - W' z_i||^2
Eigen::MatrixXd update_decoder(const AutoencoderState& s, const PatchMatrix& patches,
                               const SolverConfig& cfg);

/// min_W sum_i ||phi^{-1}(z_i - b_i) - W P_i x_hat||^2
Eigen::MatrixXd update_encoder(const AutoencoderState& s, const PatchMatrix& patches,
                               const SolverConfig& cfg);

/// min_{x_hat} ||x - x_hat||^2 + lambda sum_i ||P_i x_hat - W' z_i||^2
///             + gamma sum_i ||phi^{-1}(z_i - b_i) - W P_i x_hat||^2
ImageSolve update_image_gaussian(const AutoencoderState& s, const Image& noisy,
                                 const SolverConfig& cfg);

/// `cfg.ista_iters` proximal-gradient steps per column on
/// lambda ||P_i x_hat - W' z||^2 + mu ||z||_1 + gamma ||z - phi(W P_i x_hat) - b_i||^2,
/// warm-started from the current codes.
Eigen::MatrixXd update_codes_ista(const AutoencoderState& s, const PatchMatrix& patches,
                                  const SolverConfig& cfg);

Eigen::MatrixXd update_bregman(const AutoencoderState& s, const PatchMatrix& patches,
                               const SolverConfig& cfg);

// Sub-objectives, used for monitoring and by the tests.
double decoder_objective(const AutoencoderState& s, const PatchMatrix& patches);
double encoder_objective(const AutoencoderState& s, const PatchMatrix& patches,
                         const SolverConfig& cfg);
double image_objective_gaussian(const AutoencoderState& s, const Image& candidate,
                                const Image& noisy, const SolverConfig& cfg);
/// Column-wise code objective summed over all patches; `codes` replaces s.codes.
Eigen::VectorXd code_objectives(const AutoencoderState& s, const Eigen::MatrixXd& codes,
                                const PatchMatrix& patches, const SolverConfig& cfg);

/// ||x - x_hat||^2 + lambda sum_i (||P_i x_hat - W' z_i||^2 + mu ||z_i||_1)
///   + gamma sum_i ||z_i - phi(W P_i x_hat) - b_i||^2
double objective_gaussian(const AutoencoderState& s, const Image& noisy, const SolverConfig& cfg);

/// Full blind denoiser for additive Gaussian noise. When `reference` is
/// given the report carries a PSNR trajectory. The returned image is
/// clipped to [0, 1]; the iterate itself is never clipped.
DenoiseResult denoise_gaussian(const Image& noisy, const SolverConfig& cfg,
                               const Image* reference = nullptr);

}  // namespace bdae
