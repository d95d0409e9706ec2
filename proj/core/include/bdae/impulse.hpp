#pragma once

#include "bdae/config.hpp"
#include "bdae/gaussian.hpp"
#include "bdae/image.hpp"
#include "bdae/report.hpp"

namespace bdae {

/// Autoencoder state plus the l1-fidelity split: y stands in for x - x_hat
/// and c is its Bregman variable.
struct ImpulseState {
    AutoencoderState base;
    Image y;
    Image c;
    double epsilon_fidelity = 1.0;

    bool all_finite() const { return base.all_finite() && y.all_finite() && c.all_finite(); }
};

/// init_state plus y = c = 0 and epsilon_fidelity = cfg.impulse_eps.
ImpulseState init_impulse_state(const Image& noisy, const SolverConfig& cfg);

/// y = soft_threshold(x - x_hat + c, 1 / (2 eps)).
Image update_y(const ImpulseState& s, const Image& noisy);

/// min_{x_hat} eps ||y - x + x_hat - c||^2 + lambda sum_i ||P_i x_hat - W' z_i||^2
///             + gamma sum_i ||phi^{-1}(z_i - b_i) - W P_i x_hat||^2
ImageSolve update_image_impulse(const ImpulseState& s, const Image& noisy, const SolverConfig& cfg);

/// c <- c + (x - x_hat) - y.
Image update_c(const ImpulseState& s, const Image& noisy);

double image_objective_impulse(const ImpulseState& s, const Image& candidate, const Image& noisy,
                               const SolverConfig& cfg);

/// ||x - x_hat||_1 + lambda sum_i (||P_i x_hat - W' z_i||^2 + mu ||z_i||_1)
///   + gamma sum_i ||z_i - phi(W P_i x_hat) - b_i||^2
double objective_impulse(const ImpulseState& s, const Image& noisy, const SolverConfig& cfg);

/// Blind denoiser with l1 data fidelity, for salt-and-pepper noise.
DenoiseResult denoise_impulse(const Image& noisy, const SolverConfig& cfg,
                              const Image* reference = nullptr);

}  // namespace bdae
