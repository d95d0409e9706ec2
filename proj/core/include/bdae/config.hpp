#pragma once

#include <string>

#include "bdae/activation.hpp"
#include "bdae/linalg.hpp"
#include "bdae/patches.hpp"

namespace bdae {

/// How the Bregman variables b_i are refreshed after each sweep.
enum class BregmanUpdate {
    standard,  ///< b <- b + phi(W P x) - z, drives the split residual to zero
    literal,   ///< b <- z - phi(W P x) - b, kept for comparison
};

const char* to_string(BregmanUpdate u);
BregmanUpdate parse_bregman_update(const std::string& name);

/// Parameters of the transform-learning baseline.
struct TransformParams {
    int tau = 0;                ///< nonzeros per code column; 0 selects ceil(0.1 * patch_dim)
    double lambda_scale = 0.1;  ///< transform regulariser = lambda_scale * ||X||_F^2 / count
    double coupling = 0.5;      ///< weight of the patch term in the image update
    double eps_reg = 1.0;       ///< weight of ||T||_F^2 relative to -log|det T|

    int effective_tau(int patch_dim) const;
};

struct SolverConfig {
    double lambda = 0.5;
    double mu = 0.1;
    double gamma = 0.5;
    int hidden = 0;  ///< 0 selects 2 * patch_dim
    int max_outer_iters = 40;
    double rel_tol = 1e-4;
    int ista_iters = 10;
    RidgeParams ridge;
    PatchConfig patch;
    Activation activation;
    double cg_tol = 1e-6;
    int cg_maxit = 200;
    BregmanUpdate bregman = BregmanUpdate::standard;
    int power_iters = 50;
    double power_tol = 1e-8;
    /// Weight of the proxy penalty ||y - x + x_hat - c||^2 in the impulse solver.
    double impulse_eps = 1.0;
    TransformParams transform;
    /// Emit one info line per outer iteration.
    bool verbose = false;

    int effective_hidden() const { return hidden > 0 ? hidden : 2 * patch.dim(); }
    /// Throws std::invalid_argument on out-of-range values.
    void validate() const;

    /// Defaults for heavy salt-and-pepper input: a stronger code penalty.
    static SolverConfig impulse_preset();
};

}  // namespace bdae
