#include "bdae/impulse.hpp"

#include <chrono>
#include <string>

#include "bdae/activation.hpp"
#include "bdae/error.hpp"
#include "bdae/prox.hpp"
#include "solver_loop.hpp"

namespace bdae {

ImpulseState init_impulse_state(const Image& noisy, const SolverConfig& cfg) {
    ImpulseState s;
    s.base = init_state(noisy, cfg);
    s.y = Image(noisy.height(), noisy.width(), 0.0);
    s.c = Image(noisy.height(), noisy.width(), 0.0);
    s.epsilon_fidelity = cfg.impulse_eps;
    return s;
}

Image update_y(const ImpulseState& s, const Image& noisy) {
    require_same_shape(noisy, s.base.estimate, "update_y");
    if (!(s.epsilon_fidelity > 0.0)) {
        throw std::invalid_argument("update_y: epsilon must be positive");
    }
    Eigen::VectorXd v = noisy.pixels() - s.base.estimate.pixels() + s.c.pixels();
    return Image(noisy.height(), noisy.width(),
                 soft_threshold(v, 0.5 / s.epsilon_fidelity));
}

ImageSolve update_image_impulse(const ImpulseState& s, const Image& noisy, const SolverConfig& cfg) {
    const AutoencoderState& b = s.base;
    require_same_shape(noisy, b.estimate, "update_image_impulse");
    const double eps = s.epsilon_fidelity;

    Eigen::MatrixXd m = cfg.gamma * (b.encoder.transpose() * b.encoder);
    m.diagonal().array() += cfg.lambda;

    PatchMatrix targets{cfg.lambda * (b.decoder * b.codes) +
                        cfg.gamma * (b.encoder.transpose() *
                                     activation_invert(b.codes - b.bregman, cfg.activation))};
    Image rhs = aggregate_patches(targets, cfg.patch, noisy.height(), noisy.width());
    rhs.pixels() += eps * (noisy.pixels() - s.y.pixels() + s.c.pixels());
    return solve_patch_system(eps, m, rhs, b.estimate, cfg.patch, cfg.cg_tol, cfg.cg_maxit);
}

Image update_c(const ImpulseState& s, const Image& noisy) {
    require_same_shape(noisy, s.c, "update_c");
    Eigen::VectorXd next =
        s.c.pixels() + (noisy.pixels() - s.base.estimate.pixels()) - s.y.pixels();
    return Image(noisy.height(), noisy.width(), std::move(next));
}

double image_objective_impulse(const ImpulseState& s, const Image& candidate, const Image& noisy,
                               const SolverConfig& cfg) {
    const AutoencoderState& b = s.base;
    require_same_shape(candidate, noisy, "image_objective_impulse");
    const PatchMatrix p = extract_patches(candidate, cfg.patch);
    const Eigen::VectorXd proxy_gap =
        s.y.pixels() - noisy.pixels() + candidate.pixels() - s.c.pixels();
    return s.epsilon_fidelity * proxy_gap.squaredNorm() +
           cfg.lambda * (p.data - b.decoder * b.codes).squaredNorm() +
           cfg.gamma * (activation_invert(b.codes - b.bregman, cfg.activation) - b.encoder * p.data)
                           .squaredNorm();
}

double objective_impulse(const ImpulseState& s, const Image& noisy, const SolverConfig& cfg) {
    const AutoencoderState& b = s.base;
    require_same_shape(noisy, b.estimate, "objective_impulse");
    const PatchMatrix p = extract_patches(b.estimate, cfg.patch);
    const double fidelity = (noisy.pixels() - b.estimate.pixels()).lpNorm<1>();
    const double reconstruction = (p.data - b.decoder * b.codes).squaredNorm();
    const double sparsity = b.codes.cwiseAbs().sum();
    const double split =
        (b.codes - activation_apply(b.encoder * p.data, cfg.activation) - b.bregman).squaredNorm();
    return fidelity + cfg.lambda * (reconstruction + cfg.mu * sparsity) + cfg.gamma * split;
}

DenoiseResult denoise_impulse(const Image& noisy, const SolverConfig& cfg, const Image* reference) {
    const auto start = std::chrono::steady_clock::now();
    ImpulseState s = init_impulse_state(noisy, cfg);
    AutoencoderState& b = s.base;

    DenoiseReport report;
    report.method = "bdae-impulse";
    detail::OuterLoop loop(cfg, noisy, reference, report);
    for (int k = 0; k < cfg.max_outer_iters; ++k) {
        PatchMatrix patches = extract_patches(b.estimate, cfg.patch);
        b.decoder = update_decoder(b, patches, cfg);
        b.encoder = update_encoder(b, patches, cfg);

        s.y = update_y(s, noisy);
        ImageSolve solve = update_image_impulse(s, noisy, cfg);
        loop.note_image_solve(solve);
        b.estimate = std::move(solve.image);

        patches = extract_patches(b.estimate, cfg.patch);
        b.codes = update_codes_ista(b, patches, cfg);
        b.bregman = update_bregman(b, patches, cfg);
        s.c = update_c(s, noisy);

        if (!s.all_finite()) {
            throw SolverError("non-finite value in impulse state at iteration " +
                              std::to_string(k + 1));
        }
        if (loop.finish_iteration(objective_impulse(s, noisy, cfg), b.estimate)) {
            break;
        }
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return DenoiseResult{b.estimate.clipped(0.0, 1.0), std::move(report)};
}

}  // namespace bdae
