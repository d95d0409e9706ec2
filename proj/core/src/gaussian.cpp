#include "bdae/gaussian.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include <spdlog/spdlog.h>

#include "bdae/activation.hpp"
#include "bdae/error.hpp"
#include "bdae/init_transforms.hpp"
#include "bdae/linalg.hpp"
#include "bdae/metrics.hpp"
#include "bdae/noise.hpp"
#include "bdae/prox.hpp"
#include "solver_loop.hpp"

namespace bdae {

namespace {

constexpr std::uint64_t kRandomInitSeed = 0x5eed'b1ad'0001ULL;

void require_aligned(const AutoencoderState& s, const PatchMatrix& patches) {
    if (s.encoder.cols() != patches.dim() || s.decoder.rows() != patches.dim() ||
        s.codes.cols() != patches.count() || s.bregman.cols() != patches.count() ||
        s.codes.rows() != s.encoder.rows() || s.bregman.rows() != s.encoder.rows() ||
        s.decoder.cols() != s.encoder.rows()) {
        throw DimensionError("autoencoder state does not match the patch matrix");
    }
}

// phi^{-1}(Z - B), the encoder's target pre-activations.
Eigen::MatrixXd inverted_targets(const AutoencoderState& s, const SolverConfig& cfg) {
    return activation_invert(s.codes - s.bregman, cfg.activation);
}

}  // namespace

bool AutoencoderState::all_finite() const {
    return encoder.allFinite() && decoder.allFinite() && codes.allFinite() &&
           bregman.allFinite() && estimate.all_finite();
}

AutoencoderState init_state(const Image& noisy, const SolverConfig& cfg) {
    cfg.validate();
    const int dim = cfg.patch.dim();
    const int hidden = cfg.effective_hidden();

    AutoencoderState s;
    if (hidden == 2 * dim) {
        InitTransforms t = build_init_transforms(cfg.patch.patch_size);
        s.encoder = std::move(t.encoder);
        s.decoder = std::move(t.decoder);
    } else {
        spdlog::warn("hidden width {} differs from 2 x patch_dim = {}; using seeded random "
                     "orthonormal initialisation",
                     hidden, 2 * dim);
        if (hidden < dim) {
            spdlog::warn("hidden width {} is below patch_dim {}; the autoencoder is undercomplete",
                         hidden, dim);
        }
        const Eigen::MatrixXd g = standard_normal_matrix(std::max(hidden, dim),
                                                         std::min(hidden, dim), kRandomInitSeed);
        const Eigen::MatrixXd q = Eigen::HouseholderQR<Eigen::MatrixXd>(g).householderQ() *
                                  Eigen::MatrixXd::Identity(g.rows(), g.cols());
        // Orthonormal columns when overcomplete, orthonormal rows otherwise.
        s.encoder = hidden >= dim ? q : Eigen::MatrixXd(q.transpose());
        s.decoder = s.encoder.transpose();
    }

    s.estimate = noisy;
    const PatchMatrix patches = extract_patches(noisy, cfg.patch);
    s.codes = activation_apply(s.encoder * patches.data, cfg.activation);
    s.bregman = Eigen::MatrixXd::Zero(s.codes.rows(), s.codes.cols());
    return s;
}

Eigen::MatrixXd update_decoder(const AutoencoderState& s, const PatchMatrix& patches,
                               const SolverConfig& cfg) {
    require_aligned(s, patches);
    return ridge_solve_left(patches.data, s.codes, cfg.ridge);
}

Eigen::MatrixXd update_encoder(const AutoencoderState& s, const PatchMatrix& patches,
                               const SolverConfig& cfg) {
    require_aligned(s, patches);
    return ridge_solve_left(inverted_targets(s, cfg), patches.data, cfg.ridge);
}

ImageSolve update_image_gaussian(const AutoencoderState& s, const Image& noisy,
                                 const SolverConfig& cfg) {
    require_same_shape(noisy, s.estimate, "update_image_gaussian");
    const int dim = cfg.patch.dim();
    if (s.encoder.cols() != dim) {
        throw DimensionError("update_image_gaussian: encoder width differs from patch_dim");
    }
    // (I + sum_i P_i^T (lambda I + gamma W^T W) P_i) x = x_noisy + sum_i P_i^T (...)
    Eigen::MatrixXd m = cfg.gamma * (s.encoder.transpose() * s.encoder);
    m.diagonal().array() += cfg.lambda;

    PatchMatrix targets{cfg.lambda * (s.decoder * s.codes) +
                        cfg.gamma * (s.encoder.transpose() * inverted_targets(s, cfg))};
    Image rhs = aggregate_patches(targets, cfg.patch, noisy.height(), noisy.width());
    rhs.pixels() += noisy.pixels();
    return solve_patch_system(1.0, m, rhs, s.estimate, cfg.patch, cfg.cg_tol, cfg.cg_maxit);
}

Eigen::MatrixXd update_codes_ista(const AutoencoderState& s, const PatchMatrix& patches,
                                  const SolverConfig& cfg) {
    require_aligned(s, patches);
    const double sigma = spectral_norm(s.decoder, cfg.power_iters, cfg.power_tol);
    const double lipschitz = 2.0 * (cfg.lambda * sigma * sigma + cfg.gamma);
    if (lipschitz <= 0.0) {
        // Only the l1 term remains.
        return cfg.mu > 0.0 ? Eigen::MatrixXd::Zero(s.codes.rows(), s.codes.cols()) : s.codes;
    }
    const double step = 1.0 / lipschitz;
    const double threshold = cfg.mu * step;

    // grad = 2 lambda (W'^T W' Z - W'^T X) + 2 gamma (Z - phi(W X) - B)
    const Eigen::MatrixXd gram = s.decoder.transpose() * s.decoder;
    const Eigen::MatrixXd proxy =
        activation_apply(s.encoder * patches.data, cfg.activation) + s.bregman;
    const Eigen::MatrixXd offset =
        2.0 * cfg.lambda * (s.decoder.transpose() * patches.data) + 2.0 * cfg.gamma * proxy;

    Eigen::MatrixXd z = s.codes;
    Eigen::MatrixXd coupled(z.rows(), z.cols());
    Eigen::MatrixXd moved(z.rows(), z.cols());
    for (int k = 0; k < cfg.ista_iters; ++k) {
        coupled.noalias() = gram * z;
        moved.array() = z.array() -
                        step * (2.0 * cfg.lambda * coupled.array() + 2.0 * cfg.gamma * z.array() -
                                offset.array());
        // soft threshold, written branch-free so it vectorises
        z.array() = (moved.array() - threshold).max(0.0) + (moved.array() + threshold).min(0.0);
    }
    return z;
}

Eigen::MatrixXd update_bregman(const AutoencoderState& s, const PatchMatrix& patches,
                               const SolverConfig& cfg) {
    require_aligned(s, patches);
    const Eigen::MatrixXd proxy = activation_apply(s.encoder * patches.data, cfg.activation);
    switch (cfg.bregman) {
        case BregmanUpdate::standard:
            return s.bregman + proxy - s.codes;
        case BregmanUpdate::literal:
            return s.codes - proxy - s.bregman;
    }
    return s.bregman;
}

double decoder_objective(const AutoencoderState& s, const PatchMatrix& patches) {
    return (patches.data - s.decoder * s.codes).squaredNorm();
}

double encoder_objective(const AutoencoderState& s, const PatchMatrix& patches,
                         const SolverConfig& cfg) {
    return (inverted_targets(s, cfg) - s.encoder * patches.data).squaredNorm();
}

double image_objective_gaussian(const AutoencoderState& s, const Image& candidate,
                                const Image& noisy, const SolverConfig& cfg) {
    require_same_shape(candidate, noisy, "image_objective_gaussian");
    const PatchMatrix p = extract_patches(candidate, cfg.patch);
    return (noisy.pixels() - candidate.pixels()).squaredNorm() +
           cfg.lambda * (p.data - s.decoder * s.codes).squaredNorm() +
           cfg.gamma * (inverted_targets(s, cfg) - s.encoder * p.data).squaredNorm();
}

Eigen::VectorXd code_objectives(const AutoencoderState& s, const Eigen::MatrixXd& codes,
                                const PatchMatrix& patches, const SolverConfig& cfg) {
    const Eigen::MatrixXd proxy =
        activation_apply(s.encoder * patches.data, cfg.activation) + s.bregman;
    return cfg.lambda * (patches.data - s.decoder * codes).colwise().squaredNorm().transpose() +
           cfg.mu * codes.cwiseAbs().colwise().sum().transpose() +
           cfg.gamma * (codes - proxy).colwise().squaredNorm().transpose();
}

double objective_gaussian(const AutoencoderState& s, const Image& noisy, const SolverConfig& cfg) {
    require_same_shape(noisy, s.estimate, "objective_gaussian");
    const PatchMatrix p = extract_patches(s.estimate, cfg.patch);
    require_aligned(s, p);
    const double fidelity = (noisy.pixels() - s.estimate.pixels()).squaredNorm();
    const double reconstruction = (p.data - s.decoder * s.codes).squaredNorm();
    const double sparsity = s.codes.cwiseAbs().sum();
    const double split =
        (s.codes - activation_apply(s.encoder * p.data, cfg.activation) - s.bregman).squaredNorm();
    return fidelity + cfg.lambda * (reconstruction + cfg.mu * sparsity) + cfg.gamma * split;
}

DenoiseResult denoise_gaussian(const Image& noisy, const SolverConfig& cfg, const Image* reference) {
    const auto start = std::chrono::steady_clock::now();
    AutoencoderState s = init_state(noisy, cfg);

    DenoiseReport report;
    report.method = "bdae";
    detail::OuterLoop loop(cfg, noisy, reference, report);
    for (int k = 0; k < cfg.max_outer_iters; ++k) {
        PatchMatrix patches = extract_patches(s.estimate, cfg.patch);
        s.decoder = update_decoder(s, patches, cfg);
        s.encoder = update_encoder(s, patches, cfg);

        ImageSolve solve = update_image_gaussian(s, noisy, cfg);
        loop.note_image_solve(solve);
        s.estimate = std::move(solve.image);

        patches = extract_patches(s.estimate, cfg.patch);
        s.codes = update_codes_ista(s, patches, cfg);
        s.bregman = update_bregman(s, patches, cfg);

        if (!s.all_finite()) {
            throw SolverError("non-finite value in autoencoder state at iteration " +
                              std::to_string(k + 1));
        }
        if (loop.finish_iteration(objective_gaussian(s, noisy, cfg), s.estimate)) {
            break;
        }
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return DenoiseResult{s.estimate.clipped(0.0, 1.0), std::move(report)};
}

}  // namespace bdae
