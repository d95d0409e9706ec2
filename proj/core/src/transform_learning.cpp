#include "bdae/transform_learning.hpp"

#include <chrono>
#include <cmath>
#include <string>

#include "bdae/error.hpp"
#include "bdae/init_transforms.hpp"
#include "bdae/prox.hpp"
#include "solver_loop.hpp"

namespace bdae {

Eigen::MatrixXd tl_sparse_code(const Eigen::MatrixXd& transform, const PatchMatrix& patches, int tau) {
    if (transform.cols() != patches.dim()) {
        throw DimensionError("tl_sparse_code: transform width differs from patch_dim");
    }
    return hard_threshold_columns(transform * patches.data, tau);
}

Eigen::MatrixXd tl_update_transform(const Eigen::MatrixXd& x, const Eigen::MatrixXd& z,
                                    double lambda, double eps) {
    if (x.cols() != z.cols() || x.rows() != z.rows()) {
        throw DimensionError("tl_update_transform: X and Z must both be patch_dim x count");
    }
    Eigen::MatrixXd gram = x * x.transpose();
    gram.diagonal().array() += lambda * eps;
    Eigen::LLT<Eigen::MatrixXd> llt(gram);
    if (llt.info() != Eigen::Success) {
        throw SolverError("tl_update_transform: Cholesky factorisation of X X^T + lambda eps I failed");
    }
    const Eigen::MatrixXd l = llt.matrixL();
    const Eigen::MatrixXd cross = l.triangularView<Eigen::Lower>().solve(x * z.transpose());

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(cross, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::VectorXd s = svd.singularValues();
    const Eigen::VectorXd d = 0.5 * (s.array() + (s.array().square() + 2.0 * lambda).sqrt()).matrix();
    if (!(d.minCoeff() > 0.0) || !(l.diagonal().minCoeff() > 0.0)) {
        throw SolverError("tl_update_transform: transform update lost full rank");
    }
    // T^T = L^{-T} U D V^T
    const Eigen::MatrixXd udv = svd.matrixU() * d.asDiagonal() * svd.matrixV().transpose();
    Eigen::MatrixXd t_transposed = l.transpose().triangularView<Eigen::Upper>().solve(udv);
    return t_transposed.transpose();
}

double tl_transform_objective(const Eigen::MatrixXd& t, const Eigen::MatrixXd& x,
                              const Eigen::MatrixXd& z, double lambda, double eps) {
    const double log_abs_det = t.fullPivLu().matrixLU().diagonal().array().abs().log().sum();
    return (t * x - z).squaredNorm() + lambda * (eps * t.squaredNorm() - log_abs_det);
}

ImageSolve tl_update_image(const TransformState& s, const Image& noisy, double coupling,
                           const SolverConfig& cfg) {
    require_same_shape(noisy, s.estimate, "tl_update_image");
    const Eigen::MatrixXd m = coupling * (s.transform.transpose() * s.transform);
    PatchMatrix targets{coupling * (s.transform.transpose() * s.codes)};
    Image rhs = aggregate_patches(targets, cfg.patch, noisy.height(), noisy.width());
    rhs.pixels() += noisy.pixels();
    return solve_patch_system(1.0, m, rhs, s.estimate, cfg.patch, cfg.cg_tol, cfg.cg_maxit);
}

double tl_objective(const TransformState& s, const Image& noisy, const SolverConfig& cfg) {
    const PatchMatrix p = extract_patches(s.estimate, cfg.patch);
    return (noisy.pixels() - s.estimate.pixels()).squaredNorm() +
           s.coupling * (s.transform * p.data - s.codes).squaredNorm();
}

TransformState tl_init_state(const Image& noisy, const SolverConfig& cfg) {
    cfg.validate();
    TransformState s;
    s.transform = separable_2d(dct_matrix(cfg.patch.patch_size));
    s.estimate = noisy;
    const PatchMatrix patches = extract_patches(noisy, cfg.patch);
    s.tl_lambda = cfg.transform.lambda_scale * patches.data.squaredNorm() /
                  static_cast<double>(patches.count());
    if (!(s.tl_lambda > 0.0)) {
        // All-zero image: any positive weight keeps the update well posed.
        s.tl_lambda = cfg.transform.lambda_scale;
    }
    s.tau = cfg.transform.effective_tau(cfg.patch.dim());
    s.coupling = cfg.transform.coupling;
    s.eps_reg = cfg.transform.eps_reg;
    s.codes = tl_sparse_code(s.transform, patches, s.tau);
    return s;
}

DenoiseResult tl_denoise(const Image& noisy, const SolverConfig& cfg, const Image* reference) {
    const auto start = std::chrono::steady_clock::now();
    TransformState s = tl_init_state(noisy, cfg);

    DenoiseReport report;
    report.method = "tl";
    detail::OuterLoop loop(cfg, noisy, reference, report);
    for (int k = 0; k < cfg.max_outer_iters; ++k) {
        const PatchMatrix patches = extract_patches(s.estimate, cfg.patch);
        s.codes = tl_sparse_code(s.transform, patches, s.tau);
        s.transform = tl_update_transform(patches.data, s.codes, s.tl_lambda, s.eps_reg);

        ImageSolve solve = tl_update_image(s, noisy, s.coupling, cfg);
        loop.note_image_solve(solve);
        s.estimate = std::move(solve.image);

        if (!s.transform.allFinite() || !s.estimate.all_finite()) {
            throw SolverError("non-finite value in transform state at iteration " +
                              std::to_string(k + 1));
        }
        if (loop.finish_iteration(tl_objective(s, noisy, cfg), s.estimate)) {
            break;
        }
    }
    report.wall_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return DenoiseResult{s.estimate.clipped(0.0, 1.0), std::move(report)};
}

}  // namespace bdae
