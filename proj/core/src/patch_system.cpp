#include "bdae/patch_system.hpp"

#include "bdae/error.hpp"
#include "bdae/linalg.hpp"

namespace bdae {

Image apply_patch_operator(double alpha, const Eigen::MatrixXd& m, const Image& v,
                           const PatchConfig& cfg) {
    PatchMatrix pm = extract_patches(v, cfg);
    pm.data = m * pm.data;
    Image out = aggregate_patches(pm, cfg, v.height(), v.width());
    out.pixels() += alpha * v.pixels();
    return out;
}

ImageSolve solve_patch_system(double alpha, const Eigen::MatrixXd& m, const Image& rhs,
                              const Image& x0, const PatchConfig& cfg, double tol, int maxit) {
    require_same_shape(rhs, x0, "solve_patch_system");
    if (m.rows() != cfg.dim() || m.cols() != cfg.dim()) {
        throw DimensionError("solve_patch_system: patch operator has the wrong size");
    }
    const int h = rhs.height();
    const int w = rhs.width();
    // Buffers reused across CG iterations; patch matrices are large.
    Image scratch(h, w, 0.0);
    Image accumulated(h, w, 0.0);
    Eigen::MatrixXd patches;
    Eigen::MatrixXd mapped;
    const LinearOperator op = [&](const Eigen::VectorXd& v) {
        scratch.pixels() = v;
        extract_patches_into(scratch, cfg, patches);
        mapped.noalias() = m * patches;
        aggregate_patches_into(mapped, cfg, accumulated);
        return Eigen::VectorXd(accumulated.pixels() + alpha * v);
    };
    CgResult cg = cg_solve(op, rhs.pixels(), x0.pixels(), tol, maxit);
    return ImageSolve{Image(h, w, std::move(cg.x)), cg.iterations, cg.relative_residual,
                      cg.converged};
}

}  // namespace bdae
