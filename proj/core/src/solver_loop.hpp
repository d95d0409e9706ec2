#pragma once

#include <cmath>

#include <spdlog/spdlog.h>

#include "bdae/config.hpp"
#include "bdae/error.hpp"
#include "bdae/metrics.hpp"
#include "bdae/patch_system.hpp"
#include "bdae/report.hpp"

namespace bdae::detail {

/// Bookkeeping shared by the outer loops: cost/PSNR trajectories, CG
/// warnings and the relative-cost stopping rule.
class OuterLoop {
public:
    OuterLoop(const SolverConfig& cfg, const Image& noisy, const Image* reference,
              DenoiseReport& report)
        : cfg_(cfg), reference_(reference), report_(report) {
        if (reference_ != nullptr) {
            report_.psnr_noisy = psnr(*reference_, noisy);
        }
    }

    void note_image_solve(const ImageSolve& solve) {
        if (!solve.converged) {
            ++report_.cg_warnings;
            spdlog::warn("{}: image solve stopped after {} CG iterations, relative residual {:.3e}",
                         report_.method, solve.cg_iterations, solve.relative_residual);
        }
    }

    /// Records one finished outer iteration. Returns true when the loop
    /// should stop early.
    bool finish_iteration(double cost, const Image& estimate) {
        if (!std::isfinite(cost)) {
            throw SolverError(report_.method + ": objective became non-finite");
        }
        report_.cost_trajectory.push_back(cost);
        report_.iterations_run = static_cast<int>(report_.cost_trajectory.size());
        double quality = std::numeric_limits<double>::quiet_NaN();
        if (reference_ != nullptr) {
            quality = psnr(*reference_, estimate.clipped(0.0, 1.0));
            report_.psnr_trajectory.push_back(quality);
            report_.psnr_denoised = quality;
        }
        if (cfg_.verbose) {
            spdlog::info("{} iter {:3d}  cost {:.6e}  psnr {:.3f}", report_.method,
                         report_.iterations_run, cost, quality);
        }
        const auto n = report_.cost_trajectory.size();
        if (n >= 2) {
            const double prev = report_.cost_trajectory[n - 2];
            const double change = std::abs(cost - prev) / std::max(std::abs(prev), 1e-300);
            if (change < cfg_.rel_tol) {
                report_.converged = true;
                return true;
            }
        }
        return false;
    }

private:
    const SolverConfig& cfg_;
    const Image* reference_;
    DenoiseReport& report_;
};

}  // namespace bdae::detail
