#include <cmath>

#include "bdae_cli/cli.hpp"

namespace bdae::cli {

nlohmann::json config_to_json(const SolverConfig& cfg) {
    nlohmann::json j;
    j["lambda"] = cfg.lambda;
    j["mu"] = cfg.mu;
    j["gamma"] = cfg.gamma;
    j["hidden"] = cfg.effective_hidden();
    j["max_outer_iters"] = cfg.max_outer_iters;
    j["rel_tol"] = cfg.rel_tol;
    j["ista_iters"] = cfg.ista_iters;
    j["ridge_epsilon"] = cfg.ridge.epsilon;
    j["patch_size"] = cfg.patch.patch_size;
    j["stride"] = cfg.patch.stride;
    j["activation"] = to_string(cfg.activation.kind);
    j["clamp_margin"] = cfg.activation.clamp_margin;
    j["cg_tol"] = cfg.cg_tol;
    j["cg_maxit"] = cfg.cg_maxit;
    j["bregman"] = to_string(cfg.bregman);
    j["power_iters"] = cfg.power_iters;
    j["power_tol"] = cfg.power_tol;
    j["impulse_eps"] = cfg.impulse_eps;
    j["tl_tau"] = cfg.transform.effective_tau(cfg.patch.dim());
    j["tl_lambda_scale"] = cfg.transform.lambda_scale;
    j["tl_coupling"] = cfg.transform.coupling;
    j["tl_eps_reg"] = cfg.transform.eps_reg;
    j["verbose"] = cfg.verbose;
    return j;
}

nlohmann::json report_to_json(const DenoiseReport& report, const SolverConfig& cfg) {
    // NaN has no JSON spelling; unknown PSNRs become null.
    auto number = [](double v) -> nlohmann::json {
        return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
    };
    nlohmann::json j;
    j["method"] = report.method;
    j["noise"] = report.noise;
    j["psnr_noisy"] = number(report.psnr_noisy);
    j["psnr_denoised"] = number(report.psnr_denoised);
    j["cost_trajectory"] = report.cost_trajectory;
    j["psnr_trajectory"] = report.psnr_trajectory;
    j["iterations_run"] = report.iterations_run;
    j["wall_time"] = report.wall_time;
    j["converged"] = report.converged;
    j["cg_warnings"] = report.cg_warnings;
    j["config_echo"] = config_to_json(cfg);
    return j;
}

}  // namespace bdae::cli
