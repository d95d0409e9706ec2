#include "bdae/config.hpp"

#include <cmath>
#include <stdexcept>

namespace bdae {

const char* to_string(BregmanUpdate u) {
    return u == BregmanUpdate::standard ? "standard" : "literal";
}

BregmanUpdate parse_bregman_update(const std::string& name) {
    if (name == "standard") {
        return BregmanUpdate::standard;
    }
    if (name == "literal") {
        return BregmanUpdate::literal;
    }
    throw std::invalid_argument("unknown bregman update '" + name + "'");
}

int TransformParams::effective_tau(int patch_dim) const {
    if (tau > 0) {
        return tau;
    }
    return static_cast<int>(std::ceil(0.1 * patch_dim));
}

void SolverConfig::validate() const {
    auto require = [](bool ok, const char* msg) {
        if (!ok) {
            throw std::invalid_argument(msg);
        }
    };
    patch.validate();
    require(lambda >= 0.0, "lambda must be nonnegative");
    require(mu >= 0.0, "mu must be nonnegative");
    require(gamma >= 0.0, "gamma must be nonnegative");
    require(hidden >= 0, "hidden must be nonnegative (0 = automatic)");
    require(max_outer_iters >= 1, "max_outer_iters must be at least 1");
    require(rel_tol >= 0.0, "rel_tol must be nonnegative");
    require(ista_iters >= 1, "ista_iters must be at least 1");
    require(ridge.epsilon >= 0.0, "ridge epsilon must be nonnegative");
    require(activation.clamp_margin > 0.0 && activation.clamp_margin < 1.0,
            "clamp_margin must lie in (0, 1)");
    require(cg_tol > 0.0, "cg_tol must be positive");
    require(cg_maxit >= 1, "cg_maxit must be at least 1");
    require(power_iters >= 1, "power_iters must be at least 1");
    require(impulse_eps > 0.0, "impulse_eps must be positive");
    require(transform.tau >= 0 && transform.tau <= patch.dim(), "tl tau must lie in [0, patch_dim]");
    require(transform.lambda_scale > 0.0, "tl lambda_scale must be positive");
    require(transform.coupling >= 0.0, "tl coupling must be nonnegative");
    require(transform.eps_reg > 0.0, "tl eps_reg must be positive");
}

SolverConfig SolverConfig::impulse_preset() {
    SolverConfig cfg;
    cfg.mu = 3.0;
    return cfg;
}

}  // namespace bdae
