#pragma once

#include <limits>
#include <string>
#include <vector>

#include "bdae/image.hpp"

namespace bdae {

/// Per-run metrics. The solvers fill the trajectories and timing; the
/// caller (CLI/harness) fills `noise` and, when a clean reference exists,
/// the PSNR fields.
struct DenoiseReport {
    std::string method;
    std::string noise;
    double psnr_noisy = std::numeric_limits<double>::quiet_NaN();
    double psnr_denoised = std::numeric_limits<double>::quiet_NaN();
    std::vector<double> cost_trajectory;  ///< one entry per outer iteration
    std::vector<double> psnr_trajectory;  ///< empty unless a reference was supplied
    int iterations_run = 0;
    double wall_time = 0.0;
    bool converged = false;  ///< stopped on the relative-cost rule
    int cg_warnings = 0;     ///< image solves that hit cg_maxit
};

struct DenoiseResult {
    Image image;
    DenoiseReport report;
};

}  // namespace bdae
