#pragma once

#include <cmath>

#include <Eigen/Dense>

namespace bdae {

inline double soft_threshold(double v, double t) {
    const double mag = std::abs(v) - t;
    return mag > 0.0 ? std::copysign(mag, v) : 0.0;
}

/// Element-wise sign(v) * max(|v| - t, 0); the proximal map of t*||.||_1.
Eigen::MatrixXd soft_threshold(const Eigen::Ref<const Eigen::MatrixXd>& v, double t);

/// Keeps the `tau` largest-magnitude entries of `v` and zeros the rest.
/// Among equal magnitudes the lower index wins.
Eigen::VectorXd hard_threshold_top_tau(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index tau);

/// Column-wise hard_threshold_top_tau.
Eigen::MatrixXd hard_threshold_columns(const Eigen::Ref<const Eigen::MatrixXd>& v, Eigen::Index tau);

}  // namespace bdae
