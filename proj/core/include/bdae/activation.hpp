#pragma once

#include <string>

#include <Eigen/Dense>

namespace bdae {

/// Element-wise invertible nonlinearity of the autoencoder's hidden layer.
struct Activation {
    enum class Kind { tanh, identity };

    Kind kind = Kind::identity;
    /// Inputs to the tanh inverse are clamped to [-1 + margin, 1 - margin].
    double clamp_margin = 1e-7;
};

Eigen::MatrixXd activation_apply(const Eigen::Ref<const Eigen::MatrixXd>& v, const Activation& a);
Eigen::MatrixXd activation_invert(const Eigen::Ref<const Eigen::MatrixXd>& v, const Activation& a);

const char* to_string(Activation::Kind kind);
/// Throws std::invalid_argument for unknown names.
Activation::Kind parse_activation_kind(const std::string& name);

}  // namespace bdae
