#include "bdae/activation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace bdae {

Eigen::MatrixXd activation_apply(const Eigen::Ref<const Eigen::MatrixXd>& v, const Activation& a) {
    switch (a.kind) {
        case Activation::Kind::tanh:
            return v.array().tanh().matrix();
        case Activation::Kind::identity:
            return v;
    }
    return v;
}

Eigen::MatrixXd activation_invert(const Eigen::Ref<const Eigen::MatrixXd>& v, const Activation& a) {
    switch (a.kind) {
        case Activation::Kind::tanh: {
            const double hi = 1.0 - a.clamp_margin;
            return v.unaryExpr([hi](double x) { return std::atanh(std::clamp(x, -hi, hi)); });
        }
        case Activation::Kind::identity:
            return v;
    }
    return v;
}

const char* to_string(Activation::Kind kind) {
    return kind == Activation::Kind::tanh ? "tanh" : "identity";
}

Activation::Kind parse_activation_kind(const std::string& name) {
    if (name == "tanh") {
        return Activation::Kind::tanh;
    }
    if (name == "identity") {
        return Activation::Kind::identity;
    }
    throw std::invalid_argument("unknown activation '" + name + "'");
}

}  // namespace bdae
