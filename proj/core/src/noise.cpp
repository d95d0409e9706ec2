#include "bdae/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace bdae {

double Rng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1], keeps log finite
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
}

Eigen::MatrixXd standard_normal_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed) {
    Rng rng(seed);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) {
            m(i, j) = rng.normal();
        }
    }
    return m;
}

const char* to_string(NoiseSpec::Kind kind) {
    return kind == NoiseSpec::Kind::gaussian ? "gaussian" : "salt_pepper";
}

std::string NoiseSpec::describe() const {
    std::ostringstream os;
    if (kind == Kind::gaussian) {
        os << "gaussian(sigma=" << sigma << ")";
    } else {
        os << "salt_pepper(fraction=" << fraction << ")";
    }
    return os.str();
}

Image add_gaussian_noise(const Image& img, const NoiseSpec& spec) {
    if (spec.kind != NoiseSpec::Kind::gaussian) {
        throw std::invalid_argument("add_gaussian_noise: spec is not gaussian");
    }
    if (spec.sigma < 0.0) {
        throw std::invalid_argument("add_gaussian_noise: sigma must be nonnegative");
    }
    Image out = img;
    if (spec.sigma == 0.0) {
        return out;
    }
    const double sd = spec.sigma / 255.0;
    Rng rng(spec.seed);
    for (double& v : out.pixels()) {
        v += sd * rng.normal();
    }
    return out;
}

Image add_salt_pepper(const Image& img, const NoiseSpec& spec) {
    if (spec.kind != NoiseSpec::Kind::salt_pepper) {
        throw std::invalid_argument("add_salt_pepper: spec is not salt_pepper");
    }
    if (!(spec.fraction >= 0.0 && spec.fraction <= 1.0)) {
        throw std::invalid_argument("add_salt_pepper: fraction must lie in [0, 1]");
    }
    Image out = img;
    Rng rng(spec.seed);
    for (double& v : out.pixels()) {
        if (rng.uniform() < spec.fraction) {
            v = rng.uniform() < 0.5 ? 0.0 : 1.0;
        }
    }
    return out;
}

Image add_noise(const Image& img, const NoiseSpec& spec) {
    return spec.kind == NoiseSpec::Kind::gaussian ? add_gaussian_noise(img, spec)
                                                  : add_salt_pepper(img, spec);
}

}  // namespace bdae
