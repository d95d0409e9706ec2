#include "bdae/metrics.hpp"

#include <cmath>
#include <limits>

namespace bdae {

double mean_squared_error(const Image& reference, const Image& test) {
    require_same_shape(reference, test, "mean_squared_error");
    return (reference.pixels() - test.pixels()).squaredNorm() /
           static_cast<double>(reference.size());
}

double psnr(const Image& reference, const Image& test) {
    const double mse = mean_squared_error(reference, test);
    if (mse == 0.0) {
        return std::numeric_limits<double>::infinity();
    }
    return 20.0 * std::log10(1.0 / std::sqrt(mse));
}

Image difference_image(const Image& reference, const Image& denoised, double gain) {
    require_same_shape(reference, denoised, "difference_image");
    Eigen::VectorXd d = (gain * (reference.pixels() - denoised.pixels()).cwiseAbs()).cwiseMax(0.0).cwiseMin(1.0);
    return Image(reference.height(), reference.width(), std::move(d));
}

}  // namespace bdae
