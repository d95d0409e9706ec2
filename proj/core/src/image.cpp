#include "bdae/image.hpp"

#include <string>

#include "bdae/error.hpp"

namespace bdae {

Image::Image(int height, int width, double fill)
    : height_(height), width_(width),
      pixels_(Eigen::VectorXd::Constant(static_cast<Eigen::Index>(height) * width, fill)) {
    if (height <= 0 || width <= 0) {
        throw DimensionError("image dimensions must be positive");
    }
}

Image::Image(int height, int width, Eigen::VectorXd pixels)
    : height_(height), width_(width), pixels_(std::move(pixels)) {
    if (height <= 0 || width <= 0) {
        throw DimensionError("image dimensions must be positive");
    }
    if (pixels_.size() != static_cast<Eigen::Index>(height) * width) {
        throw DimensionError("pixel count " + std::to_string(pixels_.size()) +
                             " does not match " + std::to_string(height) + "x" +
                             std::to_string(width));
    }
}

Image Image::clipped(double lo, double hi) const {
    Image out = *this;
    out.pixels_ = pixels_.cwiseMax(lo).cwiseMin(hi);
    return out;
}

void require_same_shape(const Image& a, const Image& b, const char* what) {
    if (!a.same_shape(b)) {
        throw DimensionError(std::string(what) + ": image shapes differ (" +
                             std::to_string(a.height()) + "x" + std::to_string(a.width()) +
                             " vs " + std::to_string(b.height()) + "x" +
                             std::to_string(b.width()) + ")");
    }
}

}  // namespace bdae
