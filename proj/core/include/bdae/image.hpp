#pragma once

#include <Eigen/Dense>

namespace bdae {

/// A single-band intensity image. Pixels are stored row-major in one
/// contiguous vector so that the image doubles as a point of R^(h*w) for
/// the linear solvers.
class Image {
public:
    Image() = default;
    Image(int height, int width, double fill = 0.0);
    Image(int height, int width, Eigen::VectorXd pixels);

    int height() const { return height_; }
    int width() const { return width_; }
    Eigen::Index size() const { return pixels_.size(); }

    double& at(int row, int col) { return pixels_[static_cast<Eigen::Index>(row) * width_ + col]; }
    double at(int row, int col) const { return pixels_[static_cast<Eigen::Index>(row) * width_ + col]; }

    Eigen::VectorXd& pixels() { return pixels_; }
    const Eigen::VectorXd& pixels() const { return pixels_; }

    bool same_shape(const Image& other) const {
        return height_ == other.height_ && width_ == other.width_;
    }
    bool all_finite() const { return pixels_.allFinite(); }

    /// Copy with every pixel clipped to [lo, hi].
    Image clipped(double lo = 0.0, double hi = 1.0) const;

    friend bool operator==(const Image& a, const Image& b) {
        return a.same_shape(b) && a.pixels_ == b.pixels_;
    }

private:
    int height_ = 0;
    int width_ = 0;
    Eigen::VectorXd pixels_;
};

/// Throws DimensionError unless both images share a shape.
void require_same_shape(const Image& a, const Image& b, const char* what);

}  // namespace bdae
