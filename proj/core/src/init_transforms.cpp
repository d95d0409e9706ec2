#include "bdae/init_transforms.hpp"

#include <cmath>
#include <numbers>

#include <spdlog/spdlog.h>

#include "bdae/error.hpp"

namespace bdae {

namespace {

bool is_power_of_two(int n) { return n > 0 && (n & (n - 1)) == 0; }

}  // namespace

Eigen::MatrixXd dct_matrix(int n) {
    if (n < 1) {
        throw DimensionError("dct_matrix: size must be positive");
    }
    Eigen::MatrixXd c(n, n);
    for (int k = 0; k < n; ++k) {
        const double scale = k == 0 ? std::sqrt(1.0 / n) : std::sqrt(2.0 / n);
        for (int i = 0; i < n; ++i) {
            c(k, i) = scale * std::cos(std::numbers::pi * (2 * i + 1) * k / (2.0 * n));
        }
    }
    return c;
}

Eigen::MatrixXd haar_matrix(int n) {
    if (!is_power_of_two(n)) {
        throw DimensionError("haar_matrix: size must be a power of two");
    }
    Eigen::MatrixXd h = Eigen::MatrixXd::Ones(1, 1);
    const double s = 1.0 / std::numbers::sqrt2;
    while (h.rows() < n) {
        const Eigen::Index m = h.rows();
        Eigen::MatrixXd next(2 * m, 2 * m);
        // Top half: averages of the coarser basis; bottom half: finest details.
        for (Eigen::Index r = 0; r < m; ++r) {
            for (Eigen::Index c = 0; c < m; ++c) {
                next(r, 2 * c) = s * h(r, c);
                next(r, 2 * c + 1) = s * h(r, c);
            }
        }
        next.bottomRows(m).setZero();
        for (Eigen::Index r = 0; r < m; ++r) {
            next(m + r, 2 * r) = s;
            next(m + r, 2 * r + 1) = -s;
        }
        h = std::move(next);
    }
    return h;
}

Eigen::MatrixXd separable_2d(const Eigen::MatrixXd& b) {
    // Row-major vec(B X B^T) = (B kron B) vec(X).
    const Eigen::Index n = b.rows();
    Eigen::MatrixXd k(n * n, n * n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            k.block(i * n, j * n, n, n) = b(i, j) * b;
        }
    }
    return k;
}

InitTransforms build_init_transforms(int patch_size) {
    const Eigen::MatrixXd dct = separable_2d(dct_matrix(patch_size));
    const Eigen::Index dim = dct.rows();

    InitTransforms out;
    Eigen::MatrixXd second;
    if (is_power_of_two(patch_size)) {
        second = separable_2d(haar_matrix(patch_size));
    } else {
        spdlog::warn("patch size {} is not a power of two; using the DCT twice instead of DCT+Haar",
                     patch_size);
        second = dct;
        out.haar = false;
    }
    out.encoder.resize(2 * dim, dim);
    out.encoder << dct, second;
    out.decoder.resize(dim, 2 * dim);
    out.decoder << 0.5 * dct.transpose(), 0.5 * second.transpose();
    return out;
}

}  // namespace bdae
