#include "bdae/patches.hpp"

#include <algorithm>
#include <string>

#include "bdae/error.hpp"

namespace bdae {

void PatchConfig::validate() const {
    if (patch_size < 1) {
        throw DimensionError("patch_size must be positive");
    }
    if (stride < 1 || stride > patch_size) {
        throw DimensionError("stride must lie in [1, patch_size], got " + std::to_string(stride));
    }
}

namespace {

void require_fits(int height, int width, const PatchConfig& cfg) {
    cfg.validate();
    if (height < cfg.patch_size || width < cfg.patch_size) {
        throw DimensionError("image " + std::to_string(height) + "x" + std::to_string(width) +
                             " is smaller than patch size " + std::to_string(cfg.patch_size));
    }
}

}  // namespace

std::vector<int> patch_offsets(int extent, const PatchConfig& cfg) {
    std::vector<int> offsets;
    const int last = extent - cfg.patch_size;
    for (int k = 0; k <= last; k += cfg.stride) {
        offsets.push_back(k);
    }
    if (!offsets.empty() && offsets.back() != last) {
        offsets.push_back(last);
    }
    return offsets;
}

Eigen::Index patch_count(int height, int width, const PatchConfig& cfg) {
    require_fits(height, width, cfg);
    return static_cast<Eigen::Index>(patch_offsets(height, cfg).size()) *
           static_cast<Eigen::Index>(patch_offsets(width, cfg).size());
}

void extract_patches_into(const Image& img, const PatchConfig& cfg, Eigen::MatrixXd& out) {
    require_fits(img.height(), img.width(), cfg);
    const auto rows = patch_offsets(img.height(), cfg);
    const auto cols = patch_offsets(img.width(), cfg);
    const int p = cfg.patch_size;

    out.resize(cfg.dim(), static_cast<Eigen::Index>(rows.size() * cols.size()));
    const double* src = img.pixels().data();
    const Eigen::Index w = img.width();
    Eigen::Index j = 0;
    for (int r0 : rows) {
        for (int c0 : cols) {
            double* dst = out.col(j++).data();
            for (int r = 0; r < p; ++r) {
                const double* line = src + (r0 + r) * w + c0;
                std::copy(line, line + p, dst);
                dst += p;
            }
        }
    }
}

PatchMatrix extract_patches(const Image& img, const PatchConfig& cfg) {
    PatchMatrix pm;
    extract_patches_into(img, cfg, pm.data);
    return pm;
}

void aggregate_patches_into(const Eigen::MatrixXd& patches, const PatchConfig& cfg, Image& out) {
    const int height = out.height();
    const int width = out.width();
    require_fits(height, width, cfg);
    const auto rows = patch_offsets(height, cfg);
    const auto cols = patch_offsets(width, cfg);
    const auto expected = static_cast<Eigen::Index>(rows.size() * cols.size());
    if (patches.rows() != cfg.dim() || patches.cols() != expected) {
        throw DimensionError("patch matrix is " + std::to_string(patches.rows()) + "x" +
                             std::to_string(patches.cols()) + ", expected " +
                             std::to_string(cfg.dim()) + "x" + std::to_string(expected));
    }

    const int p = cfg.patch_size;
    out.pixels().setZero();
    double* dst = out.pixels().data();
    Eigen::Index j = 0;
    for (int r0 : rows) {
        for (int c0 : cols) {
            const double* src = patches.col(j++).data();
            for (int r = 0; r < p; ++r) {
                double* line = dst + static_cast<Eigen::Index>(r0 + r) * width + c0;
                for (int c = 0; c < p; ++c) {
                    line[c] += src[c];
                }
                src += p;
            }
        }
    }
}

Image aggregate_patches(const PatchMatrix& pm, const PatchConfig& cfg, int height, int width) {
    Image out(height, width, 0.0);
    aggregate_patches_into(pm.data, cfg, out);
    return out;
}

Image overlap_counts(const PatchConfig& cfg, int height, int width) {
    require_fits(height, width, cfg);
    const auto rows = patch_offsets(height, cfg);
    const auto cols = patch_offsets(width, cfg);
    const int p = cfg.patch_size;
    Image out(height, width, 0.0);
    for (int r0 : rows) {
        for (int c0 : cols) {
            for (int r = 0; r < p; ++r) {
                for (int c = 0; c < p; ++c) {
                    out.at(r0 + r, c0 + c) += 1.0;
                }
            }
        }
    }
    return out;
}

}  // namespace bdae
