#pragma once

#include <vector>

#include <Eigen/Dense>

#include "bdae/image.hpp"

namespace bdae {

/// Square patch geometry. `stride` must lie in [1, patch_size] so that every
/// pixel is covered by at least one patch.
struct PatchConfig {
    int patch_size = 8;
    int stride = 1;

    int dim() const { return patch_size * patch_size; }
    void validate() const;
};

/// Column-stacked vectorized patches. Column j is the patch whose top-left
/// corner is the j-th position in raster order; entries within a column are
/// the patch pixels in row-major order.
struct PatchMatrix {
    Eigen::MatrixXd data;

    Eigen::Index dim() const { return data.rows(); }
    Eigen::Index count() const { return data.cols(); }
};

/// Top-left offsets along one axis of length `extent`: 0, s, 2s, ... plus a
/// final offset flush with the far border when the grid does not land on it.
std::vector<int> patch_offsets(int extent, const PatchConfig& cfg);

/// Number of patch locations for an image of the given size.
Eigen::Index patch_count(int height, int width, const PatchConfig& cfg);

PatchMatrix extract_patches(const Image& img, const PatchConfig& cfg);

/// extract_patches writing into caller-owned storage (resized if needed).
void extract_patches_into(const Image& img, const PatchConfig& cfg, Eigen::MatrixXd& out);

/// Adjoint of extract_patches: every pixel receives the sum of the patch
/// entries mapping onto it. No normalisation by overlap.
Image aggregate_patches(const PatchMatrix& pm, const PatchConfig& cfg, int height, int width);

/// aggregate_patches accumulating into `out` (which is overwritten, not added to).
void aggregate_patches_into(const Eigen::MatrixXd& patches, const PatchConfig& cfg, Image& out);

/// Number of patches covering each pixel (diagonal of sum_i P_i^T P_i).
Image overlap_counts(const PatchConfig& cfg, int height, int width);

}  // namespace bdae
