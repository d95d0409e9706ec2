#pragma once

#include "bdae/image.hpp"

namespace bdae {

double mean_squared_error(const Image& reference, const Image& test);

/// 20 log10(1 / rmse) on the [0, 1] scale; +infinity for identical images.
double psnr(const Image& reference, const Image& test);

/// clip(gain * |reference - denoised|, 0, 1), the contrast-enhanced error map.
Image difference_image(const Image& reference, const Image& denoised, double gain = 10.0);

}  // namespace bdae
