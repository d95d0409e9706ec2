#pragma once

#include "bdae/image.hpp"

namespace bdae {

/// Modified (high-contrast) Shepp-Logan head phantom, size x size, values
/// in [0, 1].
Image shepp_logan(int size);

}  // namespace bdae
