#pragma once

#include <filesystem>
#include <string>

#include "bdae/image.hpp"

namespace bdae {

/// Reads a binary 8-bit PGM (P5). Samples are scaled by 1/maxval, so a
/// standard maxval of 255 maps 0..255 onto [0, 1]. Throws FormatError for
/// anything else, including 16-bit files.
Image read_pgm(const std::filesystem::path& path);
Image decode_pgm(const std::string& bytes);

/// Writes a P5 file with maxval 255. Pixels are clipped to [0, 1] and
/// mapped by floor(v * 255 + 0.5).
void write_pgm(const Image& img, const std::filesystem::path& path);
std::string encode_pgm(const Image& img);

/// Format-dispatching wrappers; only PGM is currently supported.
Image read_image(const std::filesystem::path& path);
void write_image(const Image& img, const std::filesystem::path& path);

}  // namespace bdae
