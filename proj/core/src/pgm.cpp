#include "bdae/pgm.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iterator>
#include <sstream>

#include "bdae/error.hpp"

namespace bdae {

namespace {

class HeaderReader {
public:
    explicit HeaderReader(const std::string& bytes) : bytes_(bytes) {}

    long next_number(const char* what) {
        skip_space_and_comments();
        if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            throw FormatError(std::string("PGM header: expected ") + what);
        }
        long value = 0;
        while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
            value = value * 10 + (bytes_[pos_++] - '0');
            if (value > 1'000'000'000L) {
                throw FormatError(std::string("PGM header: ") + what + " out of range");
            }
        }
        return value;
    }

    /// Exactly one whitespace byte separates maxval from the raster.
    std::size_t raster_start() {
        if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
            throw FormatError("PGM header: missing whitespace before raster");
        }
        return pos_ + 1;
    }

private:
    void skip_space_and_comments() {
        while (pos_ < bytes_.size()) {
            const char ch = bytes_[pos_];
            if (ch == '#') {
                while (pos_ < bytes_.size() && bytes_[pos_] != '\n') {
                    ++pos_;
                }
            } else if (std::isspace(static_cast<unsigned char>(ch))) {
                ++pos_;
            } else {
                break;
            }
        }
    }

    const std::string& bytes_;
    std::size_t pos_ = 2;
};

}  // namespace

Image decode_pgm(const std::string& bytes) {
    if (bytes.size() < 2 || bytes[0] != 'P') {
        throw FormatError("not a PGM file");
    }
    if (bytes[1] != '5') {
        throw FormatError(std::string("unsupported PNM variant P") + bytes[1] +
                          " (only binary P5 is supported)");
    }
    HeaderReader header(bytes);
    const long width = header.next_number("width");
    const long height = header.next_number("height");
    const long maxval = header.next_number("maxval");
    if (width <= 0 || height <= 0) {
        throw FormatError("PGM header: non-positive dimensions");
    }
    if (maxval <= 0 || maxval > 65535) {
        throw FormatError("PGM header: invalid maxval");
    }
    if (maxval > 255) {
        throw FormatError("unsupported PGM bit depth: maxval " + std::to_string(maxval) +
                          " needs 16-bit samples (only 8-bit is supported)");
    }
    const std::size_t start = header.raster_start();
    const auto count = static_cast<std::size_t>(width) * static_cast<std::size_t>(height);
    if (bytes.size() - start < count) {
        throw FormatError("PGM raster truncated: expected " + std::to_string(count) + " bytes");
    }

    Image img(static_cast<int>(height), static_cast<int>(width));
    const double scale = 1.0 / static_cast<double>(maxval);
    for (std::size_t i = 0; i < count; ++i) {
        const auto sample = static_cast<unsigned char>(bytes[start + i]);
        if (sample > maxval) {
            throw FormatError("PGM sample exceeds maxval");
        }
        img.pixels()[static_cast<Eigen::Index>(i)] = sample * scale;
    }
    return img;
}

Image read_pgm(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw FormatError("cannot open '" + path.string() + "'");
    }
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
        return decode_pgm(bytes);
    } catch (const FormatError& e) {
        throw FormatError(path.string() + ": " + e.what());
    }
}

std::string encode_pgm(const Image& img) {
    std::ostringstream os;
    os << "P5\n" << img.width() << ' ' << img.height() << "\n255\n";
    std::string out = os.str();
    out.reserve(out.size() + static_cast<std::size_t>(img.size()));
    for (double v : img.pixels()) {
        const double clipped = std::clamp(v, 0.0, 1.0);
        out.push_back(static_cast<char>(static_cast<unsigned char>(std::floor(clipped * 255.0 + 0.5))));
    }
    return out;
}

void write_pgm(const Image& img, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw FormatError("cannot write '" + path.string() + "'");
    }
    const std::string bytes = encode_pgm(img);
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out) {
        throw FormatError("write failed for '" + path.string() + "'");
    }
}

Image read_image(const std::filesystem::path& path) {
    return read_pgm(path);
}

void write_image(const Image& img, const std::filesystem::path& path) {
    write_pgm(img, path);
}

}  // namespace bdae
