#pragma once

#include <cstdint>
#include <random>
#include <string>

#include <Eigen/Dense>

#include "bdae/image.hpp"

namespace bdae {

/// Deterministic random source. std::mt19937_64 is bit-exactly specified by
/// the standard; the uniform and normal transforms are done here rather than
/// through <random> distributions, whose algorithms vary across standard
/// libraries.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    /// Standard normal via the Box-Muller transform.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

/// Seeded standard-normal matrix.
Eigen::MatrixXd standard_normal_matrix(Eigen::Index rows, Eigen::Index cols, std::uint64_t seed);

struct NoiseSpec {
    enum class Kind { gaussian, salt_pepper };

    Kind kind = Kind::gaussian;
    double sigma = 0.0;     ///< 0-255 convention, gaussian only
    double fraction = 0.0;  ///< corrupted fraction in [0, 1], salt_pepper only
    std::uint64_t seed = 0;

    /// e.g. "gaussian(sigma=25)" or "salt_pepper(fraction=0.5)"
    std::string describe() const;
    /// The noise level in its own unit (sigma or fraction).
    double level() const { return kind == Kind::gaussian ? sigma : fraction; }
};

const char* to_string(NoiseSpec::Kind kind);

/// img + n, n ~ N(0, (sigma/255)^2) i.i.d. Not clipped.
Image add_gaussian_noise(const Image& img, const NoiseSpec& spec);

/// Each pixel independently replaced, with probability `fraction`, by 0 or 1
/// (equally likely). Untouched pixels keep their exact value.
Image add_salt_pepper(const Image& img, const NoiseSpec& spec);

/// Dispatches on spec.kind.
Image add_noise(const Image& img, const NoiseSpec& spec);

}  // namespace bdae
