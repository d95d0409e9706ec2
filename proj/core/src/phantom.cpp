#include "bdae/phantom.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

namespace bdae {

namespace {

struct Ellipse {
    double intensity;
    double a;
    double b;
    double x0;
    double y0;
    double theta_deg;
};

constexpr std::array<Ellipse, 10> kModifiedSheppLogan{{
    {1.0, 0.69, 0.92, 0.0, 0.0, 0.0},
    {-0.8, 0.6624, 0.8740, 0.0, -0.0184, 0.0},
    {-0.2, 0.1100, 0.3100, 0.22, 0.0, -18.0},
    {-0.2, 0.1600, 0.4100, -0.22, 0.0, 18.0},
    {0.1, 0.2100, 0.2500, 0.0, 0.35, 0.0},
    {0.1, 0.0460, 0.0460, 0.0, 0.1, 0.0},
    {0.1, 0.0460, 0.0460, 0.0, -0.1, 0.0},
    {0.1, 0.0460, 0.0230, -0.08, -0.605, 0.0},
    {0.1, 0.0230, 0.0230, 0.0, -0.606, 0.0},
    {0.1, 0.0230, 0.0460, 0.06, -0.605, 0.0},
}};

}  // namespace

Image shepp_logan(int size) {
    Image img(size, size, 0.0);
    for (int r = 0; r < size; ++r) {
        const double y = 1.0 - (2.0 * r + 1.0) / size;
        for (int c = 0; c < size; ++c) {
            const double x = (2.0 * c + 1.0) / size - 1.0;
            double v = 0.0;
            for (const Ellipse& e : kModifiedSheppLogan) {
                const double t = e.theta_deg * std::numbers::pi / 180.0;
                const double dx = x - e.x0;
                const double dy = y - e.y0;
                const double u = dx * std::cos(t) + dy * std::sin(t);
                const double w = -dx * std::sin(t) + dy * std::cos(t);
                if ((u * u) / (e.a * e.a) + (w * w) / (e.b * e.b) <= 1.0) {
                    v += e.intensity;
                }
            }
            img.at(r, c) = std::clamp(v, 0.0, 1.0);
        }
    }
    return img;
}

}  // namespace bdae
