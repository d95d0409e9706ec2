#include "bdae/prox.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "bdae/error.hpp"

namespace bdae {

Eigen::MatrixXd soft_threshold(const Eigen::Ref<const Eigen::MatrixXd>& v, double t) {
    if (t < 0.0) {
        throw std::invalid_argument("soft_threshold: negative threshold");
    }
    return v.unaryExpr([t](double x) { return soft_threshold(x, t); });
}

namespace {

void keep_top(const double* src, double* dst, Eigen::Index n, Eigen::Index tau,
              std::vector<Eigen::Index>& order) {
    std::fill(dst, dst + n, 0.0);
    if (tau == 0) {
        return;
    }
    order.resize(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), Eigen::Index{0});
    const auto by_magnitude = [src](Eigen::Index a, Eigen::Index b) {
        const double ma = std::abs(src[a]);
        const double mb = std::abs(src[b]);
        return ma > mb || (ma == mb && a < b);
    };
    if (tau < n) {
        std::nth_element(order.begin(), order.begin() + (tau - 1), order.end(), by_magnitude);
    }
    for (Eigen::Index k = 0; k < std::min(tau, n); ++k) {
        const auto i = order[static_cast<std::size_t>(k)];
        dst[i] = src[i];
    }
}

void check_tau(Eigen::Index tau, Eigen::Index n) {
    if (tau < 0 || tau > n) {
        throw DimensionError("hard threshold: tau=" + std::to_string(tau) +
                             " outside [0, " + std::to_string(n) + "]");
    }
}

}  // namespace

Eigen::VectorXd hard_threshold_top_tau(const Eigen::Ref<const Eigen::VectorXd>& v, Eigen::Index tau) {
    check_tau(tau, v.size());
    Eigen::VectorXd out(v.size());
    std::vector<Eigen::Index> order;
    keep_top(v.data(), out.data(), v.size(), tau, order);
    return out;
}

Eigen::MatrixXd hard_threshold_columns(const Eigen::Ref<const Eigen::MatrixXd>& v, Eigen::Index tau) {
    check_tau(tau, v.rows());
    Eigen::MatrixXd out(v.rows(), v.cols());
    std::vector<Eigen::Index> order;
    for (Eigen::Index j = 0; j < v.cols(); ++j) {
        keep_top(v.col(j).data(), out.col(j).data(), v.rows(), tau, order);
    }
    return out;
}

}  // namespace bdae
