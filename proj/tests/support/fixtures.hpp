#pragma once

// Random states and straight-line objective/gradient evaluations shared by the
// unit and acceptance suites. Patch access goes through the oracle index
// tables, never through the library's extract/aggregate.

#include <cmath>
#include <random>

#include <Eigen/Dense>

#include "bdae/config.hpp"
#include "bdae/gaussian.hpp"
#include "bdae/image.hpp"
#include "bdae/impulse.hpp"
#include "oracles.hpp"

namespace fixture {

inline Eigen::MatrixXd random_matrix(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& gen,
                                     double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m.data()[i] = n(gen);
    }
    return m;
}

inline Eigen::MatrixXd random_uniform(Eigen::Index rows, Eigen::Index cols, std::mt19937_64& gen,
                                      double half_width = 1.0) {
    std::uniform_real_distribution<double> u(-half_width, half_width);
    Eigen::MatrixXd m(rows, cols);
    for (Eigen::Index i = 0; i < m.size(); ++i) {
        m.data()[i] = u(gen);
    }
    return m;
}

inline bdae::Image random_image(int h, int w, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    bdae::Image img(h, w);
    for (Eigen::Index i = 0; i < img.size(); ++i) {
        img.pixels()[i] = u(gen);
    }
    return img;
}

inline bdae::SolverConfig small_config(int patch_size, int hidden, bdae::Activation::Kind kind) {
    bdae::SolverConfig cfg;
    cfg.patch = bdae::PatchConfig{patch_size, 1};
    cfg.hidden = hidden;
    cfg.activation.kind = kind;
    return cfg;
}

/// Every block filled with noise; codes stay inside (-1, 1) so tanh inverses are tame.
inline bdae::AutoencoderState random_state(int h, int w, const bdae::SolverConfig& cfg,
                                           std::mt19937_64& gen) {
    const int dim = cfg.patch.dim();
    const int hidden = cfg.effective_hidden();
    const auto count = static_cast<Eigen::Index>(
        oracle::patch_indices(h, w, cfg.patch.patch_size, cfg.patch.stride).size());
    bdae::AutoencoderState s;
    s.encoder = random_matrix(hidden, dim, gen, 1.0 / std::sqrt(dim));
    s.decoder = random_matrix(dim, hidden, gen, 1.0 / std::sqrt(hidden));
    s.codes = random_uniform(hidden, count, gen, 0.4);
    s.bregman = random_uniform(hidden, count, gen, 0.2);
    s.estimate = random_image(h, w, gen);
    return s;
}

inline Eigen::MatrixXd gather(const bdae::Image& img, const bdae::SolverConfig& cfg) {
    return oracle::gather(img.height(), img.width(), cfg.patch.patch_size, cfg.patch.stride,
                          img.pixels());
}

inline Eigen::VectorXd scatter(const Eigen::MatrixXd& cols, int h, int w,
                               const bdae::SolverConfig& cfg) {
    return oracle::scatter(h, w, cfg.patch.patch_size, cfg.patch.stride, cols);
}

inline Eigen::MatrixXd phi(const Eigen::MatrixXd& v, const bdae::SolverConfig& cfg) {
    if (cfg.activation.kind == bdae::Activation::Kind::identity) {
        return v;
    }
    return v.array().tanh().matrix();
}

inline Eigen::MatrixXd phi_inv(const Eigen::MatrixXd& v, const bdae::SolverConfig& cfg) {
    if (cfg.activation.kind == bdae::Activation::Kind::identity) {
        return v;
    }
    const double hi = 1.0 - cfg.activation.clamp_margin;
    return v.unaryExpr([hi](double x) { return std::atanh(std::max(-hi, std::min(hi, x))); });
}

// Ridge-regularised block objectives: the exact problems P1 and P2 minimise.
inline double decoder_problem(const Eigen::MatrixXd& dec, const bdae::AutoencoderState& s,
                              const Eigen::MatrixXd& x, double eps) {
    return (x - dec * s.codes).squaredNorm() + eps * dec.squaredNorm();
}

inline double encoder_problem(const Eigen::MatrixXd& enc, const bdae::AutoencoderState& s,
                              const Eigen::MatrixXd& x, const bdae::SolverConfig& cfg) {
    return (phi_inv(s.codes - s.bregman, cfg) - enc * x).squaredNorm() +
           cfg.ridge.epsilon * enc.squaredNorm();
}

/// ||grad|| / ||X Z^T|| for the decoder problem.
inline double decoder_stationarity(const Eigen::MatrixXd& dec, const bdae::AutoencoderState& s,
                                   const Eigen::MatrixXd& x, double eps) {
    const Eigen::MatrixXd g = (dec * s.codes - x) * s.codes.transpose() + eps * dec;
    return g.norm() / (x * s.codes.transpose()).norm();
}

inline double encoder_stationarity(const Eigen::MatrixXd& enc, const bdae::AutoencoderState& s,
                                   const Eigen::MatrixXd& x, const bdae::SolverConfig& cfg) {
    const Eigen::MatrixXd t = phi_inv(s.codes - s.bregman, cfg);
    const Eigen::MatrixXd g = (enc * x - t) * x.transpose() + cfg.ridge.epsilon * enc;
    return g.norm() / (t * x.transpose()).norm();
}

/// ||x_n - x||^2 + lambda ||P x - W'Z||^2 + gamma ||phi^{-1}(Z - B) - W P x||^2
inline double image_problem(const bdae::AutoencoderState& s, const bdae::Image& cand,
                            const bdae::Image& noisy, const bdae::SolverConfig& cfg) {
    const Eigen::MatrixXd p = gather(cand, cfg);
    return (noisy.pixels() - cand.pixels()).squaredNorm() +
           cfg.lambda * (p - s.decoder * s.codes).squaredNorm() +
           cfg.gamma * (phi_inv(s.codes - s.bregman, cfg) - s.encoder * p).squaredNorm();
}

/// Half-gradient of image_problem relative to the size of its constant part.
inline double image_stationarity(const bdae::AutoencoderState& s, const bdae::Image& cand,
                                 const bdae::Image& noisy, const bdae::SolverConfig& cfg) {
    const int h = noisy.height();
    const int w = noisy.width();
    const Eigen::MatrixXd p = gather(cand, cfg);
    const Eigen::MatrixXd t = phi_inv(s.codes - s.bregman, cfg);
    const Eigen::VectorXd grad =
        (cand.pixels() - noisy.pixels()) + scatter(cfg.lambda * (p - s.decoder * s.codes), h, w, cfg) +
        scatter(cfg.gamma * s.encoder.transpose() * (s.encoder * p - t), h, w, cfg);
    const Eigen::VectorXd constant =
        noisy.pixels() + scatter(cfg.lambda * s.decoder * s.codes, h, w, cfg) +
        scatter(cfg.gamma * s.encoder.transpose() * t, h, w, cfg);
    return grad.norm() / constant.norm();
}

/// Dense solve of the image system, alpha I + sum P^T M P = rhs assembled from scratch.
inline Eigen::VectorXd image_direct_solve(const bdae::AutoencoderState& s, const bdae::Image& noisy,
                                          const bdae::SolverConfig& cfg) {
    const int h = noisy.height();
    const int w = noisy.width();
    Eigen::MatrixXd m = cfg.gamma * s.encoder.transpose() * s.encoder;
    m += cfg.lambda * Eigen::MatrixXd::Identity(m.rows(), m.cols());
    const Eigen::MatrixXd a =
        oracle::patch_system_matrix(h, w, cfg.patch.patch_size, cfg.patch.stride, 1.0, m);
    const Eigen::VectorXd rhs =
        noisy.pixels() +
        scatter(cfg.lambda * s.decoder * s.codes +
                    cfg.gamma * s.encoder.transpose() * phi_inv(s.codes - s.bregman, cfg),
                h, w, cfg);
    return a.ldlt().solve(rhs);
}

/// Full objective written out term by term.
inline double full_objective(const bdae::AutoencoderState& s, const bdae::Image& noisy,
                             const bdae::SolverConfig& cfg) {
    const Eigen::MatrixXd p = gather(s.estimate, cfg);
    double fidelity = 0.0;
    for (Eigen::Index i = 0; i < noisy.size(); ++i) {
        const double d = noisy.pixels()[i] - s.estimate.pixels()[i];
        fidelity += d * d;
    }
    double recon = 0.0;
    double l1 = 0.0;
    double split = 0.0;
    const Eigen::MatrixXd wp = phi(s.encoder * p, cfg);
    for (Eigen::Index j = 0; j < p.cols(); ++j) {
        const Eigen::VectorXd r = p.col(j) - s.decoder * s.codes.col(j);
        recon += r.dot(r);
        for (Eigen::Index k = 0; k < s.codes.rows(); ++k) {
            l1 += std::abs(s.codes(k, j));
            const double e = s.codes(k, j) - wp(k, j) - s.bregman(k, j);
            split += e * e;
        }
    }
    return fidelity + cfg.lambda * (recon + cfg.mu * l1) + cfg.gamma * split;
}

}  // namespace fixture
