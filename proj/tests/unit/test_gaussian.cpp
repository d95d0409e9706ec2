#include <random>

#include <gtest/gtest.h>

#include "bdae/error.hpp"
#include "bdae/gaussian.hpp"
#include "bdae/metrics.hpp"
#include "bdae/noise.hpp"
#include "bdae/phantom.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

using bdae::Activation;
using bdae::Image;
using bdae::PatchMatrix;
using Eigen::MatrixXd;
using Eigen::VectorXd;

namespace {

constexpr Activation::Kind kBoth[] = {Activation::Kind::identity, Activation::Kind::tanh};

PatchMatrix patches_of(const Image& img, const bdae::SolverConfig& cfg) {
    return PatchMatrix{fixture::gather(img, cfg)};
}

}  // namespace

TEST(InitState, DefaultShapes) {
    bdae::SolverConfig cfg;
    const Image img = bdae::shepp_logan(64);
    const auto s = bdae::init_state(img, cfg);
    EXPECT_EQ(s.encoder.rows(), 128);
    EXPECT_EQ(s.encoder.cols(), 64);
    EXPECT_EQ(s.decoder.rows(), 64);
    EXPECT_EQ(s.decoder.cols(), 128);
    EXPECT_EQ(s.codes.cols(), 57 * 57);
    EXPECT_EQ(s.bregman, MatrixXd::Zero(128, 57 * 57));
    EXPECT_EQ(s.estimate, img);
}

TEST(InitState, IdentityActivationReconstructsPatches) {
    bdae::SolverConfig cfg;
    cfg.activation.kind = Activation::Kind::identity;
    std::mt19937_64 gen(1);
    const Image img = fixture::random_image(20, 20, gen);
    const auto s = bdae::init_state(img, cfg);
    EXPECT_LE((s.decoder * s.codes - fixture::gather(img, cfg)).cwiseAbs().maxCoeff(), 1e-8);
}

TEST(InitState, OtherWidthsUseOrthonormalRandomInit) {
    std::mt19937_64 gen(2);
    const Image img = fixture::random_image(12, 12, gen);
    for (int hidden : {24, 16, 10}) {
        auto cfg = fixture::small_config(4, hidden, Activation::Kind::identity);
        const auto s = bdae::init_state(img, cfg);
        ASSERT_EQ(s.encoder.rows(), hidden);
        ASSERT_EQ(s.encoder.cols(), 16);
        const MatrixXd g = hidden >= 16 ? MatrixXd(s.encoder.transpose() * s.encoder)
                                        : MatrixXd(s.encoder * s.encoder.transpose());
        EXPECT_TRUE(g.isApprox(MatrixXd::Identity(g.rows(), g.cols()), 1e-12)) << hidden;
        EXPECT_EQ(bdae::init_state(img, cfg).encoder, s.encoder);
    }
}

TEST(UpdateDecoder, IdentityCodesGiveIdentity) {
    std::mt19937_64 gen(3);
    auto cfg = fixture::small_config(4, 16, Activation::Kind::identity);
    auto s = fixture::random_state(12, 12, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    s.codes = p.data;
    EXPECT_TRUE(bdae::update_decoder(s, p, cfg).isApprox(MatrixXd::Identity(16, 16), 1e-6));
}

TEST(UpdateDecoder, RankOneClosedForm) {
    std::mt19937_64 gen(4);
    auto cfg = fixture::small_config(4, 1, Activation::Kind::identity);
    auto s = fixture::random_state(4, 4, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    ASSERT_EQ(p.count(), 1);
    const double z = s.codes(0, 0);
    const MatrixXd expected = p.data * (z / (z * z + cfg.ridge.epsilon));
    EXPECT_TRUE(bdae::update_decoder(s, p, cfg).isApprox(expected, 1e-12));
}

TEST(UpdateDecoder, StationaryAndNonIncreasing) {
    std::mt19937_64 gen(5);
    for (auto kind : kBoth) {
        for (int trial = 0; trial < 5; ++trial) {
            auto cfg = fixture::small_config(4, 32, kind);
            auto s = fixture::random_state(12, 12, cfg, gen);
            const PatchMatrix p = patches_of(s.estimate, cfg);
            const MatrixXd next = bdae::update_decoder(s, p, cfg);
            const double eps = cfg.ridge.epsilon;
            EXPECT_LE(fixture::decoder_stationarity(next, s, p.data, eps), 1e-6);
            EXPECT_LE(fixture::decoder_problem(next, s, p.data, eps),
                      fixture::decoder_problem(s.decoder, s, p.data, eps));
        }
    }
}

TEST(UpdateEncoder, ExactRecovery) {
    std::mt19937_64 gen(6);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    cfg.ridge.epsilon = 1e-12;
    auto s = fixture::random_state(12, 12, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    const MatrixXd truth = fixture::random_matrix(32, 16, gen);
    s.codes = truth * p.data;
    s.bregman.setZero();
    EXPECT_LE((bdae::update_encoder(s, p, cfg) - truth).cwiseAbs().maxCoeff(), 1e-6);
}

TEST(UpdateEncoder, ZeroPatchesGiveZeroEncoder) {
    std::mt19937_64 gen(7);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    auto s = fixture::random_state(8, 8, cfg, gen);
    s.estimate = Image(8, 8, 0.0);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    EXPECT_EQ(bdae::update_encoder(s, p, cfg), MatrixXd::Zero(32, 16));
}

TEST(UpdateEncoder, StationaryAndNonIncreasing) {
    std::mt19937_64 gen(8);
    for (auto kind : kBoth) {
        for (int trial = 0; trial < 5; ++trial) {
            auto cfg = fixture::small_config(4, 32, kind);
            auto s = fixture::random_state(12, 12, cfg, gen);
            const PatchMatrix p = patches_of(s.estimate, cfg);
            const MatrixXd next = bdae::update_encoder(s, p, cfg);
            EXPECT_LE(fixture::encoder_stationarity(next, s, p.data, cfg), 1e-6);
            EXPECT_LE(fixture::encoder_problem(next, s, p.data, cfg),
                      fixture::encoder_problem(s.encoder, s, p.data, cfg));
        }
    }
}

TEST(UpdateImage, FidelityOnlyLimitReturnsNoisy) {
    std::mt19937_64 gen(9);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    cfg.lambda = 0.0;
    cfg.gamma = 0.0;
    const auto s = fixture::random_state(12, 12, cfg, gen);
    const Image noisy = fixture::random_image(12, 12, gen);
    const auto solve = bdae::update_image_gaussian(s, noisy, cfg);
    EXPECT_LE((solve.image.pixels() - noisy.pixels()).cwiseAbs().maxCoeff(), 1e-14);
}

TEST(UpdateImage, ZeroTransformsGiveDiagonalSolve) {
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    cfg.gamma = 0.7;
    cfg.cg_tol = 1e-13;
    std::mt19937_64 gen(10);
    auto s = fixture::random_state(11, 13, cfg, gen);
    s.encoder.setZero();
    s.decoder.setZero();
    const Image noisy(11, 13, 0.6);
    const auto solve = bdae::update_image_gaussian(s, noisy, cfg);
    const Image overlap = bdae::overlap_counts(cfg.patch, 11, 13);
    for (Eigen::Index i = 0; i < noisy.size(); ++i) {
        EXPECT_NEAR(solve.image.pixels()[i], 0.6 / (1.0 + cfg.lambda * overlap.pixels()[i]), 1e-10);
    }
}

TEST(UpdateImage, MatchesDenseSolve) {
    std::mt19937_64 gen(11);
    for (auto kind : kBoth) {
        auto cfg = fixture::small_config(8, 0, kind);
        auto s = fixture::random_state(16, 16, cfg, gen);
        const Image noisy = fixture::random_image(16, 16, gen);
        const auto solve = bdae::update_image_gaussian(s, noisy, cfg);
        const VectorXd direct = fixture::image_direct_solve(s, noisy, cfg);
        EXPECT_TRUE(solve.converged);
        EXPECT_LE((solve.image.pixels() - direct).norm(), 1e-5 * direct.norm());
    }
}

TEST(UpdateImage, StationaryAndNonIncreasing) {
    std::mt19937_64 gen(12);
    for (auto kind : kBoth) {
        for (int trial = 0; trial < 3; ++trial) {
            auto cfg = fixture::small_config(4, 32, kind);
            cfg.cg_tol = 1e-10;
            auto s = fixture::random_state(12, 12, cfg, gen);
            const Image noisy = fixture::random_image(12, 12, gen);
            const auto solve = bdae::update_image_gaussian(s, noisy, cfg);
            EXPECT_LE(fixture::image_stationarity(s, solve.image, noisy, cfg), 1e-6);
            EXPECT_LE(fixture::image_problem(s, solve.image, noisy, cfg),
                      fixture::image_problem(s, s.estimate, noisy, cfg));
        }
    }
}

TEST(UpdateCodes, HugeMuZeroesCodes) {
    std::mt19937_64 gen(13);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    cfg.mu = 1e9;
    const auto s = fixture::random_state(10, 10, cfg, gen);
    EXPECT_EQ(bdae::update_codes_ista(s, patches_of(s.estimate, cfg), cfg), MatrixXd::Zero(32, 49));
}

TEST(UpdateCodes, ProximityOnlyCopiesSplitTarget) {
    std::mt19937_64 gen(14);
    for (auto kind : kBoth) {
        auto cfg = fixture::small_config(4, 32, kind);
        cfg.lambda = 0.0;
        cfg.mu = 0.0;
        const auto s = fixture::random_state(10, 10, cfg, gen);
        const PatchMatrix p = patches_of(s.estimate, cfg);
        const MatrixXd target = fixture::phi(s.encoder * p.data, cfg) + s.bregman;
        EXPECT_LE((bdae::update_codes_ista(s, p, cfg) - target).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(UpdateCodes, MonotoneAndNearCoordinateDescent) {
    std::mt19937_64 gen(15);
    auto cfg = fixture::small_config(4, 16, Activation::Kind::identity);
    cfg.mu = 0.05;
    auto s = fixture::random_state(6, 6, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);

    VectorXd prev = bdae::code_objectives(s, s.codes, p, cfg);
    for (int k = 1; k <= 40; ++k) {
        cfg.ista_iters = k;
        const VectorXd cur = bdae::code_objectives(s, bdae::update_codes_ista(s, p, cfg), p, cfg);
        EXPECT_TRUE((cur.array() <= prev.array() + 1e-12).all()) << "step " << k;
        prev = cur;
    }

    cfg.ista_iters = 500;
    const MatrixXd z = bdae::update_codes_ista(s, p, cfg);
    const MatrixXd q = fixture::phi(s.encoder * p.data, cfg) + s.bregman;
    for (Eigen::Index j = 0; j < p.count(); ++j) {
        const VectorXd best = oracle::lasso_coordinate_descent(s.decoder, p.data.col(j), q.col(j),
                                                               cfg.lambda, cfg.mu, cfg.gamma);
        const double opt = oracle::lasso_objective(s.decoder, p.data.col(j), q.col(j), cfg.lambda,
                                                   cfg.mu, cfg.gamma, best);
        const double got = oracle::lasso_objective(s.decoder, p.data.col(j), q.col(j), cfg.lambda,
                                                   cfg.mu, cfg.gamma, z.col(j));
        EXPECT_LE(got - opt, 1e-4) << "column " << j;
        EXPECT_GE(got - opt, -1e-9) << "column " << j;
    }
}

TEST(UpdateBregman, SatisfiedConstraintKeepsZero) {
    std::mt19937_64 gen(16);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::tanh);
    auto s = fixture::random_state(10, 10, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    s.codes = fixture::phi(s.encoder * p.data, cfg);
    s.bregman.setZero();
    EXPECT_LE(bdae::update_bregman(s, p, cfg).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(UpdateBregman, ConstantViolationAccumulates) {
    std::mt19937_64 gen(17);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    auto s = fixture::random_state(10, 10, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    const MatrixXd v = fixture::random_uniform(32, p.count(), gen);
    s.codes = s.encoder * p.data - v;
    s.bregman.setZero();
    for (int k = 1; k <= 4; ++k) {
        s.bregman = bdae::update_bregman(s, p, cfg);
        EXPECT_TRUE(s.bregman.isApprox(k * v, 1e-12)) << k;
    }
}

TEST(UpdateBregman, LiteralVariant) {
    std::mt19937_64 gen(18);
    auto cfg = fixture::small_config(4, 32, Activation::Kind::identity);
    cfg.bregman = bdae::BregmanUpdate::literal;
    const auto s = fixture::random_state(10, 10, cfg, gen);
    const PatchMatrix p = patches_of(s.estimate, cfg);
    const MatrixXd expected = s.codes - s.encoder * p.data - s.bregman;
    EXPECT_TRUE(bdae::update_bregman(s, p, cfg).isApprox(expected, 1e-14));
}

TEST(Objective, MatchesStraightLineEvaluation) {
    std::mt19937_64 gen(19);
    for (auto kind : kBoth) {
        auto cfg = fixture::small_config(4, 32, kind);
        const auto s = fixture::random_state(12, 12, cfg, gen);
        const Image noisy = fixture::random_image(12, 12, gen);
        const double expected = fixture::full_objective(s, noisy, cfg);
        EXPECT_NEAR(bdae::objective_gaussian(s, noisy, cfg), expected, 1e-10 * expected);
    }
}

TEST(Objective, ZeroAtConsistentState) {
    std::mt19937_64 gen(20);
    auto cfg = fixture::small_config(4, 16, Activation::Kind::identity);
    cfg.mu = 0.0;
    auto s = fixture::random_state(10, 10, cfg, gen);
    const Image noisy = s.estimate;
    s.decoder = MatrixXd::Identity(16, 16);
    s.codes = fixture::gather(noisy, cfg);
    s.bregman = s.codes - s.encoder * s.codes;
    EXPECT_NEAR(bdae::objective_gaussian(s, noisy, cfg), 0.0, 1e-20);

    bdae::AutoencoderState zero;
    zero.encoder = MatrixXd::Zero(16, 16);
    zero.decoder = MatrixXd::Zero(16, 16);
    zero.codes = MatrixXd::Zero(16, 49);
    zero.bregman = MatrixXd::Zero(16, 49);
    zero.estimate = Image(10, 10, 0.0);
    EXPECT_EQ(bdae::objective_gaussian(zero, Image(10, 10, 0.0), cfg), 0.0);
}

TEST(DenoiseGaussian, DeterministicAndFinite) {
    bdae::SolverConfig cfg;
    cfg.max_outer_iters = 4;
    const Image clean = bdae::shepp_logan(24);
    const Image noisy = bdae::add_gaussian_noise(clean, {bdae::NoiseSpec::Kind::gaussian, 25.0, 0.0, 3});
    const auto a = bdae::denoise_gaussian(noisy, cfg, &clean);
    const auto b = bdae::denoise_gaussian(noisy, cfg, &clean);
    EXPECT_EQ(a.image, b.image);
    EXPECT_EQ(a.report.cost_trajectory, b.report.cost_trajectory);
    EXPECT_EQ(a.report.method, "bdae");
    EXPECT_EQ(a.report.iterations_run, static_cast<int>(a.report.cost_trajectory.size()));
    EXPECT_EQ(a.report.psnr_trajectory.size(), a.report.cost_trajectory.size());
    EXPECT_TRUE(a.image.all_finite());
    EXPECT_GE(a.image.pixels().minCoeff(), 0.0);
    EXPECT_LE(a.image.pixels().maxCoeff(), 1.0);
}

TEST(DenoiseGaussian, ConstantImageIsNearFixedPoint) {
    const Image clean(32, 32, 0.5);
    const auto r = bdae::denoise_gaussian(clean, bdae::SolverConfig{});
    EXPECT_LE((r.image.pixels() - clean.pixels()).cwiseAbs().maxCoeff(), 0.02);
}

TEST(DenoiseGaussian, RejectsTinyImage) {
    EXPECT_THROW(bdae::denoise_gaussian(Image(5, 5, 0.1), bdae::SolverConfig{}),
                 bdae::DimensionError);
}

TEST(UpdateBregman, ResidualSmallAfterPhantomRun) {
    const bdae::SolverConfig cfg;
    const Image clean = bdae::shepp_logan(64);
    const Image noisy = bdae::add_gaussian_noise(clean, {bdae::NoiseSpec::Kind::gaussian, 25.0, 0.0, 7});
    bdae::AutoencoderState s = bdae::init_state(noisy, cfg);
    for (int k = 0; k < cfg.max_outer_iters; ++k) {
        bdae::PatchMatrix patches = bdae::extract_patches(s.estimate, cfg.patch);
        s.decoder = bdae::update_decoder(s, patches, cfg);
        s.encoder = bdae::update_encoder(s, patches, cfg);
        s.estimate = bdae::update_image_gaussian(s, noisy, cfg).image;
        patches = bdae::extract_patches(s.estimate, cfg.patch);
        s.codes = bdae::update_codes_ista(s, patches, cfg);
        s.bregman = bdae::update_bregman(s, patches, cfg);
    }
    const bdae::PatchMatrix p = bdae::extract_patches(s.estimate, cfg.patch);
    const MatrixXd residual = s.codes - fixture::phi(s.encoder * p.data, cfg);
    EXPECT_LT(residual.colwise().norm().maxCoeff(), 1e-2);
}
