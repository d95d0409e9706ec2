#include "bdae_cli/cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <spdlog/spdlog.h>

#include "bdae/error.hpp"
#include "bdae/gaussian.hpp"
#include "bdae/impulse.hpp"
#include "bdae/metrics.hpp"
#include "bdae/noise.hpp"
#include "bdae/pgm.hpp"
#include "bdae/phantom.hpp"
#include "bdae/transform_learning.hpp"

namespace bdae::cli {

namespace fs = std::filesystem;

namespace {

constexpr const char* kCsvHeader =
    "image,method,noise_kind,noise_level,seed,psnr_noisy,psnr_denoised,iterations,wall_time_s";

// Solver flags are bound straight onto a SolverConfig; the two enum-valued
// ones go through strings first.
struct ConfigFlags {
    SolverConfig cfg;
    std::string activation = to_string(cfg.activation.kind);
    std::string bregman = to_string(cfg.bregman);

    void attach(CLI::App& app) {
        auto* group = app.add_option_group("Solver", "solver parameters");
        group->add_option("--lambda", cfg.lambda, "autoencoder reconstruction weight")
            ->capture_default_str();
        group->add_option("--mu", cfg.mu, "code sparsity weight (impulse runs default to 3)")
            ->capture_default_str();
        group->add_option("--gamma", cfg.gamma, "split-variable penalty")->capture_default_str();
        group->add_option("--hidden", cfg.hidden, "code length, 0 = 2 x patch_dim")
            ->capture_default_str();
        group->add_option("--max_outer_iters", cfg.max_outer_iters)->capture_default_str();
        group->add_option("--rel_tol", cfg.rel_tol, "relative cost change that stops the loop")
            ->capture_default_str();
        group->add_option("--ista_iters", cfg.ista_iters)->capture_default_str();
        group->add_option("--ridge_epsilon", cfg.ridge.epsilon)->capture_default_str();
        group->add_option("--patch_size", cfg.patch.patch_size)->capture_default_str();
        group->add_option("--stride", cfg.patch.stride)->capture_default_str();
        group->add_option("--activation", activation)
            ->check(CLI::IsMember({"identity", "tanh"}))
            ->capture_default_str();
        group->add_option("--clamp_margin", cfg.activation.clamp_margin)->capture_default_str();
        group->add_option("--cg_tol", cfg.cg_tol)->capture_default_str();
        group->add_option("--cg_maxit", cfg.cg_maxit)->capture_default_str();
        group->add_option("--bregman", bregman)
            ->check(CLI::IsMember({"standard", "literal"}))
            ->capture_default_str();
        group->add_option("--power_iters", cfg.power_iters)->capture_default_str();
        group->add_option("--power_tol", cfg.power_tol)->capture_default_str();
        group->add_option("--impulse_eps", cfg.impulse_eps)->capture_default_str();
        group->add_option("--tl_tau", cfg.transform.tau, "0 = ceil(0.1 x patch_dim)")
            ->capture_default_str();
        group->add_option("--tl_lambda_scale", cfg.transform.lambda_scale)->capture_default_str();
        group->add_option("--tl_coupling", cfg.transform.coupling)->capture_default_str();
        group->add_option("--tl_eps_reg", cfg.transform.eps_reg)->capture_default_str();
        group->add_flag("--verbose", cfg.verbose, "log one line per outer iteration");
    }

    // Final config for one run. Impulse runs of the autoencoder take the
    // impulse preset's mu unless --mu was given.
    SolverConfig resolve(const CLI::App& app, bool impulse) const {
        SolverConfig out = cfg;
        out.activation.kind = parse_activation_kind(activation);
        out.bregman = parse_bregman_update(bregman);
        if (impulse && app.count("--mu") == 0) {
            out.mu = SolverConfig::impulse_preset().mu;
        }
        return out;
    }
};

struct DenoiseArgs {
    std::string input;
    std::string output;
    std::string noise = "gaussian";
    std::optional<double> sigma;
    std::optional<double> fraction;
    std::uint64_t seed = 0;
    std::string method = "bdae";
    std::string clean;
    std::string report;
};

struct BenchmarkArgs {
    std::string images;
    std::vector<double> sigmas;
    std::vector<double> fractions;
    std::vector<std::string> methods{"bdae", "tl"};
    std::uint64_t seed = 0;
    std::string out;
    bool no_timing = false;
};

struct PhantomArgs {
    int size = 64;
    std::string output;
};

DenoiseResult run_method(const std::string& method, bool impulse, const Image& noisy,
                         const SolverConfig& cfg, const Image* clean) {
    if (method == "tl") {
        return tl_denoise(noisy, cfg, clean);
    }
    return impulse ? denoise_impulse(noisy, cfg, clean) : denoise_gaussian(noisy, cfg, clean);
}

void write_text(const std::string& path, const std::string& text) {
    std::ofstream os(path, std::ios::binary);
    os << text;
    if (!os) {
        throw std::runtime_error("cannot write " + path);
    }
}

int cmd_denoise(const DenoiseArgs& args, const CLI::App& app, const ConfigFlags& flags,
                std::ostream& out, std::ostream& err) {
    const bool impulse = args.noise == "impulse";
    SolverConfig cfg;
    try {
        cfg = flags.resolve(app, impulse);
        cfg.validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_flags;
    }
    if ((impulse && args.sigma) || (!impulse && args.fraction)) {
        err << "error: --sigma goes with --noise gaussian, --fraction with --noise impulse\n";
        return exit_bad_flags;
    }

    Image input;
    std::optional<Image> clean;
    try {
        input = read_image(args.input);
        if (!args.clean.empty()) {
            clean = read_image(args.clean);
            require_same_shape(*clean, input, "--clean");
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_unreadable_image;
    }

    Image noisy = input;
    std::string noise_desc;
    if (args.sigma || args.fraction) {
        NoiseSpec spec;
        spec.kind = impulse ? NoiseSpec::Kind::salt_pepper : NoiseSpec::Kind::gaussian;
        spec.sigma = args.sigma.value_or(0.0);
        spec.fraction = args.fraction.value_or(0.0);
        spec.seed = args.seed;
        noisy = add_noise(input, spec);
        noise_desc = spec.describe();
    } else {
        noise_desc = args.noise + " (input already noisy)";
    }

    // Without --clean but with injected noise, the input itself is the reference.
    const Image* reference = clean ? &*clean : (args.sigma || args.fraction ? &input : nullptr);

    DenoiseResult result;
    try {
        result = run_method(args.method, impulse, noisy, cfg, reference);
    } catch (const std::exception& e) {
        err << "error: solver failed: " << e.what() << "\n";
        return exit_solver_failure;
    }
    result.report.noise = noise_desc;
    if (reference != nullptr) {
        result.report.psnr_denoised = psnr(*reference, result.image);
    }

    try {
        write_image(result.image, args.output);
        if (!args.report.empty()) {
            write_text(args.report, report_to_json(result.report, cfg).dump(2) + "\n");
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_unreadable_image;
    }

    if (clean) {
        out << fmt::format("psnr_noisy={:.2f} dB psnr_denoised={:.2f} dB iterations={}\n",
                           result.report.psnr_noisy, result.report.psnr_denoised,
                           result.report.iterations_run);
    }
    return exit_ok;
}

std::vector<fs::path> list_images(const fs::path& where) {
    std::vector<fs::path> files;
    if (fs::is_regular_file(where)) {
        files.push_back(where);
    } else if (fs::is_directory(where)) {
        for (const auto& entry : fs::directory_iterator(where)) {
            if (entry.is_regular_file() && entry.path().extension() == ".pgm") {
                files.push_back(entry.path());
            }
        }
    }
    std::sort(files.begin(), files.end());
    return files;
}

int cmd_benchmark(const BenchmarkArgs& args, const CLI::App& app, const ConfigFlags& flags,
                  std::ostream& out, std::ostream& err) {
    for (const auto& m : args.methods) {
        if (m != "bdae" && m != "tl") {
            err << "error: unknown method '" << m << "' (expected bdae or tl)\n";
            return exit_bad_flags;
        }
    }
    if (args.sigmas.empty() && args.fractions.empty()) {
        err << "error: give at least one of --sigmas or --fractions\n";
        return exit_bad_flags;
    }
    try {
        flags.resolve(app, false).validate();
        flags.resolve(app, true).validate();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_bad_flags;
    }

    std::vector<NoiseSpec> noises;
    for (double s : args.sigmas) {
        noises.push_back(NoiseSpec{NoiseSpec::Kind::gaussian, s, 0.0, args.seed});
    }
    for (double f : args.fractions) {
        noises.push_back(NoiseSpec{NoiseSpec::Kind::salt_pepper, 0.0, f, args.seed});
    }

    const auto files = list_images(args.images);
    if (files.empty()) {
        err << "error: no .pgm images found at " << args.images << "\n";
        return exit_unreadable_image;
    }

    std::ostringstream csv;
    csv << kCsvHeader << "\n";
    int readable = 0;
    int rows = 0;
    int failures = 0;
    for (const auto& file : files) {
        Image clean;
        try {
            clean = read_image(file);
        } catch (const std::exception& e) {
            spdlog::warn("skipping {}: {}", file.string(), e.what());
            continue;
        }
        ++readable;
        for (const auto& spec : noises) {
            const Image noisy = add_noise(clean, spec);
            const bool impulse = spec.kind == NoiseSpec::Kind::salt_pepper;
            for (const auto& method : args.methods) {
                const SolverConfig cfg = flags.resolve(app, impulse);
                DenoiseResult result;
                try {
                    result = run_method(method, impulse, noisy, cfg, &clean);
                } catch (const std::exception& e) {
                    spdlog::warn("{} {} {}: solver failed: {}", file.filename().string(), method,
                                 spec.describe(), e.what());
                    ++failures;
                    continue;
                }
                const double timing = args.no_timing ? 0.0 : result.report.wall_time;
                csv << fmt::format("{},{},{},{:g},{},{:.4f},{:.4f},{},{:.3f}\n",
                                   file.filename().string(), method, to_string(spec.kind),
                                   spec.level(), spec.seed, psnr(clean, noisy),
                                   psnr(clean, result.image), result.report.iterations_run,
                                   timing);
                ++rows;
            }
        }
    }
    if (readable == 0) {
        err << "error: none of the images could be read\n";
        return exit_unreadable_image;
    }

    try {
        if (args.out.empty()) {
            out << csv.str();
        } else {
            write_text(args.out, csv.str());
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_unreadable_image;
    }
    return rows == 0 && failures > 0 ? exit_solver_failure : exit_ok;
}

int cmd_phantom(const PhantomArgs& args, std::ostream& err) {
    if (args.size < 8) {
        err << "error: --size must be at least 8\n";
        return exit_bad_flags;
    }
    try {
        write_image(shepp_logan(args.size), args.output);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_unreadable_image;
    }
    return exit_ok;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Blind denoising with a sparse autoencoder learned from the noisy image", "bdae"};
    app.require_subcommand(1);
    app.failure_message(CLI::FailureMessage::help);

    DenoiseArgs dn;
    ConfigFlags dn_flags;
    auto* denoise = app.add_subcommand("denoise", "denoise one image");
    denoise->add_option("--input", dn.input, "input PGM")->required();
    denoise->add_option("--output", dn.output, "denoised PGM")->required();
    denoise->add_option("--noise", dn.noise, "noise model")
        ->check(CLI::IsMember({"gaussian", "impulse"}))
        ->capture_default_str();
    denoise->add_option("--sigma", dn.sigma, "inject Gaussian noise, 0-255 scale")
        ->check(CLI::NonNegativeNumber);
    denoise->add_option("--fraction", dn.fraction, "inject salt-and-pepper noise")
        ->check(CLI::Range(0.0, 1.0));
    denoise->add_option("--seed", dn.seed, "noise seed")->capture_default_str();
    denoise->add_option("--method", dn.method)
        ->check(CLI::IsMember({"bdae", "tl"}))
        ->capture_default_str();
    denoise->add_option("--clean", dn.clean, "clean reference for PSNR");
    denoise->add_option("--report", dn.report, "JSON report path");
    dn_flags.attach(*denoise);

    BenchmarkArgs bm;
    ConfigFlags bm_flags;
    auto* benchmark = app.add_subcommand("benchmark", "PSNR table over images x noise x methods");
    benchmark->add_option("--images", bm.images, "directory of clean PGMs (or one file)")
        ->required();
    benchmark->add_option("--sigmas", bm.sigmas, "Gaussian levels, 0-255 scale")
        ->delimiter(',');
    benchmark->add_option("--fractions", bm.fractions, "salt-and-pepper fractions")
        ->delimiter(',');
    benchmark->add_option("--methods", bm.methods)->delimiter(',')->capture_default_str();
    benchmark->add_option("--seed", bm.seed)->capture_default_str();
    benchmark->add_option("--out", bm.out, "CSV path, stdout if omitted");
    benchmark->add_flag("--no-timing", bm.no_timing, "write 0 for wall time so reruns are byte-identical");
    bm_flags.attach(*benchmark);

    PhantomArgs ph;
    auto* phantom = app.add_subcommand("phantom", "write a Shepp-Logan phantom");
    phantom->add_option("--size", ph.size)->capture_default_str();
    phantom->add_option("--output", ph.output)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_bad_flags;
    }

    if (*denoise) {
        return cmd_denoise(dn, *denoise, dn_flags, out, err);
    }
    if (*benchmark) {
        return cmd_benchmark(bm, *benchmark, bm_flags, out, err);
    }
    return cmd_phantom(ph, err);
}

}  // namespace bdae::cli
