// Command-line driver for the TVL-infinity denoising library.
//
//   tvlinf denoise  --synthetic circle --noise 0.01 --seed 7 --model tvlinf \
//                   --alpha 0.35 --beta 40 --out runs/circle
//   tvlinf verify   --synthetic affine-step --n 2000 --model tvlinf \
//                   --alpha 0.3 --beta 0.35
//   tvlinf generate --synthetic pyramid --n 96 --noise 0.01 --out pyramid.pgm
//   tvlinf compare  --out runs/table cfg_tv.cfg cfg_tgv.cfg cfg_tvlinf.cfg
//
// Flags may also be given in a key=value config file via --config; explicit
// flags win over file entries.

#include <CLI11.hpp>
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include "tvlinf/experiment.hpp"

namespace {

using tvlinf::ExperimentConfig;

// Pre-scan for --config so that its values become the defaults and explicit
// flags override them regardless of their position on the command line.
std::string find_config_arg(int argc, char** argv) {
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--config" && i + 1 < argc) return argv[i + 1];
        if (a.rfind("--config=", 0) == 0) return a.substr(9);
    }
    return {};
}

void add_experiment_options(CLI::App* cmd, ExperimentConfig& cfg, std::string& config_path) {
    cmd->add_option("--config", config_path, "key=value config file (flags win)");
    cmd->add_option("--model", cfg.model, "tv | tgv | tvlinf | tvlinf_sa");
    cmd->add_option("--alpha", cfg.alpha, "first regularisation weight");
    cmd->add_option("--beta", cfg.beta, "second regularisation weight");
    cmd->add_option("--mu", cfg.mu, "splitting penalty (0 = default alpha)");
    cmd->add_option("--tol", cfg.tol, "relative-change stopping tolerance");
    cmd->add_option("--max-iters", cfg.max_iters, "iteration cap");
    cmd->add_option("--bregman", cfg.bregman_outer, "outer Bregman iterations (1 = single solve)");
    cmd->add_option("--c", cfg.c, "beta rule numerator");
    cmd->add_option("--eps", cfg.eps, "beta rule floor");
    cmd->add_option("--sigma", cfg.sigma, "beta rule pre-smoothing sigma");
    cmd->add_option("--window", cfg.window, "beta rule smoothing window (odd)");
    cmd->add_option("--beta-ref", cfg.beta_ref, "image the beta rule reads gradients from");
    cmd->add_option("--in", cfg.in, "input image (.pgm) or 1D profile (.csv)");
    cmd->add_option("--synthetic", cfg.synthetic, "step | affine-step | hat | circle | pyramid");
    cmd->add_option("--n", cfg.n, "synthetic sample count / image side");
    cmd->add_option("--L", cfg.L, "half-domain length of 1D generators");
    cmd->add_option("--jump", cfg.jump, "step height of 1D generators");
    cmd->add_option("--lambda", cfg.lambda, "slope of the affine-step generator");
    cmd->add_option("--noise", cfg.noise, "Gaussian noise variance");
    cmd->add_option("--seed", cfg.seed, "noise seed");
    cmd->add_option("--ref", cfg.ref, "reference image for metrics");
    cmd->add_option("--out", cfg.out, "output directory (denoise) or file (generate)");
    cmd->add_flag("--strict", cfg.strict, "exit 2 when the solver does not converge");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"TVL-infinity image denoising"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    std::string config_path;
    try {
        const std::string pre = find_config_arg(argc, argv);
        if (!pre.empty()) cfg = tvlinf::load_config_file(pre);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    CLI::App* denoise = app.add_subcommand("denoise", "run one denoising experiment");
    CLI::App* verify = app.add_subcommand("verify", "solve a 1D problem and check its optimality certificate");
    CLI::App* generate = app.add_subcommand("generate", "write a synthetic test image or profile");
    CLI::App* compare = app.add_subcommand("compare", "run several configs on their inputs and tabulate metrics");

    add_experiment_options(denoise, cfg, config_path);
    add_experiment_options(verify, cfg, config_path);
    add_experiment_options(generate, cfg, config_path);

    std::vector<std::string> compare_files;
    std::string compare_out;
    compare->add_option("configs", compare_files, "config files, one per run")->required();
    compare->add_option("--out", compare_out, "output directory")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (denoise->parsed()) return tvlinf::run_denoise(cfg);
        if (verify->parsed()) return tvlinf::run_verify(cfg);
        if (generate->parsed()) return tvlinf::run_generate(cfg);
        std::vector<ExperimentConfig> cfgs;
        cfgs.reserve(compare_files.size());
        for (const auto& path : compare_files) cfgs.push_back(tvlinf::load_config_file(path));
        return tvlinf::run_compare(cfgs, compare_out);
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "usage error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
}
