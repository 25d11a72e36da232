#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tvlinf/field.hpp"

namespace tvlinf {

/// One denoising run: model choice, its parameters, exactly one input source
/// (a file or a synthetic generator) and the output location. Mirrors the CLI
/// flags one to one; the same keys work in a key=value config file.
struct ExperimentConfig {
    std::string model = "tvlinf";  // tv | tgv | tvlinf | tvlinf_sa

    double alpha = 1.0;
    double beta = 1.0;
    double mu = 0.0;   // 0 = solver default
    double tol = 1e-6;
    int max_iters = 5000;
    int bregman_outer = 1;

    // beta rule for tvlinf_sa
    double c = 30.0;
    double eps = 1e-4;
    double sigma = 2.0;
    int window = 13;
    std::string beta_ref;  // compute the rule from this image instead of the noisy data

    std::string in;         // .pgm or .csv input
    std::string synthetic;  // step | affine-step | hat | circle | pyramid
    int n = 256;
    double L = 1.0;
    double jump = 1.0;
    double lambda = 1.0;

    double noise = 0.0;  // Gaussian variance
    std::uint64_t seed = 0;
    std::string ref;  // reference image for metrics
    std::string out;
    bool strict = false;

    void validate() const;
};

/// Flat key=value file, '#' starts a comment. Keys are the CLI flag names.
/// Unknown keys are an error.
ExperimentConfig load_config_file(const std::string& path);
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

/// Exit codes: 0 success, 1 usage error, 2 numerical failure.
int run_denoise(const ExperimentConfig& cfg);
int run_verify(const ExperimentConfig& cfg);
int run_generate(const ExperimentConfig& cfg);
int run_compare(const std::vector<ExperimentConfig>& cfgs, const std::string& out_dir);

}  // namespace tvlinf
