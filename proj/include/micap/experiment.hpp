// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_EXPERIMENT_HPP
#define MICAP_EXPERIMENT_HPP

#include <string>
#include <utility>
#include <vector>

#include "micap/capacity.hpp"
#include "micap/channel.hpp"
#include "micap/icc.hpp"
#include "micap/toeplitz.hpp"

namespace micap {

struct IccSettings {
    IccVariant variant = IccVariant::AsPrinted;
    std::vector<double> alpha_grid;
    double eps_conv = kDefaultEpsConv;
};

struct CapacitySettings {
    std::vector<double> alpha_grid;   // alphas compared against the baselines
    std::vector<double> snr_grid_db;  // sweep for the mean-versus-SNR table
    std::size_t cdf_trials = 1000;
    bool raw_determinant = false;
};

/// Full experiment description: the covariance under study, Monte Carlo
/// settings, the alpha sweeps, and where and how outputs are written.
struct ExperimentConfig {
    explicit ExperimentConfig(ToeplitzCovariance cov) : covariance(std::move(cov)) {}

    ToeplitzCovariance covariance;
    ChannelConfig channel;
    IccSettings icc;
    CapacitySettings capacity;
    std::string output_dir = "out";
    bool format_csv = true;
    bool format_svg = true;
};

/// Built-in experiment: the published order-4 covariance, 4x4 channel at
/// 30 dB, 10^4 trials, the published alpha grids.
ExperimentConfig default_config();

/// default_config overlaid with the JSON document at path. Every key is
/// optional; the covariance accepts coefficient form, a dense matrix, or
/// {"file": <path>} pointing at a coefficient document.
ExperimentConfig load_config(const std::string& path);

/// Writes split.json (coefficients, dense factors, reconstruction
/// residual) and prints the residual.
void cmd_split(const ExperimentConfig& config);

/// Writes table2.csv with both variants plus table2_diff.csv against the
/// embedded published rows, and prints the side-by-side diff.
void cmd_icc_table(const ExperimentConfig& config);

/// Writes cdf_<mode>.csv per covariance mode, snr_sweep.csv, gains.csv,
/// and the SVG plots when enabled.
void cmd_capacity(const ExperimentConfig& config);

/// split, icc-table, and capacity into one output directory.
void cmd_reproduce_all(const ExperimentConfig& config);

} // namespace micap

#endif
