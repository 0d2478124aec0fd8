// SPDX-License-Identifier: Apache-2.0

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "micap/errors.hpp"
#include "micap/experiment.hpp"

namespace {

/// Flag values collected before the experiment config is materialized.
/// Flags override the config file, which overrides the built-in defaults.
struct CliOverrides {
    std::string config_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> trials;
    std::vector<double> alphas;
    std::optional<std::string> variant;
    std::optional<std::string> out_dir;
    std::vector<std::string> formats;
    std::optional<std::size_t> cdf_trials;
    std::optional<double> eps_conv;
    bool raw_determinant = false;
};

void add_common_flags(CLI::App* cmd, CliOverrides& o) {
    cmd->add_option("--config", o.config_path, "JSON experiment config file");
    cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per run");
    cmd->add_option("--alpha", o.alphas, "comma-separated alpha grid")->delimiter(',');
    cmd->add_option("--variant", o.variant, "iteration matrix variant")
        ->check(CLI::IsMember({"as-printed", "cscs"}));
    cmd->add_option("--out", o.out_dir, "output directory");
    cmd->add_option("--format", o.formats, "output formats, subset of csv,svg")->delimiter(',');
    cmd->add_option("--cdf-trials", o.cdf_trials, "trials per CDF curve");
    cmd->add_option("--eps-conv", o.eps_conv, "identity-convergence threshold");
    cmd->add_flag("--raw-determinant", o.raw_determinant,
                  "expert path: log2|det| without the PSD projection");
}

micap::ExperimentConfig build_config(const CliOverrides& o, bool alpha_to_icc,
                                     bool alpha_to_capacity) {
    micap::ExperimentConfig config =
        o.config_path.empty() ? micap::default_config() : micap::load_config(o.config_path);
    if (o.seed) config.channel.seed = *o.seed;
    if (o.trials) {
        if (*o.trials == 0) throw micap::config_error("--trials must be positive");
        config.channel.trials = *o.trials;
    }
    if (!o.alphas.empty()) {
        for (double alpha : o.alphas)
            if (!(alpha > 0.0)) throw micap::config_error("--alpha entries must be positive");
        if (alpha_to_icc) config.icc.alpha_grid = o.alphas;
        if (alpha_to_capacity) config.capacity.alpha_grid = o.alphas;
    }
    if (o.variant) config.icc.variant = micap::variant_from_name(*o.variant);
    if (o.out_dir) config.output_dir = *o.out_dir;
    if (!o.formats.empty()) {
        config.format_csv = false;
        config.format_svg = false;
        for (const std::string& name : o.formats) {
            if (name == "csv")
                config.format_csv = true;
            else if (name == "svg")
                config.format_svg = true;
            else
                throw micap::config_error("--format: unknown format " + name);
        }
    }
    if (o.cdf_trials) {
        if (*o.cdf_trials == 0) throw micap::config_error("--cdf-trials must be positive");
        config.capacity.cdf_trials = *o.cdf_trials;
    }
    if (o.eps_conv) {
        if (!(*o.eps_conv > 0.0)) throw micap::config_error("--eps-conv must be positive");
        config.icc.eps_conv = *o.eps_conv;
    }
    if (o.raw_determinant) config.capacity.raw_determinant = true;
    micap::validate_config(config.channel);
    return config;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Toeplitz covariance splitting and MIMO mean-capacity experiments"};
    app.require_subcommand(1);
    CliOverrides o;

    CLI::App* split_cmd =
        app.add_subcommand("split", "split the covariance into circulant plus skew-circulant");
    CLI::App* icc_cmd =
        app.add_subcommand("icc-table", "sweep alpha and tabulate sigma, rho, and convergence");
    CLI::App* capacity_cmd =
        app.add_subcommand("capacity", "Monte Carlo mean capacity, CDFs, SNR sweep, and gains");
    CLI::App* all_cmd =
        app.add_subcommand("reproduce-all", "run split, icc-table, and capacity together");
    for (CLI::App* cmd : {split_cmd, icc_cmd, capacity_cmd, all_cmd}) add_common_flags(cmd, o);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (split_cmd->parsed())
            micap::cmd_split(build_config(o, false, false));
        else if (icc_cmd->parsed())
            micap::cmd_icc_table(build_config(o, true, false));
        else if (capacity_cmd->parsed())
            micap::cmd_capacity(build_config(o, false, true));
        else
            micap::cmd_reproduce_all(build_config(o, true, true));
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
