// SPDX-License-Identifier: Apache-2.0

#include "micap/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "micap/csv.hpp"
#include "micap/errors.hpp"
#include "micap/json_io.hpp"
#include "micap/reference.hpp"
#include "micap/svg.hpp"

namespace micap {

namespace {

using nlohmann::json;

constexpr const char* kBool[] = {"false", "true"};

double to_real(const json& j, const char* what) {
    if (!j.is_number()) throw config_error(std::string("config: ") + what + " must be a number");
    return j.get<double>();
}

std::size_t to_count(const json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::size_t>();
    if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::size_t>();
    throw config_error(std::string("config: ") + what + " must be a nonnegative integer");
}

std::uint64_t to_seed(const json& j, const char* what) {
    if (j.is_number_unsigned()) return j.get<std::uint64_t>();
    if (j.is_number_integer() && j.get<long long>() >= 0) return j.get<std::uint64_t>();
    throw config_error(std::string("config: ") + what + " must be a nonnegative integer");
}

std::vector<double> to_positive_grid(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw config_error(std::string("config: ") + what + " must be a nonempty array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& entry : j) {
        const double v = to_real(entry, what);
        if (!(v > 0.0) || !std::isfinite(v))
            throw config_error(std::string("config: ") + what + " entries must be positive");
        out.push_back(v);
    }
    return out;
}

std::vector<double> to_real_grid(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw config_error(std::string("config: ") + what + " must be a nonempty array");
    std::vector<double> out;
    out.reserve(j.size());
    for (const json& entry : j) {
        const double v = to_real(entry, what);
        if (!std::isfinite(v))
            throw config_error(std::string("config: ") + what + " entries must be finite");
        out.push_back(v);
    }
    return out;
}

ToeplitzCovariance covariance_from_json(const json& j, const std::filesystem::path& base_dir) {
    if (!j.is_object()) throw config_error("config: covariance must be a JSON object");
    if (j.contains("file")) {
        if (!j.at("file").is_string())
            throw config_error("config: covariance.file must be a path string");
        std::filesystem::path path(j.at("file").get<std::string>());
        if (path.is_relative()) path = base_dir / path;
        const json doc = parse_json_text(read_text_file(path.string()),
                                         "covariance file " + path.string());
        return toeplitz_from_json(doc);
    }
    if (j.contains("dense"))
        return toeplitz_from_dense(matrix_from_json(j.at("dense")), j.value("hermitian", false));
    return toeplitz_from_json(j);
}

std::string metadata_header(const ExperimentConfig& config, const std::string& command) {
    std::string head;
    head += "# micap " + command + "\n";
    head += "# seed " + std::to_string(config.channel.seed) + "\n";
    head += "# trials " + std::to_string(config.channel.trials) + "\n";
    head += "# n_t " + std::to_string(config.channel.n_t) + " n_r " +
            std::to_string(config.channel.n_r) + "\n";
    head += "# snr_db " + format_sig(config.channel.snr_db) + "\n";
    return head;
}

void write_output(const ExperimentConfig& config, const std::string& name,
                  const std::string& content) {
    const auto path = std::filesystem::path(config.output_dir) / name;
    write_text_file(path.string(), content);
    std::cout << "wrote " << path.string() << "\n";
}

/// Standard error of the mean of per-trial differences between two coupled
/// runs.
double coupled_gain_stderr(const CapacitySamples& base, const CapacitySamples& improved) {
    const std::size_t n = base.values.size();
    if (n < 2 || improved.values.size() != n) return 0.0;
    double mean = 0.0;
    for (std::size_t t = 0; t < n; ++t) mean += improved.values[t] - base.values[t];
    mean /= double(n);
    double ss = 0.0;
    for (std::size_t t = 0; t < n; ++t) {
        const double d = improved.values[t] - base.values[t] - mean;
        ss += d * d;
    }
    return std::sqrt(ss / double(n - 1)) / std::sqrt(double(n));
}

} // namespace

ExperimentConfig default_config() {
    const PublishedReference& ref = published_reference();
    ExperimentConfig config(toeplitz_from_dense(ref.example_covariance, false));
    config.channel = ChannelConfig{};
    config.icc.variant = IccVariant::AsPrinted;
    config.icc.alpha_grid.assign(kDefaultAlphaGrid.begin(), kDefaultAlphaGrid.end());
    config.icc.eps_conv = kDefaultEpsConv;
    for (const ReferenceGain& g : ref.claims_gains) config.capacity.alpha_grid.push_back(g.alpha);
    config.capacity.snr_grid_db = {0, 5, 10, 15, 20, 25, 30};
    config.capacity.cdf_trials = 1000;
    config.capacity.raw_determinant = false;
    config.output_dir = "out";
    config.format_csv = true;
    config.format_svg = true;
    return config;
}

ExperimentConfig load_config(const std::string& path) {
    ExperimentConfig config = default_config();
    const json root = parse_json_text(read_text_file(path), "config " + path);
    if (!root.is_object()) throw config_error("config " + path + ": must be a JSON object");
    const std::filesystem::path base_dir = std::filesystem::path(path).parent_path();

    if (root.contains("covariance"))
        config.covariance = covariance_from_json(root.at("covariance"), base_dir);

    if (root.contains("channel")) {
        const json& channel = root.at("channel");
        if (!channel.is_object()) throw config_error("config: channel must be a JSON object");
        if (channel.contains("n_t")) config.channel.n_t = to_count(channel.at("n_t"), "channel.n_t");
        if (channel.contains("n_r")) config.channel.n_r = to_count(channel.at("n_r"), "channel.n_r");
        if (channel.contains("snr_db"))
            config.channel.snr_db = to_real(channel.at("snr_db"), "channel.snr_db");
        if (channel.contains("trials"))
            config.channel.trials = to_count(channel.at("trials"), "channel.trials");
        if (channel.contains("seed")) config.channel.seed = to_seed(channel.at("seed"), "channel.seed");
    }

    if (root.contains("icc")) {
        const json& icc = root.at("icc");
        if (!icc.is_object()) throw config_error("config: icc must be a JSON object");
        if (icc.contains("variant")) {
            if (!icc.at("variant").is_string())
                throw config_error("config: icc.variant must be a string");
            config.icc.variant = variant_from_name(icc.at("variant").get<std::string>());
        }
        if (icc.contains("alpha_grid"))
            config.icc.alpha_grid = to_positive_grid(icc.at("alpha_grid"), "icc.alpha_grid");
        if (icc.contains("eps_conv")) {
            config.icc.eps_conv = to_real(icc.at("eps_conv"), "icc.eps_conv");
            if (!(config.icc.eps_conv > 0.0))
                throw config_error("config: icc.eps_conv must be positive");
        }
    }

    if (root.contains("capacity")) {
        const json& capacity = root.at("capacity");
        if (!capacity.is_object()) throw config_error("config: capacity must be a JSON object");
        if (capacity.contains("alpha_grid"))
            config.capacity.alpha_grid =
                to_positive_grid(capacity.at("alpha_grid"), "capacity.alpha_grid");
        if (capacity.contains("snr_grid_db"))
            config.capacity.snr_grid_db =
                to_real_grid(capacity.at("snr_grid_db"), "capacity.snr_grid_db");
        if (capacity.contains("cdf_trials")) {
            config.capacity.cdf_trials = to_count(capacity.at("cdf_trials"), "capacity.cdf_trials");
            if (config.capacity.cdf_trials == 0)
                throw config_error("config: capacity.cdf_trials must be positive");
        }
        if (capacity.contains("raw_determinant")) {
            if (!capacity.at("raw_determinant").is_boolean())
                throw config_error("config: capacity.raw_determinant must be a boolean");
            config.capacity.raw_determinant = capacity.at("raw_determinant").get<bool>();
        }
    }

    if (root.contains("output_dir")) {
        if (!root.at("output_dir").is_string())
            throw config_error("config: output_dir must be a string");
        config.output_dir = root.at("output_dir").get<std::string>();
    }

    if (root.contains("formats")) {
        const json& formats = root.at("formats");
        if (!formats.is_array() || formats.empty())
            throw config_error("config: formats must name csv and/or svg");
        config.format_csv = false;
        config.format_svg = false;
        for (const json& entry : formats) {
            if (!entry.is_string()) throw config_error("config: formats entries must be strings");
            const std::string name = entry.get<std::string>();
            if (name == "csv")
                config.format_csv = true;
            else if (name == "svg")
                config.format_svg = true;
            else
                throw config_error("config: unknown format " + name);
        }
    }

    validate_config(config.channel);
    return config;
}

void cmd_split(const ExperimentConfig& config) {
    const SplitPair pair = split(config.covariance);
    const double residual =
        max_abs_diff(reconstruct(pair), dense_of_toeplitz(config.covariance));

    json doc;
    doc["n"] = config.covariance.n;
    doc["a"] = complex_vector_to_json(pair.a.first_row);
    doc["b"] = complex_vector_to_json(pair.b.first_row);
    doc["a_dense"] = matrix_to_json(dense_of_circulant(pair.a));
    doc["b_dense"] = matrix_to_json(dense_of_skew_circulant(pair.b));
    doc["source"] = toeplitz_to_json(config.covariance);
    doc["reconstruction_residual_max_abs"] = residual;
    write_output(config, "split.json", doc.dump(2) + "\n");
    std::cout << "reconstruction residual (max abs): " << format_sig(residual) << "\n";
}

void cmd_icc_table(const ExperimentConfig& config) {
    const SplitPair pair = split(config.covariance);
    const std::vector<IccRecord> as_printed =
        icc_sweep(pair, config.icc.alpha_grid, IccVariant::AsPrinted, config.icc.eps_conv);
    const std::vector<IccRecord> cscs =
        icc_sweep(pair, config.icc.alpha_grid, IccVariant::CscsCorrected, config.icc.eps_conv);

    std::string csv;
    csv += "# micap icc-table\n";
    csv += "# eps_conv " + format_sig(config.icc.eps_conv) + "\n";
    csv += "# dist_identity and converged refer to the as-printed variant\n";
    csv += "alpha,sigma,rho_as_printed,rho_cscs,dist_identity,converged\n";
    for (std::size_t i = 0; i < as_printed.size(); ++i) {
        csv += format_sig(as_printed[i].alpha) + ',' + format_sig(as_printed[i].sigma) + ',' +
               format_sig(as_printed[i].rho) + ',' + format_sig(cscs[i].rho) + ',' +
               format_sig(as_printed[i].distance_to_identity) + ',' +
               kBool[as_printed[i].converged] + '\n';
    }
    if (config.format_csv) write_output(config, "table2.csv", csv);

    const PublishedReference& ref = published_reference();
    std::string diff;
    diff += "# micap icc-table diff against the published rows\n";
    diff += "alpha,sigma,sigma_published,sigma_delta,rho_as_printed,rho_cscs,rho_published,"
            "rho_as_printed_delta,rho_cscs_delta\n";
    std::printf("%10s %12s %12s %14s %12s %12s\n", "alpha", "sigma", "sigma_pub", "rho_as_printed",
                "rho_cscs", "rho_pub");
    for (std::size_t i = 0; i < as_printed.size(); ++i) {
        const ReferenceBoundRow* published = nullptr;
        for (const ReferenceBoundRow& row : ref.bound_rows)
            if (row.alpha == as_printed[i].alpha) published = &row;
        if (!published) continue;
        diff += format_sig(as_printed[i].alpha) + ',' + format_sig(as_printed[i].sigma) + ',' +
                format_sig(published->sigma) + ',' +
                format_sig(as_printed[i].sigma - published->sigma) + ',' +
                format_sig(as_printed[i].rho) + ',' + format_sig(cscs[i].rho) + ',' +
                format_sig(published->rho) + ',' +
                format_sig(as_printed[i].rho - published->rho) + ',' +
                format_sig(cscs[i].rho - published->rho) + '\n';
        std::printf("%10s %12s %12s %14s %12s %12s\n", format_sig(as_printed[i].alpha).c_str(),
                    format_sig(as_printed[i].sigma).c_str(), format_sig(published->sigma).c_str(),
                    format_sig(as_printed[i].rho).c_str(), format_sig(cscs[i].rho).c_str(),
                    format_sig(published->rho).c_str());
    }
    if (config.format_csv) write_output(config, "table2_diff.csv", diff);
}

void cmd_capacity(const ExperimentConfig& config) {
    const SplitPair pair = split(config.covariance);
    const ChannelConfig& channel = config.channel;
    const bool raw = config.capacity.raw_determinant;
    const IccVariant variant = config.icc.variant;

    std::vector<CovarianceMode> modes;
    modes.push_back(CovarianceMode::iid());
    modes.push_back(CovarianceMode::fixed());
    for (double alpha : config.capacity.alpha_grid)
        modes.push_back(CovarianceMode::icc(alpha, variant));

    ChannelConfig cdf_config = channel;
    cdf_config.trials = config.capacity.cdf_trials;
    std::vector<PlotSeries> cdf_series;
    for (const CovarianceMode& mode : modes) {
        const CapacitySamples samples = mean_capacity(cdf_config, mode, &pair, nullptr, raw);
        const EmpiricalCdf cdf = empirical_cdf(samples);
        if (config.format_csv) {
            std::string csv;
            csv += "# micap capacity cdf\n";
            csv += "# mode " + mode.label() + "\n";
            csv += "# seed " + std::to_string(cdf_config.seed) + "\n";
            csv += "# trials " + std::to_string(cdf_config.trials) + "\n";
            csv += "# snr_db " + format_sig(cdf_config.snr_db) + "\n";
            csv += "capacity,probability\n";
            for (const auto& [capacity, probability] : cdf.points)
                csv += format_sig(capacity) + ',' + format_sig(probability) + '\n';
            write_output(config, "cdf_" + mode.label() + ".csv", csv);
        }
        cdf_series.push_back(PlotSeries{mode.label(), cdf.points});
    }
    if (config.format_svg)
        write_output(config, "fig1_cdf.svg",
                     line_plot_svg("Capacity CDF at " + format_sig(channel.snr_db) + " dB",
                                   "capacity (bps/Hz)", "P(C <= x)", cdf_series));

    const std::vector<SnrSweepRow> sweep =
        snr_sweep(channel, config.capacity.snr_grid_db, modes, &pair, raw);
    if (config.format_csv) {
        std::string csv = metadata_header(config, "capacity snr sweep");
        csv += "# variant " + std::string(variant_name(variant)) + "\n";
        csv += "snr_db,mode,alpha,mean,stderr,trials,seed\n";
        for (const SnrSweepRow& row : sweep) {
            csv += format_sig(row.snr_db) + ',' + row.mode + ',' +
                   (row.has_alpha ? format_sig(row.alpha) : std::string{}) + ',' +
                   format_sig(row.mean) + ',' + format_sig(row.standard_error) + ',' +
                   std::to_string(row.trials) + ',' + std::to_string(row.seed) + '\n';
        }
        write_output(config, "snr_sweep.csv", csv);
    }
    if (config.format_svg) {
        std::vector<PlotSeries> mean_series(modes.size());
        for (std::size_t m = 0; m < modes.size(); ++m) mean_series[m].name = modes[m].label();
        for (std::size_t i = 0; i < sweep.size(); ++i)
            mean_series[i % modes.size()].points.emplace_back(sweep[i].snr_db, sweep[i].mean);
        write_output(config, "fig2_mean_vs_snr.svg",
                     line_plot_svg("Mean capacity versus SNR", "SNR (dB)",
                                   "mean capacity (bps/Hz)", mean_series));
    }

    const CapacitySamples iid = mean_capacity(channel, CovarianceMode::iid(), &pair, nullptr, raw);
    const CapacitySamples correlated =
        mean_capacity(channel, CovarianceMode::fixed(), &pair, nullptr, raw);
    const double loss = iid.mean() - correlated.mean();

    const PublishedReference& ref = published_reference();
    const bool published_applicable = channel.snr_db == ref.claims_snr_db &&
                                      channel.n_t == ref.claims_n_t &&
                                      channel.n_r == ref.claims_n_r;
    std::cout << "mean capacity iid: " << format_sig(iid.mean())
              << "  correlated: " << format_sig(correlated.mean())
              << "  loss: " << format_sig(loss);
    if (published_applicable) std::cout << "  (published loss " << format_sig(ref.claims_loss_bps) << ")";
    std::cout << "\n";

    std::vector<double> correlated_mean_by_snr;
    correlated_mean_by_snr.reserve(config.capacity.snr_grid_db.size());
    for (double snr : config.capacity.snr_grid_db) {
        ChannelConfig at_snr = channel;
        at_snr.snr_db = snr;
        correlated_mean_by_snr.push_back(
            mean_capacity(at_snr, CovarianceMode::fixed(), &pair, nullptr, raw).mean());
    }

    std::string gains = metadata_header(config, "capacity gains over the correlated baseline");
    gains += "# gain at the configured snr_db; gain_snr_avg averages the per-snr gains over "
             "the sweep grid\n";
    if (published_applicable)
        gains += "# published loss iid - correlated: " + format_sig(ref.claims_loss_bps) + "\n";
    gains += "variant,alpha,gain,gain_stderr,gain_snr_avg,published,delta\n";
    for (IccVariant v : {IccVariant::AsPrinted, IccVariant::CscsCorrected}) {
        for (double alpha : config.capacity.alpha_grid) {
            const CovarianceMode mode = CovarianceMode::icc(alpha, v);
            const CapacitySamples samples = mean_capacity(channel, mode, &pair, nullptr, raw);
            const double gain = capacity_gain(correlated, samples);
            const double gain_stderr = coupled_gain_stderr(correlated, samples);

            double gain_snr_avg = 0.0;
            for (std::size_t i = 0; i < config.capacity.snr_grid_db.size(); ++i) {
                ChannelConfig at_snr = channel;
                at_snr.snr_db = config.capacity.snr_grid_db[i];
                gain_snr_avg += mean_capacity(at_snr, mode, &pair, nullptr, raw).mean() -
                                correlated_mean_by_snr[i];
            }
            gain_snr_avg /= double(config.capacity.snr_grid_db.size());

            const ReferenceGain* published = nullptr;
            if (published_applicable)
                for (const ReferenceGain& g : ref.claims_gains)
                    if (g.alpha == alpha) published = &g;

            gains += std::string(variant_name(v)) + ',' + format_sig(alpha) + ',' +
                     format_sig(gain) + ',' + format_sig(gain_stderr) + ',' +
                     format_sig(gain_snr_avg) + ',' +
                     (published ? format_sig(published->gain) : std::string{}) + ',' +
                     (published ? format_sig(gain - published->gain) : std::string{}) + '\n';
            std::cout << "gain " << variant_name(v) << " alpha " << format_sig(alpha) << ": "
                      << format_sig(gain);
            if (published)
                std::cout << " (published " << format_sig(published->gain) << ", delta "
                          << format_sig(gain - published->gain) << ")";
            std::cout << "\n";
        }
    }
    if (config.format_csv) write_output(config, "gains.csv", gains);
}

void cmd_reproduce_all(const ExperimentConfig& config) {
    cmd_split(config);
    cmd_icc_table(config);
    cmd_capacity(config);
}

} // namespace micap
