// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_CAPACITY_HPP
#define MICAP_CAPACITY_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "micap/channel.hpp"
#include "micap/icc.hpp"
#include "micap/toeplitz.hpp"

namespace micap {

/// Per-realization capacities of one Monte Carlo run, in trial order.
struct CapacitySamples {
    std::vector<double> values;  // bps/Hz
    ChannelConfig config;
    std::string covariance_label;

    double mean() const;
    double stddev() const;          // sample standard deviation
    double standard_error() const;  // stddev / sqrt(trials)
};

enum class CovarianceKind { Iid, FixedCovariance, IccCovariance };

/// Transmit covariance selection for a run: none, a fixed matrix, or the
/// iteration matrix R(alpha) for a chosen alpha and variant.
struct CovarianceMode {
    CovarianceKind kind = CovarianceKind::Iid;
    double alpha = 0.0;
    IccVariant variant = IccVariant::AsPrinted;

    static CovarianceMode iid();
    static CovarianceMode fixed();
    static CovarianceMode icc(double alpha, IccVariant variant);

    /// Stable run label used in CSV cells and output file names:
    /// "iid", "correlated", or "icc_alpha<value>".
    std::string label() const;
};

/// log2 det(I + (gamma0 / N_t) H H^H).
double instantaneous_capacity(const ChannelRealization& h, double gamma0, std::size_t n_t);

/// Same determinant with the covariance in place of H H^H:
/// log2 det(I + (gamma0 / N_t) H_w Rt~ H_w^H), where Rt~ is r_t Hermitized
/// and clamped to PSD. For Hermitian PSD r_t the projection is a no-op.
double instantaneous_capacity_correlated(const ChannelRealization& hw, const ComplexMatrix& r_t,
                                         double gamma0, std::size_t n_t);

/// Expert path without the PSD projection: log2 |det(I + (gamma0 / N_t)
/// H_w r_t H_w^H)| through the LU determinant. Values may be produced from
/// an indefinite argument and are not guaranteed nonnegative.
double instantaneous_capacity_raw(const ChannelRealization& hw, const ComplexMatrix& r_t,
                                  double gamma0, std::size_t n_t);

/// Monte Carlo mean capacity: trials independent realizations drawn from
/// per-trial substreams of config.seed, recorded in trial order. The trial
/// loop runs under OpenMP when available; mean_capacity_serial is the
/// plain-loop reference producing bit-identical samples.
///
/// FixedCovariance uses fixed_covariance when given, else the dense source
/// of r_source; IccCovariance builds R(alpha) from r_source. With
/// raw_determinant set, covariance modes take the unprojected log2|det|
/// path.
CapacitySamples mean_capacity(const ChannelConfig& config, const CovarianceMode& mode,
                              const SplitPair* r_source = nullptr,
                              const ComplexMatrix* fixed_covariance = nullptr,
                              bool raw_determinant = false);
CapacitySamples mean_capacity_serial(const ChannelConfig& config, const CovarianceMode& mode,
                                     const SplitPair* r_source = nullptr,
                                     const ComplexMatrix* fixed_covariance = nullptr,
                                     bool raw_determinant = false);

struct AlphaSearchResult {
    double best_alpha = 0.0;
    std::vector<CapacitySamples> per_alpha;  // ordered as the input grid
};

/// Evaluates mean_capacity with IccCovariance(alpha) over the grid under
/// common random numbers (shared seed and substreams), returning the
/// argmax by mean with ties broken toward smaller alpha.
AlphaSearchResult max_mean_capacity_over_alpha(const ChannelConfig& config, const SplitPair& pair,
                                               std::span<const double> alphas, IccVariant variant,
                                               bool raw_determinant = false);

/// mean(improved) - mean(base). Throws comparison_error when dimensions or
/// SNR differ.
double capacity_gain(const CapacitySamples& base, const CapacitySamples& improved);

struct EmpiricalCdf {
    std::vector<std::pair<double, double>> points;  // (capacity, probability)
};

/// Sorted samples with probability (i+1)/n at the i-th order statistic.
EmpiricalCdf empirical_cdf(const CapacitySamples& samples);

struct SnrSweepRow {
    double snr_db = 0.0;
    std::string mode;
    bool has_alpha = false;
    double alpha = 0.0;
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t trials = 0;
    std::uint64_t seed = 0;
};

/// One row per (snr, mode), common random numbers across modes and SNRs.
/// Modes needing a covariance require pair.
std::vector<SnrSweepRow> snr_sweep(const ChannelConfig& config_template,
                                   std::span<const double> snrs_db,
                                   std::span<const CovarianceMode> modes, const SplitPair* pair,
                                   bool raw_determinant = false);

} // namespace micap

#endif
