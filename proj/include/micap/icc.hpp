// SPDX-License-Identifier: Apache-2.0

#ifndef MICAP_ICC_HPP
#define MICAP_ICC_HPP

#include <array>
#include <span>
#include <string_view>
#include <vector>

#include "micap/toeplitz.hpp"

namespace micap {

/// Which four-factor product defines the iteration matrix R(alpha).
/// AsPrinted ends in (alpha I + B); CscsCorrected ends in (alpha I - B),
/// the form used by circulant/skew-circulant splitting iterations.
enum class IccVariant { AsPrinted, CscsCorrected };

std::string_view variant_name(IccVariant variant);         // "as-printed" | "cscs"
IccVariant variant_from_name(std::string_view name);       // throws config_error

/// Closed-form eigenvalues of the splitting terms: lambda for the circulant
/// factor, mu for the skew-circulant one.
struct SpectrumPair {
    std::vector<cxd> lambda;
    std::vector<cxd> mu;
};

/// One row of the alpha sweep.
struct IccRecord {
    double alpha = 0.0;
    double sigma = 0.0;                 // bound from the splitting spectra
    double rho = 0.0;                   // measured spectral radius of R(alpha)
    IccVariant variant = IccVariant::AsPrinted;
    double distance_to_identity = 0.0;  // max-norm of R(alpha) - I
    bool converged = false;             // distance_to_identity <= eps_conv
    double max_offdiag = 0.0;           // residual correlation after Hermitizing R(alpha)
    bool rho_power_converged = false;   // false when rho came from the Gelfand fallback
};

/// Default alpha grid for the sweep report.
inline constexpr std::array<double, 13> kDefaultAlphaGrid = {
    5, 10, 20, 30, 50, 100, 200, 600, 1000, 20000, 40000, 50000, 60000};

inline constexpr double kDefaultEpsConv = 1e-3;

/// lambda_k = sum_j a_j e^{+2 pi i j k / N}.
std::vector<cxd> circulant_spectrum(const CirculantMatrix& a);

/// mu_k = sum_j b_j e^{+i pi j (2k+1) / N}.
std::vector<cxd> skew_circulant_spectrum(const SkewCirculantMatrix& b);

SpectrumPair split_spectra(const SplitPair& pair);

/// max_j |alpha - lambda_j| / |alpha + lambda_j| times the same maximum over
/// mu. Throws pole_error when a denominator is within 1e-12 of zero.
double sigma_bound(const SpectrumPair& spectra, double alpha);

/// Spectral radius of the AsPrinted product in closed form: the trailing
/// (alpha I + B) factor is a similarity transform, so only the circulant
/// ratios survive, rho = max_j |alpha - lambda_j| / |alpha + lambda_j|.
double rho_closed_form_as_printed(const SpectrumPair& spectra, double alpha);

/// The four-factor product
///   (alpha I + B)^-1 (alpha I - A) (alpha I + A)^-1 (alpha I +/- B)
/// with the trailing sign chosen by the variant.
ComplexMatrix iteration_matrix(const SplitPair& pair, double alpha, IccVariant variant);

/// One record per alpha, ordered as the input grid. Runs the grid entries
/// in parallel when OpenMP is enabled; icc_sweep_serial is the plain-loop
/// reference producing identical records.
std::vector<IccRecord> icc_sweep(const SplitPair& pair, std::span<const double> alphas,
                                 IccVariant variant, double eps_conv);
std::vector<IccRecord> icc_sweep_serial(const SplitPair& pair, std::span<const double> alphas,
                                        IccVariant variant, double eps_conv);

/// CSV serialization with header alpha,sigma,rho,variant,dist_identity,converged
/// (decimal notation, 6 significant digits).
std::string icc_records_to_csv(std::span<const IccRecord> records);

} // namespace micap

#endif
