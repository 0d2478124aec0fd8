// SPDX-License-Identifier: Apache-2.0

#include "micap/capacity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include "micap/csv.hpp"
#include "micap/linalg.hpp"

namespace micap {

namespace {

/// Hermitian square root of the Hermitized, PSD-clamped covariance.
/// Negative eigenvalues are zeroed; strictly PSD inputs pass through the
/// plain eigendecomposition square root.
ComplexMatrix clamped_sqrt(const ComplexMatrix& r) {
    const ComplexMatrix sym = hermitize(r);
    const HermitianEig eig = hermitian_eig(sym);
    const std::size_t n = sym.rows();
    ComplexMatrix scaled(n, n);  // V diag(sqrt(max(lambda, 0)))
    for (std::size_t j = 0; j < n; ++j) {
        const double root = eig.values[j] > 0.0 ? std::sqrt(eig.values[j]) : 0.0;
        for (std::size_t i = 0; i < n; ++i) scaled(i, j) = eig.vectors(i, j) * root;
    }
    return hermitize(mat_mul(scaled, conj_transpose(eig.vectors)));
}

struct ShapingPlan {
    bool multiply = false;           // right-multiply H_w by sqrt_shaper
    ComplexMatrix sqrt_shaper{1, 1};
    bool raw = false;                // unprojected log2|det| path
    ComplexMatrix raw_covariance{1, 1};
};

ComplexMatrix resolve_covariance(const CovarianceMode& mode, const SplitPair* r_source,
                                 const ComplexMatrix* fixed_covariance, std::size_t n_t) {
    ComplexMatrix cov(1, 1);
    if (mode.kind == CovarianceKind::FixedCovariance) {
        if (fixed_covariance)
            cov = *fixed_covariance;
        else if (r_source)
            cov = dense_of_toeplitz(r_source->source);
        else
            throw config_error("mean_capacity: FixedCovariance needs a covariance source");
    } else {
        if (!r_source)
            throw config_error("mean_capacity: IccCovariance needs the split source");
        cov = iteration_matrix(*r_source, mode.alpha, mode.variant);
    }
    if (!cov.square() || cov.rows() != n_t)
        throw shape_error("mean_capacity: covariance must be N_t x N_t");
    return cov;
}

ShapingPlan make_plan(const CovarianceMode& mode, const SplitPair* r_source,
                      const ComplexMatrix* fixed_covariance, bool raw_determinant,
                      std::size_t n_t) {
    ShapingPlan plan;
    if (mode.kind == CovarianceKind::Iid) return plan;
    ComplexMatrix cov = resolve_covariance(mode, r_source, fixed_covariance, n_t);
    if (raw_determinant) {
        plan.raw = true;
        plan.raw_covariance = std::move(cov);
    } else {
        plan.multiply = true;
        plan.sqrt_shaper = clamped_sqrt(cov);  // factored once for all trials
    }
    return plan;
}

CapacitySamples run_trials(const ChannelConfig& config, const CovarianceMode& mode,
                           const SplitPair* r_source, const ComplexMatrix* fixed_covariance,
                           bool raw_determinant, bool parallel) {
    validate_config(config);
    const ShapingPlan plan = make_plan(mode, r_source, fixed_covariance, raw_determinant,
                                       config.n_t);
    const double gamma0 = snr_linear(config.snr_db);

    CapacitySamples out{std::vector<double>(config.trials), config, mode.label()};
    std::vector<std::exception_ptr> errors(config.trials);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(config.trials);

    auto trial_value = [&](std::uint64_t t) {
        RandomStream stream(config.seed, t);
        ChannelRealization hw = sample_hw(config.n_r, config.n_t, stream);
        if (plan.raw)
            return instantaneous_capacity_raw(hw, plan.raw_covariance, gamma0, config.n_t);
        if (plan.multiply) hw.h = mat_mul(hw.h, plan.sqrt_shaper);
        return instantaneous_capacity(hw, gamma0, config.n_t);
    };

    if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
        for (std::ptrdiff_t t = 0; t < count; ++t) {
            try {
                out.values[static_cast<std::size_t>(t)] = trial_value(std::uint64_t(t));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        }
    } else {
        for (std::ptrdiff_t t = 0; t < count; ++t) {
            try {
                out.values[static_cast<std::size_t>(t)] = trial_value(std::uint64_t(t));
            } catch (...) {
                errors[static_cast<std::size_t>(t)] = std::current_exception();
            }
        }
    }

    for (std::size_t t = 0; t < errors.size(); ++t) {
        if (!errors[t]) continue;
        try {
            std::rethrow_exception(errors[t]);
        } catch (const std::exception& e) {
            throw std::runtime_error("mean_capacity: trial " + std::to_string(t) + ": " + e.what());
        }
    }
    return out;
}

} // namespace

double CapacitySamples::mean() const {
    if (values.empty()) return 0.0;
    double total = 0.0;
    for (double v : values) total += v;
    return total / double(values.size());
}

double CapacitySamples::stddev() const {
    if (values.size() < 2) return 0.0;
    const double m = mean();
    double ss = 0.0;
    for (double v : values) ss += (v - m) * (v - m);
    return std::sqrt(ss / double(values.size() - 1));
}

double CapacitySamples::standard_error() const {
    if (values.empty()) return 0.0;
    return stddev() / std::sqrt(double(values.size()));
}

CovarianceMode CovarianceMode::iid() { return CovarianceMode{CovarianceKind::Iid, 0.0, {}}; }

CovarianceMode CovarianceMode::fixed() {
    return CovarianceMode{CovarianceKind::FixedCovariance, 0.0, {}};
}

CovarianceMode CovarianceMode::icc(double alpha, IccVariant variant) {
    return CovarianceMode{CovarianceKind::IccCovariance, alpha, variant};
}

std::string CovarianceMode::label() const {
    switch (kind) {
        case CovarianceKind::Iid: return "iid";
        case CovarianceKind::FixedCovariance: return "correlated";
        case CovarianceKind::IccCovariance: return "icc_alpha" + format_sig(alpha);
    }
    return "unknown";
}

double instantaneous_capacity(const ChannelRealization& h, double gamma0, std::size_t n_t) {
    if (!(gamma0 > 0.0)) throw config_error("instantaneous_capacity: gamma0 must be positive");
    if (n_t == 0) throw config_error("instantaneous_capacity: n_t must be positive");
    const std::size_t n_r = h.h.rows();
    const ComplexMatrix gram = mat_mul(h.h, conj_transpose(h.h));
    const double c = gamma0 / double(n_t);
    ComplexMatrix m(n_r, n_r);
    for (std::size_t i = 0; i < n_r; ++i)
        for (std::size_t j = 0; j < n_r; ++j)
            m(i, j) = c * gram(i, j) + (i == j ? cxd{1.0, 0.0} : cxd{});
    return log2_det_hermitian_pd(m);
}

double instantaneous_capacity_correlated(const ChannelRealization& hw, const ComplexMatrix& r_t,
                                         double gamma0, std::size_t n_t) {
    if (!(gamma0 > 0.0)) throw config_error("instantaneous_capacity: gamma0 must be positive");
    if (!r_t.square() || r_t.rows() != hw.h.cols())
        throw shape_error("instantaneous_capacity_correlated: covariance must be N_t x N_t");

    ComplexMatrix rt = hermitize(r_t);
    const HermitianEig eig = hermitian_eig(rt);
    if (!eig.values.empty() && eig.values.front() < 0.0) {
        // Clamp to the nearest PSD matrix so the determinant argument stays
        // I plus PSD.
        const std::size_t n = rt.rows();
        ComplexMatrix scaled(n, n);
        for (std::size_t j = 0; j < n; ++j) {
            const double lam = std::max(eig.values[j], 0.0);
            for (std::size_t i = 0; i < n; ++i) scaled(i, j) = eig.vectors(i, j) * lam;
        }
        rt = hermitize(mat_mul(scaled, conj_transpose(eig.vectors)));
    }

    const std::size_t n_r = hw.h.rows();
    const ComplexMatrix product = hermitize(
        mat_mul(mat_mul(hw.h, rt), conj_transpose(hw.h)));
    const double c = gamma0 / double(n_t);
    ComplexMatrix m(n_r, n_r);
    for (std::size_t i = 0; i < n_r; ++i)
        for (std::size_t j = 0; j < n_r; ++j)
            m(i, j) = c * product(i, j) + (i == j ? cxd{1.0, 0.0} : cxd{});
    return log2_det_hermitian_pd(m);
}

double instantaneous_capacity_raw(const ChannelRealization& hw, const ComplexMatrix& r_t,
                                  double gamma0, std::size_t n_t) {
    if (!(gamma0 > 0.0)) throw config_error("instantaneous_capacity: gamma0 must be positive");
    if (!r_t.square() || r_t.rows() != hw.h.cols())
        throw shape_error("instantaneous_capacity_raw: covariance must be N_t x N_t");
    const std::size_t n_r = hw.h.rows();
    const ComplexMatrix product = mat_mul(mat_mul(hw.h, r_t), conj_transpose(hw.h));
    const double c = gamma0 / double(n_t);
    ComplexMatrix m(n_r, n_r);
    for (std::size_t i = 0; i < n_r; ++i)
        for (std::size_t j = 0; j < n_r; ++j)
            m(i, j) = c * product(i, j) + (i == j ? cxd{1.0, 0.0} : cxd{});
    return std::log2(std::abs(det_lu(m)));
}

CapacitySamples mean_capacity(const ChannelConfig& config, const CovarianceMode& mode,
                              const SplitPair* r_source, const ComplexMatrix* fixed_covariance,
                              bool raw_determinant) {
    return run_trials(config, mode, r_source, fixed_covariance, raw_determinant, true);
}

CapacitySamples mean_capacity_serial(const ChannelConfig& config, const CovarianceMode& mode,
                                     const SplitPair* r_source,
                                     const ComplexMatrix* fixed_covariance,
                                     bool raw_determinant) {
    return run_trials(config, mode, r_source, fixed_covariance, raw_determinant, false);
}

AlphaSearchResult max_mean_capacity_over_alpha(const ChannelConfig& config, const SplitPair& pair,
                                               std::span<const double> alphas, IccVariant variant,
                                               bool raw_determinant) {
    if (alphas.empty())
        throw config_error("max_mean_capacity_over_alpha: alpha grid must be nonempty");
    AlphaSearchResult result;
    result.per_alpha.reserve(alphas.size());
    double best_mean = -std::numeric_limits<double>::infinity();
    for (double alpha : alphas) {
        CapacitySamples samples = mean_capacity(config, CovarianceMode::icc(alpha, variant),
                                                &pair, nullptr, raw_determinant);
        const double m = samples.mean();
        if (m > best_mean || (m == best_mean && alpha < result.best_alpha)) {
            best_mean = m;
            result.best_alpha = alpha;
        }
        result.per_alpha.push_back(std::move(samples));
    }
    return result;
}

double capacity_gain(const CapacitySamples& base, const CapacitySamples& improved) {
    if (base.config.n_t != improved.config.n_t || base.config.n_r != improved.config.n_r)
        throw comparison_error("capacity_gain: runs have different antenna counts");
    if (base.config.snr_db != improved.config.snr_db)
        throw comparison_error("capacity_gain: runs have different SNR");
    return improved.mean() - base.mean();
}

EmpiricalCdf empirical_cdf(const CapacitySamples& samples) {
    if (samples.values.empty()) throw shape_error("empirical_cdf: samples must be nonempty");
    std::vector<double> sorted = samples.values;
    std::sort(sorted.begin(), sorted.end());
    EmpiricalCdf cdf;
    cdf.points.reserve(sorted.size());
    const double n = double(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        cdf.points.emplace_back(sorted[i], double(i + 1) / n);
    return cdf;
}

std::vector<SnrSweepRow> snr_sweep(const ChannelConfig& config_template,
                                   std::span<const double> snrs_db,
                                   std::span<const CovarianceMode> modes, const SplitPair* pair,
                                   bool raw_determinant) {
    if (snrs_db.empty() || modes.empty())
        throw config_error("snr_sweep: SNR and mode lists must be nonempty");
    std::vector<SnrSweepRow> rows;
    rows.reserve(snrs_db.size() * modes.size());
    for (double snr : snrs_db) {
        ChannelConfig config = config_template;
        config.snr_db = snr;
        for (const CovarianceMode& mode : modes) {
            const CapacitySamples samples = mean_capacity(config, mode, pair, nullptr,
                                                          raw_determinant);
            SnrSweepRow row;
            row.snr_db = snr;
            row.mode = mode.label();
            row.has_alpha = mode.kind == CovarianceKind::IccCovariance;
            row.alpha = mode.alpha;
            row.mean = samples.mean();
            row.standard_error = samples.standard_error();
            row.trials = config.trials;
            row.seed = config.seed;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace micap
