// SPDX-License-Identifier: Apache-2.0

#include "micap/icc.hpp"

#include <cmath>
#include <exception>
#include <numbers>
#include <string>

#include "micap/csv.hpp"
#include "micap/linalg.hpp"

namespace micap {

namespace {

constexpr double kPoleTol = 1e-12;

/// alpha I + sign * M.
ComplexMatrix shifted(const ComplexMatrix& m, double alpha, double sign) {
    ComplexMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out(i, j) = sign * m(i, j) + (i == j ? cxd{alpha, 0.0} : cxd{});
    return out;
}

double max_shift_ratio(const std::vector<cxd>& values, double alpha, const char* which) {
    double best = 0.0;
    for (const cxd& v : values) {
        const double denom = std::abs(alpha + v);
        if (denom <= kPoleTol)
            throw pole_error(std::string("sigma_bound: alpha + ") + which +
                             " eigenvalue is numerically zero");
        best = std::max(best, std::abs(alpha - v) / denom);
    }
    return best;
}

IccRecord record_at(const SplitPair& pair, const SpectrumPair& spectra, double alpha,
                    IccVariant variant, double eps_conv) {
    try {
        IccRecord rec;
        rec.alpha = alpha;
        rec.variant = variant;
        rec.sigma = sigma_bound(spectra, alpha);

        const ComplexMatrix r = iteration_matrix(pair, alpha, variant);
        const SpectralRadius radius = spectral_radius(r);
        rec.rho = radius.value;
        rec.rho_power_converged = radius.converged;
        rec.distance_to_identity = max_abs_diff(r, ComplexMatrix::identity(r.rows()));
        rec.converged = rec.distance_to_identity <= eps_conv;

        const ComplexMatrix h = hermitize(r);
        for (std::size_t i = 0; i < h.rows(); ++i)
            for (std::size_t j = 0; j < h.cols(); ++j)
                if (i != j) rec.max_offdiag = std::max(rec.max_offdiag, std::abs(h(i, j)));
        return rec;
    } catch (const pole_error& e) {
        throw pole_error(std::string(e.what()) + " (alpha = " + std::to_string(alpha) + ")");
    } catch (const singular_error& e) {
        throw singular_error(std::string(e.what()) + " (alpha = " + std::to_string(alpha) + ")");
    }
}

void check_grid(std::span<const double> alphas) {
    if (alphas.empty()) throw config_error("icc sweep: alpha grid must be nonempty");
    for (double a : alphas)
        if (!(a > 0.0)) throw config_error("icc sweep: alpha values must be strictly positive");
}

} // namespace

std::string_view variant_name(IccVariant variant) {
    return variant == IccVariant::AsPrinted ? "as-printed" : "cscs";
}

IccVariant variant_from_name(std::string_view name) {
    if (name == "as-printed") return IccVariant::AsPrinted;
    if (name == "cscs") return IccVariant::CscsCorrected;
    throw config_error("unknown variant '" + std::string(name) + "' (expected as-printed or cscs)");
}

std::vector<cxd> circulant_spectrum(const CirculantMatrix& a) {
    if (a.n == 0 || a.first_row.size() != a.n)
        throw shape_error("circulant_spectrum: inconsistent coefficient count");
    return dft(a.first_row);
}

std::vector<cxd> skew_circulant_spectrum(const SkewCirculantMatrix& b) {
    const std::size_t n = b.n;
    if (n == 0 || b.first_row.size() != n)
        throw shape_error("skew_circulant_spectrum: inconsistent coefficient count");
    std::vector<cxd> mu(n);
    const double step = std::numbers::pi / double(n);
    for (std::size_t k = 0; k < n; ++k) {
        cxd acc{};
        for (std::size_t j = 0; j < n; ++j)
            acc += b.first_row[j] * std::polar(1.0, step * double(j) * double(2 * k + 1));
        mu[k] = acc;
    }
    return mu;
}

SpectrumPair split_spectra(const SplitPair& pair) {
    return SpectrumPair{circulant_spectrum(pair.a), skew_circulant_spectrum(pair.b)};
}

double sigma_bound(const SpectrumPair& spectra, double alpha) {
    if (!(alpha > 0.0)) throw config_error("sigma_bound: alpha must be positive");
    return max_shift_ratio(spectra.lambda, alpha, "circulant") *
           max_shift_ratio(spectra.mu, alpha, "skew-circulant");
}

double rho_closed_form_as_printed(const SpectrumPair& spectra, double alpha) {
    if (!(alpha > 0.0)) throw config_error("rho_closed_form_as_printed: alpha must be positive");
    return max_shift_ratio(spectra.lambda, alpha, "circulant");
}

ComplexMatrix iteration_matrix(const SplitPair& pair, double alpha, IccVariant variant) {
    if (!(alpha > 0.0)) throw config_error("iteration_matrix: alpha must be positive");
    const ComplexMatrix a = dense_of_circulant(pair.a);
    const ComplexMatrix b = dense_of_skew_circulant(pair.b);

    ComplexMatrix inv_b_shift(1, 1);
    try {
        inv_b_shift = inverse(shifted(b, alpha, +1.0));
    } catch (const singular_error&) {
        throw singular_error("iteration_matrix: alpha I + B is singular");
    }
    ComplexMatrix inv_a_shift(1, 1);
    try {
        inv_a_shift = inverse(shifted(a, alpha, +1.0));
    } catch (const singular_error&) {
        throw singular_error("iteration_matrix: alpha I + A is singular");
    }

    const double tail_sign = variant == IccVariant::AsPrinted ? +1.0 : -1.0;
    ComplexMatrix r = mat_mul(inv_b_shift, shifted(a, alpha, -1.0));
    r = mat_mul(r, inv_a_shift);
    r = mat_mul(r, shifted(b, alpha, tail_sign));
    return r;
}

std::vector<IccRecord> icc_sweep_serial(const SplitPair& pair, std::span<const double> alphas,
                                        IccVariant variant, double eps_conv) {
    check_grid(alphas);
    if (!(eps_conv > 0.0)) throw config_error("icc sweep: eps_conv must be positive");
    const SpectrumPair spectra = split_spectra(pair);
    std::vector<IccRecord> records;
    records.reserve(alphas.size());
    for (double alpha : alphas)
        records.push_back(record_at(pair, spectra, alpha, variant, eps_conv));
    return records;
}

std::vector<IccRecord> icc_sweep(const SplitPair& pair, std::span<const double> alphas,
                                 IccVariant variant, double eps_conv) {
    check_grid(alphas);
    if (!(eps_conv > 0.0)) throw config_error("icc sweep: eps_conv must be positive");
    const SpectrumPair spectra = split_spectra(pair);
    const std::ptrdiff_t count = static_cast<std::ptrdiff_t>(alphas.size());
    std::vector<IccRecord> records(alphas.size());
    std::vector<std::exception_ptr> errors(alphas.size());

#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic)
#endif
    for (std::ptrdiff_t i = 0; i < count; ++i) {
        try {
            records[i] = record_at(pair, spectra, alphas[i], variant, eps_conv);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    }
    for (const std::exception_ptr& e : errors)
        if (e) std::rethrow_exception(e);
    return records;
}

std::string icc_records_to_csv(std::span<const IccRecord> records) {
    std::string out = "alpha,sigma,rho,variant,dist_identity,converged\n";
    for (const IccRecord& rec : records) {
        out += format_sig(rec.alpha);
        out += ',';
        out += format_sig(rec.sigma);
        out += ',';
        out += format_sig(rec.rho);
        out += ',';
        out += variant_name(rec.variant);
        out += ',';
        out += format_sig(rec.distance_to_identity);
        out += ',';
        out += rec.converged ? "true" : "false";
        out += '\n';
    }
    return out;
}

} // namespace micap
