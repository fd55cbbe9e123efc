// SPDX-License-Identifier: Apache-2.0
#include "framealias/stability.hpp"

#include "framealias/errors.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <limits>

namespace framealias {
namespace {

double mean_response(const AliasingSpectrum& alias) {
    double acc = 0.0;
    for (const auto& v : alias.terms[0]) acc += v.real();
    return acc / static_cast<double>(alias.length);
}

/// sum_n ||G_hat_n||_1 / sqrt(L): the total 1-norm of the torus Fourier
/// coefficients of the aliasing terms.
double fourier_one_norm_total(const AliasingSpectrum& alias) {
    double total = 0.0;
    for (const auto& ghat : alias.fourier_terms)
        for (const auto& v : ghat) total += std::abs(v);
    return total / std::sqrt(static_cast<double>(alias.length));
}

double alias_row_sum(const AliasingSpectrum& alias, int k) {
    double acc = 0.0;
    for (int n = 1; n < alias.stride; ++n) acc += std::abs(alias.terms[n][k]);
    return acc;
}

}  // namespace

Eigen::VectorXd frame_operator_eigenvalues(const Filterbank& fb) {
    const FrameOperatorDense dense = frame_operator_dense(fb);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense.matrix,
                                                           Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

FrameBounds bounds_walnut(const AliasingSpectrum& alias) {
    double lower = std::numeric_limits<double>::infinity();
    double upper = -std::numeric_limits<double>::infinity();
    for (int k = 0; k < alias.length; ++k) {
        const double response = alias.terms[0][k].real();
        const double sum = alias_row_sum(alias, k);
        lower = std::min(lower, response - sum);
        upper = std::max(upper, response + sum);
    }
    FrameBounds bounds;
    bounds.kind = BoundsKind::walnut_estimate;
    bounds.raw_lower = lower;
    bounds.conclusive = lower > 0.0;
    bounds.lower = std::max(lower, 0.0);
    bounds.upper = upper;
    return bounds;
}

FrameBounds bounds_kernel_aware(const Filterbank& fb) {
    const AliasingSpectrum alias = aliasing_terms(reembed(fb));
    const double total = fourier_one_norm_total(alias);
    const double mean = mean_response(alias);
    FrameBounds bounds;
    bounds.kind = BoundsKind::kernel_aware_estimate;
    bounds.raw_lower = 2.0 * mean - total;
    bounds.conclusive = bounds.raw_lower > 0.0;
    bounds.lower = std::max(bounds.raw_lower, 0.0);
    bounds.upper = total;
    return bounds;
}

FrameBounds optimal_bounds(const Filterbank& fb) {
    const Eigen::VectorXd eigenvalues = frame_operator_eigenvalues(fb);
    FrameBounds bounds;
    bounds.kind = BoundsKind::optimal;
    bounds.lower = eigenvalues(0);
    bounds.raw_lower = bounds.lower;
    bounds.upper = eigenvalues(eigenvalues.size() - 1);
    bounds.conclusive = true;
    return bounds;
}

TightnessReport tightness_report(const Filterbank& fb, double tol) {
    const AliasingSpectrum alias = aliasing_terms(fb);
    const double mean = mean_response(alias);

    double min_response = std::numeric_limits<double>::infinity();
    double max_response = -std::numeric_limits<double>::infinity();
    for (const auto& v : alias.terms[0]) {
        min_response = std::min(min_response, v.real());
        max_response = std::max(max_response, v.real());
    }
    double alias_sup = 0.0;  // sum_{n>=1} ||G_n||_inf
    for (int n = 1; n < alias.stride; ++n) {
        double sup = 0.0;
        for (const auto& v : alias.terms[n]) sup = std::max(sup, std::abs(v));
        alias_sup += sup;
    }

    const Eigen::VectorXd eigenvalues = frame_operator_eigenvalues(fb);
    const double lambda_min = eigenvalues(0);
    const double lambda_max = eigenvalues(eigenvalues.size() - 1);

    TightnessReport report;
    report.tolerance = tol;
    report.tight_value = mean;
    report.is_frame = lambda_min > 1e-12 * std::max(lambda_max, 1.0);
    report.condition_number = report.is_frame
                                  ? lambda_max / lambda_min
                                  : std::numeric_limits<double>::infinity();
    report.residual_identity =
        std::max(std::abs(lambda_min - mean), std::abs(lambda_max - mean));
    report.residual_response_ratio =
        min_response > 0.0 ? max_response / min_response + alias_sup - 1.0
                           : std::numeric_limits<double>::infinity();
    report.residual_fourier_one = std::abs(fourier_one_norm_total(alias) - mean);

    if (report.is_frame && mean > 0.0) {
        const bool identity_ok = report.residual_identity <= tol * mean;
        const bool ratio_ok = min_response > 0.0 &&
                              (max_response / min_response - 1.0) + alias_sup / mean <= tol;
        const bool fourier_ok = report.residual_fourier_one <= tol * mean;
        report.is_tight = identity_ok && ratio_ok && fourier_ok;
    }
    return report;
}

DeviationBounds deviation_bounds(const Filterbank& fb) {
    const AliasingSpectrum alias = aliasing_terms(fb);
    const double mean = mean_response(alias);

    double response_dev = 0.0;  // ||G_0 - 1||_inf
    for (const auto& v : alias.terms[0])
        response_dev = std::max(response_dev, std::abs(v - Complex(1.0, 0.0)));
    double alias_sup = 0.0;
    for (int n = 1; n < alias.stride; ++n) {
        double sup = 0.0;
        for (const auto& v : alias.terms[n]) sup = std::max(sup, std::abs(v));
        alias_sup += sup;
    }

    const FrameBounds walnut = bounds_walnut(alias);

    DeviationBounds dev;
    dev.from_identity = response_dev + alias_sup;
    dev.from_mean_walnut =
        std::max(std::abs(walnut.upper - mean), std::abs(walnut.raw_lower - mean));
    const AliasingSpectrum minimal = aliasing_terms(reembed(fb));
    dev.from_mean_kernel_aware =
        std::abs(mean_response(minimal) - fourier_one_norm_total(minimal));
    return dev;
}

FrameBounds perturbed_bounds(const PerturbationSpec& spec) {
    const double lower = spec.base_bounds.lower;
    const double upper = spec.base_bounds.upper;
    const double gamma = spec.step;
    const double update_upper = spec.update_upper;
    if (gamma < 0.0) throw std::invalid_argument("perturbed_bounds: negative step");
    const double reach = gamma * std::sqrt(update_upper);
    if (gamma * update_upper >= lower || reach >= std::sqrt(lower))
        throw GuaranteeVoidError("perturbed_bounds: step too large for the guarantee", gamma,
                                 update_upper, lower);
    FrameBounds bounds;
    bounds.kind = spec.base_bounds.kind;
    bounds.conclusive = spec.base_bounds.conclusive;
    bounds.lower = (std::sqrt(lower) - reach) * (std::sqrt(lower) - reach);
    bounds.raw_lower = bounds.lower;
    bounds.upper = (std::sqrt(upper) + reach) * (std::sqrt(upper) + reach);
    return bounds;
}

}  // namespace framealias
