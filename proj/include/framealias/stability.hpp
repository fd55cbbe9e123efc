// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/walnut.hpp"

namespace framealias {

enum class BoundsKind { walnut_estimate, kernel_aware_estimate, optimal };

/// A frame-bound pair with its provenance. Estimates are sufficient
/// conditions only: `conclusive == false` (raw lower bound <= 0) means the
/// estimate cannot certify the frame property, not that the filterbank fails
/// to be a frame.
struct FrameBounds {
    double lower = 0.0;  // clamped at 0 for estimates
    double upper = 0.0;
    BoundsKind kind = BoundsKind::optimal;
    bool conclusive = true;
    double raw_lower = 0.0;  // estimate before clamping
};

/// Diagonal-dominance estimate from the aliasing terms at the ambient length:
///   A = min_k (G_0[k] - sum_{n>=1} |G_n[k]|),
///   B = max_k (G_0[k] + sum_{n>=1} |G_n[k]|).
FrameBounds bounds_walnut(const AliasingSpectrum& alias);

/// Kernel-size-aware estimate evaluated at the minimal admissible length
/// L = d ceil((2 L_K - 1)/d) regardless of the ambient length, valid for every
/// admissible length >= L:
///   B = sum_n ||G_hat_n||_1 / sqrt(L),   A = 2 mean(G_0) - B.
/// The 1/sqrt(L) converts the unitary DFT of the terms into the Fourier
/// coefficients of their torus counterparts, which is the quantity the
/// estimate needs (without it the Parseval case would not come out as 1).
FrameBounds bounds_kernel_aware(const Filterbank& fb);

/// Extreme eigenvalues of the dense Hermitian frame operator (the optimal
/// bounds). Dense guard applies.
FrameBounds optimal_bounds(const Filterbank& fb);

/// Tightness diagnostics. The stored residuals are the literal expressions
///   identity:       ||S - mean(G_0) I||            (spectral norm)
///   response_ratio: max G_0 / min G_0 + sum_{n>=1} ||G_n||_inf - 1
///   fourier_one:    |sum_n ||G_hat_n||_1 / sqrt(L) - mean(G_0)|
/// which vanish together exactly at tightness. The is_tight verdict compares
/// them against tol relative to tight_value, so scaled copies of a tight
/// filterbank get the same verdict.
struct TightnessReport {
    bool is_frame = false;
    bool is_tight = false;
    double tight_value = 0.0;       // mean(G_0) = G_hat_0[0]/sqrt(L)
    double condition_number = 0.0;  // optimal B*/A*; +inf when not a frame
    double residual_identity = 0.0;
    double residual_response_ratio = 0.0;
    double residual_fourier_one = 0.0;
    double tolerance = 0.0;
};

TightnessReport tightness_report(const Filterbank& fb, double tol = 1e-7);

/// Upper bounds on the deviation of S from scaled identities:
///   from_identity            >= ||S - I||           (ambient length)
///   from_mean_walnut         >= ||S - mean(G_0) I||  (ambient length)
///   from_mean_kernel_aware   >= ||S - mean(G_0) I||  (any admissible length)
struct DeviationBounds {
    double from_identity = 0.0;
    double from_mean_walnut = 0.0;
    double from_mean_kernel_aware = 0.0;
};

DeviationBounds deviation_bounds(const Filterbank& fb);

/// Worst-case bounds after a gradient-style update w_j - step * u_j, where
/// `update_upper` is the optimal upper bound of the update filterbank.
struct PerturbationSpec {
    FrameBounds base_bounds;
    double update_upper = 0.0;  // R
    double step = 0.0;          // gamma >= 0
};

/// ((sqrt A - g sqrt R)^2, (sqrt B + g sqrt R)^2). Requires g sqrt R < sqrt A
/// (and g R < A); otherwise the lower bound is void and an error is thrown.
FrameBounds perturbed_bounds(const PerturbationSpec& spec);

/// Ascending eigenvalues of the dense Hermitian frame operator.
Eigen::VectorXd frame_operator_eigenvalues(const Filterbank& fb);

}  // namespace framealias
