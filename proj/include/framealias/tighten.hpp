// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/objectives.hpp"

#include <cstdint>
#include <utility>

namespace framealias {

struct OptimizerConfig {
    ObjectiveKind objective = ObjectiveKind::LGhat;
    double learning_rate = 1e-2;
    int iterations = 250;
    // Scales each step by (B*/A* - 1)^adaptive_exponent, recomputed every
    // iteration. Falls back to an unscaled step whenever the iterate is not a
    // frame (the scale would be undefined); the trajectory records this.
    bool adaptive = true;
    double adaptive_exponent = 0.1;
    std::uint64_t seed = 0;
    // LG on its own is scale-invariant; the Parseval term pins mean(G_0) = 1.
    bool parseval_term = true;
    AliasNorm alias_norm = AliasNorm::euclidean;
};

struct TrajectoryPoint {
    int iteration = 0;
    double condition_number = 0.0;
    double reconstruction_error = 0.0;  // ||(S - I) x|| for the fixed probe x
    double objective_value = 0.0;
    bool adaptive_fallback = false;
};

struct Trajectory {
    std::vector<TrajectoryPoint> points;  // iterations + 1 records, head = init
};

/// Plain gradient descent on the kernel coordinates (the optimization is
/// deterministic given the config; the name keeps the conventional "SGD"
/// label although no batching is involved). Returns the optimized filterbank
/// and the per-iteration trajectory.
std::pair<Filterbank, Trajectory> sgd_tighten(const Filterbank& fb, const OptimizerConfig& cfg);

/// Pseudo-inverse square root of a Hermitian PSD matrix: eigenvalues at or
/// below rank_tol * lambda_max are treated as zero, so T S T is the
/// orthogonal projector onto range(S).
Eigen::MatrixXcd inv_sqrt_psd(const Eigen::MatrixXcd& matrix, double rank_tol = 1e-12);

/// One FIR-tightening step: multiply every filter by S^{-1/2} and project the
/// result back onto the first L_K coordinates. Requires a frame.
Filterbank fir_tighten_step(const Filterbank& fb);

enum class FirStop { target_reached, max_steps, diverged, non_frame };

struct FirTightenResult {
    Filterbank filterbank;  // best iterate seen (lowest condition number)
    Trajectory trajectory;
    FirStop reason = FirStop::max_steps;
};

/// Iterates fir_tighten_step until the condition number drops to the target,
/// the step budget runs out, the condition number grows three times in a row
/// (divergence), or the iterate stops being a frame.
FirTightenResult fir_tighten(const Filterbank& fb, int max_steps, double target_condition);

}  // namespace framealias
