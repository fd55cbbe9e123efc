// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/stability.hpp"

namespace framealias {

/// Parseval-promoting objectives. All of them vanish exactly at Parseval
/// filterbanks (LG at tight ones; pair it with the Parseval term to pin the
/// scale):
///   LS     = ||S - I||                      (spectral norm)
///   LG     = max G_0 / min G_0 - 1 + sum_{n>=1} ||G_n||
///   LGhat  = |mean(G_0) - sum_n ||G_hat_n||_1 / sqrt(L)|
///   Lkappa = B*/A* - 1                      (evaluation only)
///   Ltheta = (||Theta||_2^2 - ||Theta||_F^2 / L) / 2   (evaluation only)
enum class ObjectiveKind { LS, LG, LGhat, Lkappa, Ltheta };

/// Vector norm applied to the aliasing terms inside LG.
enum class AliasNorm { euclidean, one, sup };

struct ObjectiveOptions {
    AliasNorm alias_norm = AliasNorm::euclidean;
    // Adds |mean(G_0) - 1| (weight 1) to LG so that minimizing it targets
    // Parseval instead of merely tight.
    bool parseval_term = false;
    // Evaluation length; 0 selects the minimal admissible length
    // d ceil((2 L_K - 1)/d), which keeps the cost independent of the ambient
    // signal length.
    int ambient_length = 0;
    bool with_gradient = true;
};

/// value >= 0; gradient is M x L_K in the d/dRe + i d/dIm convention (the one
/// central finite differences on the real and imaginary parts measure).
/// Non-smooth points carry a subgradient: ties in max/min are broken by the
/// lowest index and |.| contributes 0 at 0.
struct ObjectiveEvaluation {
    double value = 0.0;
    std::vector<ComplexVector> gradient;
    bool has_gradient = false;
};

ObjectiveEvaluation eval_objective(const Filterbank& fb, ObjectiveKind kind,
                                   const ObjectiveOptions& opts = {});

ObjectiveEvaluation eval_ls(const Filterbank& fb, const ObjectiveOptions& opts = {});
ObjectiveEvaluation eval_lg(const Filterbank& fb, const ObjectiveOptions& opts = {});
ObjectiveEvaluation eval_lghat(const Filterbank& fb, const ObjectiveOptions& opts = {});
ObjectiveEvaluation eval_lkappa(const Filterbank& fb, const ObjectiveOptions& opts = {});
ObjectiveEvaluation eval_ltheta(const Filterbank& fb, const ObjectiveOptions& opts = {});

/// Max deviation between the analytic gradient and central finite differences
/// over all kernel coordinates, normalized by the largest gradient magnitude.
double gradient_check(const Filterbank& fb, ObjectiveKind kind, double epsilon,
                      const ObjectiveOptions& opts = {});

const char* objective_name(ObjectiveKind kind);
ObjectiveKind objective_from_name(const std::string& name);

}  // namespace framealias
