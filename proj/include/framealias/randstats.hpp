// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/walnut.hpp"

#include <cstdint>
#include <utility>

namespace framealias {

enum class KernelDistribution { gaussian, uniform };

/// Random i.i.d. kernels: entries N(mean, variance) or U[lower, upper] on the
/// first L_K coordinates, zero elsewhere. The closed forms below require zero
/// mean; the variance closed form additionally requires the Gaussian case
/// (its derivation rests on a fourth-moment factorization which uniform
/// variables do not satisfy).
struct RandomKernelSpec {
    KernelDistribution distribution = KernelDistribution::gaussian;
    double mean = 0.0;
    double variance = 1.0;
    double lower = -1.0;  // uniform support
    double upper = 1.0;
    int channels = 1;     // M
    int kernel_size = 1;  // L_K
    int stride = 1;       // d
    int length = 1;       // L (multiple of d)

    double second_moment() const;
};

/// Closed-form expectation, constant across k:
///   E[G_n[k]] = (sigma^2 M / d) sum_{l=0}^{L_K-1} exp(-2 pi i l n / d).
/// When the root-of-unity sum covers full periods (d / gcd(n,d) divides L_K)
/// the result is exactly zero for n >= 1, and exactly sigma^2 M L_K / d for
/// n = 0. With sigma^2 = d / (M L_K) this gives E[S] = I.
Eigen::MatrixXcd expected_aliasing(const RandomKernelSpec& spec);

/// Closed-form variance (Gaussian kernels):
///   V[G_n[k]] = (sigma^4 M / d^2) (F(2k/L - n/d) + L_K^2),
/// with F the Fejer ratio sin^2(L_K pi t)/sin^2(pi t), extended by L_K^2 at
/// integer t. Peaks sit exactly at k = nL/(2d) and k = nL/(2d) + L/2.
Eigen::MatrixXd variance_aliasing(const RandomKernelSpec& spec);

/// Envelope (sigma^4 M L_K^2 / d^2) * [1, 2] that the closed form respects at
/// every entry.
std::pair<double, double> variance_bounds(const RandomKernelSpec& spec);

/// Fejer ratio with the removable singularities filled in; t given as the
/// exact rational numerator/denominator.
double fejer_ratio(long long numerator, long long denominator, int kernel_size);

struct MomentTable {
    Eigen::MatrixXcd expected;  // d x L
    Eigen::MatrixXd variance;   // d x L
    std::pair<double, double> bounds{0.0, 0.0};
    // Standard errors; present for Monte-Carlo tables, empty for closed forms.
    Eigen::MatrixXd se_mean;
    Eigen::MatrixXd se_variance;
    long draws = 0;
};

MomentTable closed_form_moments(const RandomKernelSpec& spec);

/// Empirical moments over independent filterbank draws. The generator for
/// draw i is seeded from (seed, i), and the accumulation is blocked with a
/// fixed block layout, so serial and parallel runs produce identical tables.
MomentTable monte_carlo_moments(const RandomKernelSpec& spec, long draws, std::uint64_t seed);

}  // namespace framealias
