// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/filterbank.hpp"

#include <Eigen/Dense>

namespace framealias {

/// Aliasing terms of a filterbank,
///
///     G_n = d^{-1} sum_j  w_hat_j . conj(T_{n L/d} w_hat_j),
///
/// where w_hat_j is the NON-unitary DFT of the zero-padded filter. Under this
/// convention G_n[k] equals the continuous aliasing term of the l2(Z)
/// extension evaluated at xi = k/L, which is what makes every kernel-size
/// statement in stability.hpp length-independent.
///
/// G_0 is the (real, nonnegative) spectral response; G_n for n >= 1 quantify
/// the frequency correlation introduced by decimation.
struct AliasingSpectrum {
    std::vector<ComplexVector> terms;          // d vectors G_0..G_{d-1}, each of length L
    std::vector<ComplexVector> fourier_terms;  // unitary DFTs of the terms
    int stride = 1;
    int length = 0;
};

AliasingSpectrum aliasing_terms(const Filterbank& fb);

/// Dense realization of the frame operator: `matrix` is S built by applying
/// synthesis(analysis(.)) to all canonical basis vectors, `spectral` is
/// S_hat = F S F* with unitary F. Serves as the brute-force oracle for the
/// band structure. Guarded to signal lengths <= 4096.
struct FrameOperatorDense {
    Eigen::MatrixXcd matrix;
    Eigen::MatrixXcd spectral;
};

FrameOperatorDense frame_operator_dense(const Filterbank& fb);

/// Assembles S_hat from the aliasing terms alone. The verified band mapping
/// (certified against frame_operator_dense) is
///
///     S_hat[k, l] = G_m[l]   where  m = ((l - k) * d / L) mod d,
///
/// for k - l = 0 mod L/d, zero elsewhere. Equivalently: column l carries
/// G_m[l] in row (l - m L/d) mod L. Note the printed one-line form of this
/// mapping is easy to get wrong; the Walnut action identity in terms of the
/// terms above reads
///
///     S_hat x_hat = sum_n conj(G_n) . T_{n L/d} x_hat.
Eigen::MatrixXcd assemble_shat(const AliasingSpectrum& alias);

/// Applies the Walnut action identity above to a spectrum of length L.
ComplexVector walnut_apply(const AliasingSpectrum& alias, const ComplexVector& xhat);

/// Maximum ambient length accepted by the dense paths.
inline constexpr int kDenseGuard = 4096;

}  // namespace framealias
