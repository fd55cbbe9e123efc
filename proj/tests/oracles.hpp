// SPDX-License-Identifier: Apache-2.0
//
// Test-only reference implementations, kept deliberately naive and
// independent of the library's transform-based code paths.
#pragma once

#include "framealias/filterbank.hpp"
#include "framealias/random.hpp"

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace oracles {

using framealias::Complex;
using framealias::ComplexVector;
using framealias::Filterbank;
using framealias::Signal;

/// O(L^2) double-loop circular convolution.
inline ComplexVector naive_convolve(const ComplexVector& x, const ComplexVector& w) {
    const int length = static_cast<int>(x.size());
    ComplexVector out(length, Complex(0.0, 0.0));
    for (int n = 0; n < length; ++n)
        for (int l = 0; l < length; ++l)
            out[n] += x[l] * w[((n - l) % length + length) % length];
    return out;
}

inline ComplexVector downsample(const ComplexVector& x, int stride) {
    ComplexVector out(x.size() / stride);
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = x[n * stride];
    return out;
}

/// Analysis channel via the defining sums only.
inline ComplexVector naive_analysis_channel(const Filterbank& fb, const Signal& x, int channel) {
    return downsample(naive_convolve(x, framealias::full_filter(fb, channel)), fb.stride);
}

/// Dense (M L/d) x L analysis matrix built column-by-column on basis vectors.
inline Eigen::MatrixXcd analysis_matrix(const Filterbank& fb) {
    const int rows = fb.channels() * fb.coefficient_length();
    Eigen::MatrixXcd theta(rows, fb.signal_length);
    for (int col = 0; col < fb.signal_length; ++col) {
        const Signal basis = framealias::unit_impulse(fb.signal_length, col);
        int row = 0;
        for (int j = 0; j < fb.channels(); ++j) {
            const ComplexVector channel = naive_analysis_channel(fb, basis, j);
            for (const auto& v : channel) theta(row++, col) = v;
        }
    }
    return theta;
}

/// Largest eigenvalue of a Hermitian PSD matrix by plain power iteration.
inline double power_iteration_max(const Eigen::MatrixXcd& matrix, std::uint64_t seed = 7,
                                  int max_iters = 200000, double tol = 1e-11) {
    auto engine = framealias::make_engine(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::VectorXcd v(matrix.rows());
    for (Eigen::Index i = 0; i < v.size(); ++i) v(i) = Complex(dist(engine), dist(engine));
    v.normalize();
    double lambda = 0.0;
    for (int it = 0; it < max_iters; ++it) {
        Eigen::VectorXcd next = matrix * v;
        const double norm = next.norm();
        if (norm == 0.0) return 0.0;
        next /= norm;
        const double rayleigh = (next.adjoint() * matrix * next).real()(0, 0);
        if (it > 0 && std::abs(rayleigh - lambda) <= tol * std::max(1.0, std::abs(rayleigh))) {
            return rayleigh;
        }
        lambda = rayleigh;
        v = next;
    }
    return lambda;
}

inline Filterbank random_filterbank(int channels, int kernel_size, int stride, int length,
                                    std::uint64_t seed, bool complex_kernels = false,
                                    double variance = 1.0) {
    auto engine = framealias::make_engine(seed);
    auto kernels = complex_kernels
                       ? framealias::complex_gaussian_kernels(channels, kernel_size, variance,
                                                              engine)
                       : framealias::gaussian_kernels(channels, kernel_size, 0.0, variance,
                                                      engine);
    return framealias::make_filterbank(std::move(kernels), stride, length);
}

inline double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace oracles
