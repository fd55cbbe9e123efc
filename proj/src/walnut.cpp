// SPDX-License-Identifier: Apache-2.0
#include "framealias/walnut.hpp"

#include "framealias/errors.hpp"
#include "framealias/parallel.hpp"

#include <string>

namespace framealias {

AliasingSpectrum aliasing_terms(const Filterbank& fb) {
    const int length = fb.signal_length;
    const int stride = fb.stride;
    const int hop = length / stride;  // L/d
    const std::vector<ComplexVector> spectra = filter_spectra(fb);

    AliasingSpectrum alias;
    alias.stride = stride;
    alias.length = length;
    alias.terms.assign(stride, ComplexVector(length, Complex(0.0, 0.0)));
    const double inv_d = 1.0 / static_cast<double>(stride);
    for (int n = 0; n < stride; ++n) {
        auto& term = alias.terms[n];
        const int offset = n * hop;  // < length
        for (const auto& ws : spectra) {
            for (int k = 0; k < length; ++k) {
                const int shifted = (k - offset + length) % length;
                term[k] += ws[k] * std::conj(ws[shifted]);
            }
        }
        for (auto& v : term) v *= inv_d;
    }
    alias.fourier_terms.reserve(stride);
    for (const auto& term : alias.terms) alias.fourier_terms.push_back(dft(term, true));
    return alias;
}

FrameOperatorDense frame_operator_dense(const Filterbank& fb) {
    const int length = fb.signal_length;
    if (length > kDenseGuard)
        throw ResourceLimitError("frame_operator_dense: signal length " + std::to_string(length) +
                                 " exceeds dense guard " + std::to_string(kDenseGuard));

    const FrameOperatorApplier applier(fb);
    FrameOperatorDense dense;
    dense.matrix.resize(length, length);
    parallel_for(length, [&](std::size_t col) {
        const Signal column = applier.apply(unit_impulse(length, col));
        for (int row = 0; row < length; ++row) dense.matrix(row, col) = column[row];
    });

    // S_hat = F S F*: unitary DFT down the columns, unitary inverse DFT along
    // the rows.
    dense.spectral.resize(length, length);
    for (int col = 0; col < length; ++col) {
        ComplexVector column(length);
        for (int row = 0; row < length; ++row) column[row] = dense.matrix(row, col);
        const ComplexVector transformed = dft(column, true);
        for (int row = 0; row < length; ++row) dense.spectral(row, col) = transformed[row];
    }
    for (int row = 0; row < length; ++row) {
        ComplexVector line(length);
        for (int col = 0; col < length; ++col) line[col] = dense.spectral(row, col);
        const ComplexVector transformed = idft(line, true);
        for (int col = 0; col < length; ++col) dense.spectral(row, col) = transformed[col];
    }
    return dense;
}

Eigen::MatrixXcd assemble_shat(const AliasingSpectrum& alias) {
    const int length = alias.length;
    const int stride = alias.stride;
    const int hop = length / stride;
    Eigen::MatrixXcd shat = Eigen::MatrixXcd::Zero(length, length);
    for (int m = 0; m < stride; ++m) {
        const auto& term = alias.terms[m];
        for (int col = 0; col < length; ++col) {
            const int row = ((col - m * hop) % length + length) % length;
            shat(row, col) = term[col];
        }
    }
    return shat;
}

ComplexVector walnut_apply(const AliasingSpectrum& alias, const ComplexVector& xhat) {
    if (static_cast<int>(xhat.size()) != alias.length)
        throw std::invalid_argument("walnut_apply: spectrum length mismatch");
    const int length = alias.length;
    const int hop = length / alias.stride;
    ComplexVector out(length, Complex(0.0, 0.0));
    for (int n = 0; n < alias.stride; ++n) {
        const auto& term = alias.terms[n];
        for (int k = 0; k < length; ++k) {
            const int shifted = ((k - n * hop) % length + length) % length;
            out[k] += std::conj(term[k]) * xhat[shifted];
        }
    }
    return out;
}

}  // namespace framealias
