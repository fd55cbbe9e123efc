// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/signal.hpp"

#include <vector>

namespace framealias {

/// A strided convolutional layer seen as a filterbank: M kernels of length
/// L_K applied by circular convolution and decimated by `stride` on signals
/// of length `signal_length`. The implied full-length filters are the kernels
/// zero-padded on coordinates L_K .. L-1.
struct Filterbank {
    std::vector<ComplexVector> kernels;  // M rows of length L_K
    int stride = 1;
    int signal_length = 0;
    // Effective support width used by kernel-size-aware bounds. Equals the
    // kernel length except for constructions that intentionally relax the
    // support (shifted copies, hybrid filters).
    int support_width = 0;

    int channels() const { return static_cast<int>(kernels.size()); }
    int kernel_size() const { return kernels.empty() ? 0 : static_cast<int>(kernels.front().size()); }
    int coefficient_length() const { return signal_length / stride; }
};

/// Validates shapes and rounds the requested length up to the next multiple
/// of the stride. Requires M >= 1, L_K >= 1, stride >= 1 and L >= L_K.
Filterbank make_filterbank(std::vector<ComplexVector> kernels, int stride, int requested_length);

/// Smallest admissible analysis length for kernel-size-aware statements:
/// d * ceil((2 L_K - 1) / d).
int minimal_length(int kernel_size, int stride);

/// The same kernels re-embedded into a filterbank of the given ambient length
/// (rounded up to the stride; defaults to the minimal admissible length for
/// the effective support width).
Filterbank reembed(const Filterbank& fb, int length = 0);

/// Zero-padded full-length filter w_j.
Signal full_filter(const Filterbank& fb, int channel);

/// Non-unitary DFTs of all full-length filters. This is the convention under
/// which the aliasing terms sample their torus counterparts exactly; see
/// walnut.hpp.
std::vector<ComplexVector> filter_spectra(const Filterbank& fb);

struct CoefficientArray {
    std::vector<ComplexVector> channels;  // M rows of length L/d
};

/// Precomputes the filter transforms once so that repeated applications (for
/// example the dense frame-operator build) avoid re-transforming the filters.
/// All convolution paths in the library go through this class, so one-shot
/// and batched uses produce bit-identical results.
class FrameOperatorApplier {
public:
    explicit FrameOperatorApplier(const Filterbank& fb);

    CoefficientArray analyze(const Signal& x) const;
    Signal synthesize(const CoefficientArray& coeffs) const;
    Signal apply(const Signal& x) const;  // synthesize(analyze(x))

    int signal_length() const { return signal_length_; }

private:
    int stride_;
    int signal_length_;
    std::vector<ComplexVector> analysis_spectra_;   // fft(w_j)
    std::vector<ComplexVector> synthesis_spectra_;  // fft(conj(reversed w_j))
};

/// channel j = (x * w_j) downsampled by the stride.
CoefficientArray analysis(const Filterbank& fb, const Signal& x);

/// Adjoint of analysis: sum_j (c_j upsampled) * conj(reversed w_j).
Signal synthesis(const Filterbank& fb, const CoefficientArray& coeffs);

/// synthesis(fb, analysis(fb, x)); induces a Hermitian PSD matrix.
Signal frame_operator_apply(const Filterbank& fb, const Signal& x);

Complex inner_product(const ComplexVector& a, const ComplexVector& b);
Complex inner_product(const CoefficientArray& a, const CoefficientArray& b);

}  // namespace framealias
