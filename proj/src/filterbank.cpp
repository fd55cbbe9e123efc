// SPDX-License-Identifier: Apache-2.0
#include "framealias/filterbank.hpp"

#include <stdexcept>

namespace framealias {

Filterbank make_filterbank(std::vector<ComplexVector> kernels, int stride, int requested_length) {
    if (kernels.empty()) throw std::invalid_argument("make_filterbank: need at least one kernel");
    const std::size_t kernel_size = kernels.front().size();
    if (kernel_size == 0) throw std::invalid_argument("make_filterbank: empty kernel");
    for (const auto& k : kernels)
        if (k.size() != kernel_size)
            throw std::invalid_argument("make_filterbank: ragged kernel matrix");
    if (stride < 1) throw std::invalid_argument("make_filterbank: stride must be positive");
    if (requested_length < static_cast<int>(kernel_size))
        throw std::invalid_argument("make_filterbank: signal length below kernel size");

    Filterbank fb;
    fb.kernels = std::move(kernels);
    fb.stride = stride;
    // Round up to the next multiple of the stride.
    fb.signal_length = stride * ((requested_length + stride - 1) / stride);
    fb.support_width = static_cast<int>(kernel_size);
    return fb;
}

int minimal_length(int kernel_size, int stride) {
    const int needed = 2 * kernel_size - 1;
    return stride * ((needed + stride - 1) / stride);
}

Filterbank reembed(const Filterbank& fb, int length) {
    if (length == 0) length = minimal_length(fb.support_width, fb.stride);
    if (length < fb.kernel_size())
        throw std::invalid_argument("reembed: target length below kernel size");
    Filterbank out = fb;
    out.signal_length = fb.stride * ((length + fb.stride - 1) / fb.stride);
    return out;
}

Signal full_filter(const Filterbank& fb, int channel) {
    Signal w(fb.signal_length, Complex(0.0, 0.0));
    const auto& kernel = fb.kernels.at(channel);
    for (std::size_t l = 0; l < kernel.size(); ++l) w[l] = kernel[l];
    return w;
}

std::vector<ComplexVector> filter_spectra(const Filterbank& fb) {
    std::vector<ComplexVector> spectra(fb.channels());
    for (int j = 0; j < fb.channels(); ++j)
        spectra[j] = fft::forward(full_filter(fb, j));
    return spectra;
}

FrameOperatorApplier::FrameOperatorApplier(const Filterbank& fb)
    : stride_(fb.stride), signal_length_(fb.signal_length) {
    analysis_spectra_.reserve(fb.channels());
    synthesis_spectra_.reserve(fb.channels());
    for (int j = 0; j < fb.channels(); ++j) {
        const Signal w = full_filter(fb, j);
        analysis_spectra_.push_back(fft::forward(w));
        synthesis_spectra_.push_back(fft::forward(conj_reverse(w)));
    }
}

CoefficientArray FrameOperatorApplier::analyze(const Signal& x) const {
    if (static_cast<int>(x.size()) != signal_length_)
        throw std::invalid_argument("analysis: signal length mismatch");
    const ComplexVector xs = fft::forward(x);
    const double scale = 1.0 / static_cast<double>(signal_length_);
    CoefficientArray out;
    out.channels.reserve(analysis_spectra_.size());
    ComplexVector product(signal_length_);
    for (const auto& ws : analysis_spectra_) {
        for (int k = 0; k < signal_length_; ++k) product[k] = xs[k] * ws[k];
        ComplexVector conv = fft::backward(product);
        ComplexVector channel(signal_length_ / stride_);
        for (std::size_t n = 0; n < channel.size(); ++n) channel[n] = conv[n * stride_] * scale;
        out.channels.push_back(std::move(channel));
    }
    return out;
}

Signal FrameOperatorApplier::synthesize(const CoefficientArray& coeffs) const {
    if (coeffs.channels.size() != synthesis_spectra_.size())
        throw std::invalid_argument("synthesis: channel count mismatch");
    const std::size_t per_channel = static_cast<std::size_t>(signal_length_ / stride_);
    ComplexVector acc(signal_length_, Complex(0.0, 0.0));
    for (std::size_t j = 0; j < coeffs.channels.size(); ++j) {
        if (coeffs.channels[j].size() != per_channel)
            throw std::invalid_argument("synthesis: channel length mismatch");
        ComplexVector up = fft::forward(upsample(coeffs.channels[j], stride_));
        const auto& ws = synthesis_spectra_[j];
        for (int k = 0; k < signal_length_; ++k) acc[k] += up[k] * ws[k];
    }
    fft::backward_inplace(acc);
    const double scale = 1.0 / static_cast<double>(signal_length_);
    for (auto& v : acc) v *= scale;
    return acc;
}

Signal FrameOperatorApplier::apply(const Signal& x) const { return synthesize(analyze(x)); }

CoefficientArray analysis(const Filterbank& fb, const Signal& x) {
    return FrameOperatorApplier(fb).analyze(x);
}

Signal synthesis(const Filterbank& fb, const CoefficientArray& coeffs) {
    return FrameOperatorApplier(fb).synthesize(coeffs);
}

Signal frame_operator_apply(const Filterbank& fb, const Signal& x) {
    return FrameOperatorApplier(fb).apply(x);
}

Complex inner_product(const ComplexVector& a, const ComplexVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("inner_product: length mismatch");
    Complex acc(0.0, 0.0);
    for (std::size_t n = 0; n < a.size(); ++n) acc += a[n] * std::conj(b[n]);
    return acc;
}

Complex inner_product(const CoefficientArray& a, const CoefficientArray& b) {
    if (a.channels.size() != b.channels.size())
        throw std::invalid_argument("inner_product: channel count mismatch");
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < a.channels.size(); ++j)
        acc += inner_product(a.channels[j], b.channels[j]);
    return acc;
}

}  // namespace framealias
