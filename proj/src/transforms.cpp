// SPDX-License-Identifier: Apache-2.0
#include "framealias/transforms.hpp"

#include "framealias/walnut.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace framealias {

Filterbank interlace_multichannel(const MultiChannelFilterbank& mc) {
    const int input_channels = mc.input_channels();
    const int output_channels = mc.output_channels();
    const int kernel_size = mc.kernel_size();
    if (input_channels < 1 || output_channels < 1 || kernel_size < 1)
        throw std::invalid_argument("interlace_multichannel: empty kernel tensor");
    for (const auto& slice : mc.kernels) {
        if (static_cast<int>(slice.size()) != output_channels)
            throw std::invalid_argument("interlace_multichannel: ragged kernel tensor");
        for (const auto& k : slice)
            if (static_cast<int>(k.size()) != kernel_size)
                throw std::invalid_argument("interlace_multichannel: ragged kernel tensor");
    }

    std::vector<ComplexVector> kernels(output_channels,
                                       ComplexVector(input_channels * kernel_size));
    for (int j = 0; j < output_channels; ++j)
        for (int n = 0; n < kernel_size; ++n)
            for (int i = 0; i < input_channels; ++i)
                kernels[j][n * input_channels + i] = mc.kernels[i][j][n];
    return make_filterbank(std::move(kernels), input_channels * mc.stride,
                           input_channels * mc.signal_length);
}

Signal interlace_signals(const std::vector<Signal>& channels) {
    if (channels.empty()) throw std::invalid_argument("interlace_signals: no channels");
    const std::size_t length = channels.front().size();
    for (const auto& x : channels)
        if (x.size() != length) throw std::invalid_argument("interlace_signals: ragged input");
    const std::size_t count = channels.size();
    Signal out(count * length);
    for (std::size_t n = 0; n < length; ++n)
        for (std::size_t i = 0; i < count; ++i) out[n * count + i] = channels[i][n];
    return out;
}

Filterbank gram_dual(const Filterbank& interlaced, int input_channels) {
    if (input_channels < 1 || interlaced.stride % input_channels != 0)
        throw std::invalid_argument("gram_dual: input channel count does not divide the stride");
    const int output_channels = interlaced.channels();          // M
    const int base_stride = interlaced.stride / input_channels; // d
    const int base_length = interlaced.signal_length / input_channels;  // L
    if (interlaced.signal_length % input_channels != 0)
        throw std::invalid_argument("gram_dual: length not divisible by channel count");
    if (static_cast<long>(input_channels) * base_stride <= output_channels)
        throw std::invalid_argument(
            "gram_dual: applies only when C > M/d (analysis into a smaller space)");

    const int dual_count = interlaced.stride;               // C d filters
    const int dual_length = output_channels * (base_length / base_stride);  // M L / d
    const int hops = base_length / base_stride;             // L / d

    std::vector<Signal> filters(interlaced.channels());
    for (int k = 0; k < output_channels; ++k) filters[k] = full_filter(interlaced, k);

    std::vector<ComplexVector> dual(dual_count, ComplexVector(dual_length, Complex(0.0, 0.0)));
    for (int q = 0; q < dual_count; ++q)
        for (int n = 0; n < hops; ++n)
            for (int k = 0; k < output_channels; ++k)
                dual[q][n * output_channels + k] =
                    std::conj(filters[k][n * interlaced.stride + q]);
    return make_filterbank(std::move(dual), output_channels, dual_length);
}

Filterbank uniformize_nonuniform(const NonUniformFilterbank& nfb) {
    if (nfb.kernels.empty() || nfb.kernels.size() != nfb.strides.size())
        throw std::invalid_argument("uniformize_nonuniform: kernel/stride mismatch");
    int common = 1;
    for (const int d : nfb.strides) {
        if (d < 1) throw std::invalid_argument("uniformize_nonuniform: strides must be positive");
        if (nfb.signal_length % d != 0)
            throw std::invalid_argument("uniformize_nonuniform: stride does not divide length");
        common = std::lcm(common, d);
    }
    if (nfb.signal_length % common != 0)
        throw std::invalid_argument("uniformize_nonuniform: lcm does not divide length");

    const int kernel_size = static_cast<int>(nfb.kernels.front().size());
    int max_shift = 0;
    for (std::size_t j = 0; j < nfb.kernels.size(); ++j)
        max_shift = std::max(max_shift, common - nfb.strides[j]);
    const int width = std::min(nfb.signal_length, kernel_size + max_shift);

    std::vector<ComplexVector> kernels;
    for (std::size_t j = 0; j < nfb.kernels.size(); ++j) {
        if (static_cast<int>(nfb.kernels[j].size()) != kernel_size)
            throw std::invalid_argument("uniformize_nonuniform: ragged kernels");
        const int copies = common / nfb.strides[j];
        for (int n = 0; n < copies; ++n) {
            ComplexVector shifted(width, Complex(0.0, 0.0));
            const int offset = n * nfb.strides[j];
            for (int l = 0; l < kernel_size; ++l)
                shifted[(offset + l) % width] += nfb.kernels[j][l];
            kernels.push_back(std::move(shifted));
        }
    }
    Filterbank fb = make_filterbank(std::move(kernels), common, nfb.signal_length);
    fb.support_width = width;
    return fb;
}

Filterbank dilate(const Filterbank& fb, int factor) {
    if (factor < 1) throw std::invalid_argument("dilate: factor must be positive");
    if (factor == 1) return fb;
    if (static_cast<long>(factor) * fb.kernel_size() > fb.signal_length)
        throw std::invalid_argument("dilate: cropping would reach nonzero taps");

    const int width = factor * (fb.kernel_size() - 1) + 1;
    std::vector<ComplexVector> kernels(fb.channels(), ComplexVector(width, Complex(0.0, 0.0)));
    for (int j = 0; j < fb.channels(); ++j)
        for (int l = 0; l < fb.kernel_size(); ++l) kernels[j][l * factor] = fb.kernels[j][l];
    Filterbank out = make_filterbank(std::move(kernels), fb.stride, fb.signal_length);
    out.support_width = width;
    return out;
}

ComplexVector dilated_strided_convolve(const Signal& x, const ComplexVector& kernel, int factor,
                                       int stride) {
    const int length = static_cast<int>(x.size());
    if (length % stride != 0)
        throw std::invalid_argument("dilated_strided_convolve: stride does not divide length");
    ComplexVector out(length / stride, Complex(0.0, 0.0));
    for (std::size_t t = 0; t < out.size(); ++t) {
        const int base = static_cast<int>(t) * stride;
        Complex acc(0.0, 0.0);
        for (std::size_t l = 0; l < kernel.size(); ++l) {
            const int idx = ((base - factor * static_cast<int>(l)) % length + length) % length;
            acc += x[idx] * kernel[l];
        }
        out[t] = acc;
    }
    return out;
}

BandpassBank ideal_bandpass(int channels, int stride, int length, int hop) {
    if (channels < 1 || stride < 1 || length < 1 || hop < 1)
        throw std::invalid_argument("ideal_bandpass: all parameters must be positive");
    if (length % stride != 0)
        throw std::invalid_argument("ideal_bandpass: stride does not divide length");
    const int band = length / stride;
    if (hop > band) throw std::invalid_argument("ideal_bandpass: hop exceeds band width L/d");
    if (static_cast<long>(hop) * (channels - 1) >= length)
        throw std::invalid_argument("ideal_bandpass: band starts exceed the spectrum");

    BandpassBank bank;
    bank.hop = hop;
    bank.stride = stride;
    bank.length = length;
    bank.responses.assign(channels, std::vector<double>(length, 0.0));
    for (int j = 0; j < channels; ++j)
        for (int offset = 0; offset < band; ++offset)
            bank.responses[j][(hop * j + offset) % length] = 1.0;
    return bank;
}

std::vector<Signal> bandpass_filters(const BandpassBank& bank) {
    std::vector<Signal> filters;
    filters.reserve(bank.responses.size());
    for (const auto& response : bank.responses) {
        ComplexVector spectrum(bank.length);
        for (int k = 0; k < bank.length; ++k) spectrum[k] = Complex(response[k], 0.0);
        filters.push_back(idft(spectrum, false));
    }
    return filters;
}

Filterbank hybrid(const BandpassBank& bank, const Filterbank& fb) {
    if (static_cast<int>(bank.responses.size()) != fb.channels() ||
        bank.length != fb.signal_length || bank.stride != fb.stride)
        throw std::invalid_argument("hybrid: band-pass bank and filterbank shapes disagree");

    const int length = fb.signal_length;
    std::vector<ComplexVector> kernels(fb.channels());
    for (int j = 0; j < fb.channels(); ++j) {
        // psi_j * w_j realized in frequency: the product of the indicator with
        // the filter spectrum, transformed back.
        ComplexVector spectrum = fft::forward(full_filter(fb, j));
        for (int k = 0; k < length; ++k) spectrum[k] *= bank.responses[j][k];
        kernels[j] = idft(spectrum, false);
    }
    Filterbank out = make_filterbank(std::move(kernels), fb.stride, length);
    out.support_width = length;
    return out;
}

PainlessReport painless_report(const Filterbank& fb, double tol) {
    const AliasingSpectrum alias = aliasing_terms(fb);
    PainlessReport report;
    report.min_response = std::numeric_limits<double>::infinity();
    for (const auto& v : alias.terms[0]) {
        report.min_response = std::min(report.min_response, v.real());
        report.max_response = std::max(report.max_response, v.real());
    }
    for (int n = 1; n < alias.stride; ++n)
        for (const auto& v : alias.terms[n])
            report.max_alias = std::max(report.max_alias, std::abs(v));

    const double scale = std::max(report.max_response, 0.0);
    report.is_painless = report.max_alias <= tol * std::max(scale, 1e-300);
    report.frame = report.is_painless && report.min_response > tol * scale;
    report.tight =
        report.frame && (report.max_response - report.min_response) <= tol * scale;
    return report;
}

}  // namespace framealias
