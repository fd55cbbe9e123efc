// SPDX-License-Identifier: Apache-2.0
#include "framealias/signal.hpp"

#include <cmath>
#include <stdexcept>

namespace framealias {

Signal dft(const Signal& x, bool unitary) {
    Signal out = fft::forward(x);
    if (unitary) {
        const double scale = 1.0 / std::sqrt(static_cast<double>(x.size()));
        for (auto& v : out) v *= scale;
    }
    return out;
}

Signal idft(const Signal& x, bool unitary) {
    Signal out = fft::backward(x);
    const double scale = unitary ? 1.0 / std::sqrt(static_cast<double>(x.size()))
                                 : 1.0 / static_cast<double>(x.size());
    for (auto& v : out) v *= scale;
    return out;
}

Signal circular_convolve(const Signal& x, const Signal& w) {
    if (x.size() != w.size())
        throw std::invalid_argument("circular_convolve: length mismatch");
    Signal xs = fft::forward(x);
    const Signal ws = fft::forward(w);
    for (std::size_t k = 0; k < xs.size(); ++k) xs[k] *= ws[k];
    fft::backward_inplace(xs);
    const double scale = 1.0 / static_cast<double>(xs.size());
    for (auto& v : xs) v *= scale;
    return xs;
}

ComplexVector strided_convolve(const Signal& x, const Signal& w, int stride) {
    if (stride < 1) throw std::invalid_argument("strided_convolve: stride must be positive");
    if (x.size() % static_cast<std::size_t>(stride) != 0)
        throw std::invalid_argument("strided_convolve: stride does not divide signal length");
    const Signal full = circular_convolve(x, w);
    ComplexVector out(x.size() / static_cast<std::size_t>(stride));
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = full[n * stride];
    return out;
}

Signal shift_signal(const Signal& x, long offset) {
    const long length = static_cast<long>(x.size());
    Signal out(x.size());
    for (long n = 0; n < length; ++n) {
        long src = (n - offset) % length;
        if (src < 0) src += length;
        out[n] = x[src];
    }
    return out;
}

Signal upsample(const Signal& x, int factor) {
    if (factor < 1) throw std::invalid_argument("upsample: factor must be positive");
    Signal out(x.size() * static_cast<std::size_t>(factor), Complex(0.0, 0.0));
    for (std::size_t n = 0; n < x.size(); ++n) out[n * factor] = x[n];
    return out;
}

Signal unit_impulse(std::size_t length, std::size_t position) {
    if (length == 0) throw std::invalid_argument("unit_impulse: empty signal");
    Signal out(length, Complex(0.0, 0.0));
    out[position % length] = Complex(1.0, 0.0);
    return out;
}

Signal conj_reverse(const Signal& x) {
    const std::size_t length = x.size();
    Signal out(length);
    for (std::size_t n = 0; n < length; ++n)
        out[n] = std::conj(x[(length - n) % length]);
    return out;
}

double norm2(const ComplexVector& x) {
    double acc = 0.0;
    for (const auto& v : x) acc += std::norm(v);
    return std::sqrt(acc);
}

}  // namespace framealias
