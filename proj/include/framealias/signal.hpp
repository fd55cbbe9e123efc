// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/fft.hpp"

#include <cstddef>

namespace framealias {

/// Finite complex signal with circular (periodic) indexing.
using Signal = ComplexVector;

/// Discrete Fourier transform.
///
/// unitary=true applies the 1/sqrt(L) factor on the forward transform;
/// unitary=false applies no forward normalization (the inverse then carries
/// the full 1/L). idft(dft(x, u), u) == x for both conventions.
Signal dft(const Signal& x, bool unitary);
Signal idft(const Signal& x, bool unitary);

/// Circular convolution (x * w)[n] = sum_l x[l] w[(n - l) mod L].
/// Both inputs must have the same length.
Signal circular_convolve(const Signal& x, const Signal& w);

/// Strided convolution: circular convolution followed by keeping every d-th
/// sample. d must divide the common length.
ComplexVector strided_convolve(const Signal& x, const Signal& w, int stride);

/// Cyclic translation (shift_signal(x, a))[n] = x[(n - a) mod L].
Signal shift_signal(const Signal& x, long offset);

/// x[(n/d)] at multiples of d, zero elsewhere; output length = d * len(x).
Signal upsample(const Signal& x, int factor);

Signal unit_impulse(std::size_t length, std::size_t position = 0);

/// conj(x[-n mod L]): the involution turning convolution into correlation.
Signal conj_reverse(const Signal& x);

double norm2(const ComplexVector& x);

}  // namespace framealias
