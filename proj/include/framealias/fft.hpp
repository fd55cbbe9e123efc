// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <complex>
#include <vector>

namespace framealias {

using Complex = std::complex<double>;
using ComplexVector = std::vector<Complex>;

namespace fft {

/// Unnormalized forward transform: out[k] = sum_n in[n] exp(-2*pi*i*k*n/N).
ComplexVector forward(const ComplexVector& in);

/// Unnormalized backward transform: out[n] = sum_k in[k] exp(+2*pi*i*k*n/N).
ComplexVector backward(const ComplexVector& in);

void forward_inplace(ComplexVector& data);
void backward_inplace(ComplexVector& data);

}  // namespace fft
}  // namespace framealias
