// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/filterbank.hpp"

#include <cstdint>
#include <random>

namespace framealias {

/// SplitMix64 mix of a base seed and a stream index. Used to derive
/// independent per-draw generators so that serial and parallel Monte Carlo
/// runs visit identical streams.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index = 0);

/// M x L_K i.i.d. real Gaussian kernels N(mean, variance), zero imaginary part.
std::vector<ComplexVector> gaussian_kernels(int channels, int kernel_size, double mean,
                                            double variance, std::mt19937_64& engine);

/// M x L_K i.i.d. circular complex Gaussian kernels with E|w|^2 = variance.
std::vector<ComplexVector> complex_gaussian_kernels(int channels, int kernel_size,
                                                    double variance, std::mt19937_64& engine);

/// M x L_K i.i.d. real uniform kernels on [a, b], zero imaginary part.
std::vector<ComplexVector> uniform_kernels(int channels, int kernel_size, double a, double b,
                                           std::mt19937_64& engine);

/// Unit-norm complex Gaussian probe vector.
Signal random_unit_signal(int length, std::mt19937_64& engine);

}  // namespace framealias
