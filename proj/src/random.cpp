// SPDX-License-Identifier: Apache-2.0
#include "framealias/random.hpp"

#include <cmath>

namespace framealias {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t seed, std::uint64_t index) {
    return std::mt19937_64(derive_seed(seed, index));
}

std::vector<ComplexVector> gaussian_kernels(int channels, int kernel_size, double mean,
                                            double variance, std::mt19937_64& engine) {
    std::normal_distribution<double> dist(mean, std::sqrt(variance));
    std::vector<ComplexVector> kernels(channels, ComplexVector(kernel_size));
    for (auto& row : kernels)
        for (auto& v : row) v = Complex(dist(engine), 0.0);
    return kernels;
}

std::vector<ComplexVector> complex_gaussian_kernels(int channels, int kernel_size,
                                                    double variance, std::mt19937_64& engine) {
    std::normal_distribution<double> dist(0.0, std::sqrt(variance / 2.0));
    std::vector<ComplexVector> kernels(channels, ComplexVector(kernel_size));
    for (auto& row : kernels)
        for (auto& v : row) {
            const double re = dist(engine);
            const double im = dist(engine);
            v = Complex(re, im);
        }
    return kernels;
}

std::vector<ComplexVector> uniform_kernels(int channels, int kernel_size, double a, double b,
                                           std::mt19937_64& engine) {
    std::uniform_real_distribution<double> dist(a, b);
    std::vector<ComplexVector> kernels(channels, ComplexVector(kernel_size));
    for (auto& row : kernels)
        for (auto& v : row) v = Complex(dist(engine), 0.0);
    return kernels;
}

Signal random_unit_signal(int length, std::mt19937_64& engine) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Signal x(length);
    for (auto& v : x) {
        const double re = dist(engine);
        const double im = dist(engine);
        v = Complex(re, im);
    }
    const double scale = 1.0 / norm2(x);
    for (auto& v : x) v *= scale;
    return x;
}

}  // namespace framealias
