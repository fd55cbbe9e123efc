// SPDX-License-Identifier: Apache-2.0
#include "framealias/randstats.hpp"

#include "framealias/errors.hpp"
#include "framealias/parallel.hpp"
#include "framealias/random.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

namespace framealias {
namespace {

void validate(const RandomKernelSpec& spec) {
    if (spec.channels < 1 || spec.kernel_size < 1 || spec.stride < 1)
        throw std::invalid_argument("random kernel spec: shape fields must be positive");
    if (spec.length < spec.kernel_size || spec.length % spec.stride != 0)
        throw std::invalid_argument("random kernel spec: invalid length");
}

double spec_mean(const RandomKernelSpec& spec) {
    return spec.distribution == KernelDistribution::gaussian ? spec.mean
                                                             : 0.5 * (spec.lower + spec.upper);
}

}  // namespace

double RandomKernelSpec::second_moment() const {
    if (distribution == KernelDistribution::gaussian) return variance;
    const double width = upper - lower;
    return width * width / 12.0;
}

Eigen::MatrixXcd expected_aliasing(const RandomKernelSpec& spec) {
    validate(spec);
    if (spec_mean(spec) != 0.0)
        throw UnsupportedSpecError("expected_aliasing: closed form requires zero mean");
    const double sigma2 = spec.second_moment();
    const double scale = sigma2 * spec.channels / static_cast<double>(spec.stride);

    Eigen::MatrixXcd expected(spec.stride, spec.length);
    for (int n = 0; n < spec.stride; ++n) {
        Complex sum(0.0, 0.0);
        const int period = spec.stride / std::gcd(n, spec.stride);
        if (n == 0) {
            sum = Complex(spec.kernel_size, 0.0);
        } else if (spec.kernel_size % period == 0) {
            sum = Complex(0.0, 0.0);  // full periods of roots of unity
        } else {
            for (int l = 0; l < spec.kernel_size; ++l)
                sum += std::polar(1.0, -2.0 * std::numbers::pi * l * n / spec.stride);
        }
        expected.row(n).setConstant(scale * sum);
    }
    return expected;
}

double fejer_ratio(long long numerator, long long denominator, int kernel_size) {
    // Reduce t = num/den to r = t - round(t) in exact integer arithmetic;
    // sin^2 is 1-periodic in both factors of the ratio.
    const long long shifted = 2 * numerator + denominator;
    long long quotient = shifted / (2 * denominator);
    if (shifted % (2 * denominator) < 0) --quotient;  // floor for negatives
    const long long reduced = numerator - quotient * denominator;
    if (reduced == 0) return static_cast<double>(kernel_size) * kernel_size;
    const double r = static_cast<double>(reduced) / static_cast<double>(denominator);
    const double s = std::sin(std::numbers::pi * r);
    const double sk = std::sin(kernel_size * std::numbers::pi * r);
    return (sk * sk) / (s * s);
}

Eigen::MatrixXd variance_aliasing(const RandomKernelSpec& spec) {
    validate(spec);
    if (spec.distribution != KernelDistribution::gaussian)
        throw UnsupportedSpecError("variance_aliasing: closed form is Gaussian-only");
    if (spec.mean != 0.0)
        throw UnsupportedSpecError("variance_aliasing: closed form requires zero mean");

    const double sigma2 = spec.variance;
    const double scale =
        sigma2 * sigma2 * spec.channels / (static_cast<double>(spec.stride) * spec.stride);
    const double lk2 = static_cast<double>(spec.kernel_size) * spec.kernel_size;

    Eigen::MatrixXd variance(spec.stride, spec.length);
    for (int n = 0; n < spec.stride; ++n)
        for (int k = 0; k < spec.length; ++k) {
            // t = 2k/L - n/d as the exact rational (2kd - nL) / (Ld).
            const long long num = 2LL * k * spec.stride - static_cast<long long>(n) * spec.length;
            const long long den = static_cast<long long>(spec.length) * spec.stride;
            variance(n, k) = scale * (fejer_ratio(num, den, spec.kernel_size) + lk2);
        }
    return variance;
}

std::pair<double, double> variance_bounds(const RandomKernelSpec& spec) {
    const double sigma2 = spec.variance;
    const double lk2 = static_cast<double>(spec.kernel_size) * spec.kernel_size;
    const double base =
        sigma2 * sigma2 * spec.channels * lk2 / (static_cast<double>(spec.stride) * spec.stride);
    return {base, 2.0 * base};
}

MomentTable closed_form_moments(const RandomKernelSpec& spec) {
    MomentTable table;
    table.expected = expected_aliasing(spec);
    table.variance = variance_aliasing(spec);
    table.bounds = variance_bounds(spec);
    return table;
}

MomentTable monte_carlo_moments(const RandomKernelSpec& spec, long draws, std::uint64_t seed) {
    validate(spec);
    if (draws < 2) throw std::invalid_argument("monte_carlo_moments: need at least 2 draws");

    const int d = spec.stride;
    const int length = spec.length;
    const int hop = length / d;
    const int blocks = static_cast<int>(std::min<long>(draws, 100));

    struct BlockAccumulator {
        Eigen::MatrixXcd sum;      // sum of G_n[k]
        Eigen::MatrixXd sum_sq;    // sum of |G_n[k]|^2
        long count = 0;
    };
    std::vector<BlockAccumulator> acc(blocks);
    for (auto& a : acc) {
        a.sum = Eigen::MatrixXcd::Zero(d, length);
        a.sum_sq = Eigen::MatrixXd::Zero(d, length);
    }

    parallel_for(blocks, [&](std::size_t b) {
        const long begin = static_cast<long>(b) * draws / blocks;
        const long end = static_cast<long>(b + 1) * draws / blocks;
        auto& block = acc[b];
        block.count = end - begin;
        ComplexVector padded(length);
        std::vector<ComplexVector> spectra(spec.channels);
        for (long draw = begin; draw < end; ++draw) {
            std::mt19937_64 engine = make_engine(seed, static_cast<std::uint64_t>(draw));
            const auto kernels =
                spec.distribution == KernelDistribution::gaussian
                    ? gaussian_kernels(spec.channels, spec.kernel_size, spec.mean, spec.variance,
                                       engine)
                    : uniform_kernels(spec.channels, spec.kernel_size, spec.lower, spec.upper,
                                      engine);
            for (int j = 0; j < spec.channels; ++j) {
                std::fill(padded.begin(), padded.end(), Complex(0.0, 0.0));
                for (int l = 0; l < spec.kernel_size; ++l) padded[l] = kernels[j][l];
                spectra[j] = fft::forward(padded);
            }
            const double inv_d = 1.0 / static_cast<double>(d);
            for (int n = 0; n < d; ++n) {
                const int offset = n * hop;
                for (int k = 0; k < length; ++k) {
                    Complex g(0.0, 0.0);
                    const int shifted = (k - offset + length) % length;
                    for (int j = 0; j < spec.channels; ++j)
                        g += spectra[j][k] * std::conj(spectra[j][shifted]);
                    g *= inv_d;
                    block.sum(n, k) += g;
                    block.sum_sq(n, k) += std::norm(g);
                }
            }
        }
    });

    // Combine blocks in index order so the result does not depend on thread
    // scheduling.
    Eigen::MatrixXcd total_sum = Eigen::MatrixXcd::Zero(d, length);
    Eigen::MatrixXd total_sq = Eigen::MatrixXd::Zero(d, length);
    for (const auto& block : acc) {
        total_sum += block.sum;
        total_sq += block.sum_sq;
    }

    MomentTable table;
    table.draws = draws;
    const double n_draws = static_cast<double>(draws);
    table.expected = total_sum / n_draws;
    table.variance.resize(d, length);
    table.se_mean.resize(d, length);
    table.se_variance.resize(d, length);
    for (int n = 0; n < d; ++n)
        for (int k = 0; k < length; ++k) {
            const double centered =
                total_sq(n, k) - n_draws * std::norm(table.expected(n, k));
            table.variance(n, k) = centered / (n_draws - 1.0);
            table.se_mean(n, k) = std::sqrt(std::max(table.variance(n, k), 0.0) / n_draws);
        }

    // Standard error of the variance from the spread of per-block variance
    // estimates (computed against the global mean).
    for (int n = 0; n < d; ++n)
        for (int k = 0; k < length; ++k) {
            double mean_vb = 0.0;
            std::vector<double> per_block(acc.size());
            for (std::size_t b = 0; b < acc.size(); ++b) {
                const auto& block = acc[b];
                const Complex m = table.expected(n, k);
                const double centered = block.sum_sq(n, k) -
                                        2.0 * (std::conj(m) * block.sum(n, k)).real() +
                                        block.count * std::norm(m);
                per_block[b] = centered / static_cast<double>(block.count);
                mean_vb += per_block[b];
            }
            mean_vb /= static_cast<double>(acc.size());
            double spread = 0.0;
            for (const double vb : per_block) spread += (vb - mean_vb) * (vb - mean_vb);
            spread = acc.size() > 1 ? spread / static_cast<double>(acc.size() - 1) : 0.0;
            table.se_variance(n, k) = std::sqrt(spread / static_cast<double>(acc.size()));
        }

    if (spec.distribution == KernelDistribution::gaussian && spec.mean == 0.0)
        table.bounds = variance_bounds(spec);
    return table;
}

}  // namespace framealias
