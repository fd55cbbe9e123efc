// SPDX-License-Identifier: Apache-2.0
#include "framealias/walnut.hpp"

#include "framealias/errors.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <Eigen/Eigenvalues>

#include <cmath>

using namespace framealias;

namespace {

Signal random_signal(int length, std::uint64_t seed) {
    auto engine = make_engine(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Signal x(length);
    for (auto& v : x) v = Complex(dist(engine), dist(engine));
    return x;
}

}  // namespace

TEST_SUITE("walnut") {

TEST_CASE("stride one: the single aliasing term is the summed power response") {
    const Filterbank fb = oracles::random_filterbank(3, 4, 1, 10, 1, true);
    const AliasingSpectrum alias = aliasing_terms(fb);
    REQUIRE(alias.terms.size() == 1);
    const auto spectra = filter_spectra(fb);
    for (int k = 0; k < fb.signal_length; ++k) {
        double expected = 0.0;
        for (const auto& ws : spectra) expected += std::norm(ws[k]);
        CHECK(std::abs(alias.terms[0][k] - Complex(expected, 0.0)) < 1e-11);
    }
}

TEST_CASE("unit impulse kernel gives the flat unit response") {
    const Filterbank fb = make_filterbank({{Complex(1.0, 0.0)}}, 1, 8);
    const AliasingSpectrum alias = aliasing_terms(fb);
    for (const auto& v : alias.terms[0]) CHECK(std::abs(v - Complex(1.0, 0.0)) < 1e-13);
}

TEST_CASE("response term is real and nonnegative") {
    const Filterbank fb = oracles::random_filterbank(4, 8, 4, 40, 2, true);
    const AliasingSpectrum alias = aliasing_terms(fb);
    double max_response = 0.0;
    for (const auto& v : alias.terms[0]) max_response = std::max(max_response, std::abs(v));
    for (const auto& v : alias.terms[0]) {
        CHECK(std::abs(v.imag()) <= 1e-10 * max_response);
        CHECK(v.real() >= -1e-12 * max_response);
    }
}

TEST_CASE("dense operator: Hermitian, PSD, and banded in frequency") {
    const Filterbank fb = oracles::random_filterbank(4, 8, 4, 40, 3, true);
    const FrameOperatorDense dense = frame_operator_dense(fb);
    CHECK(oracles::max_abs(dense.matrix - dense.matrix.adjoint()) <= 1e-10);

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(dense.matrix, Eigen::EigenvaluesOnly);
    CHECK(solver.eigenvalues()(0) >= -1e-10);

    const int length = fb.signal_length;
    const int hop = length / fb.stride;
    const double scale = oracles::max_abs(dense.spectral);
    for (int k = 0; k < length; ++k)
        for (int l = 0; l < length; ++l)
            if ((k - l) % hop != 0) CHECK(std::abs(dense.spectral(k, l)) <= 1e-10 * scale);
}

TEST_CASE("undecimated dense operator is diagonal in frequency") {
    const Filterbank fb = oracles::random_filterbank(3, 5, 1, 12, 4, true);
    const FrameOperatorDense dense = frame_operator_dense(fb);
    const double scale = oracles::max_abs(dense.spectral);
    for (int k = 0; k < fb.signal_length; ++k)
        for (int l = 0; l < fb.signal_length; ++l)
            if (k != l) CHECK(std::abs(dense.spectral(k, l)) <= 1e-10 * scale);
}

TEST_CASE("aliasing terms are the bands of the brute-force spectral operator") {
    // 4 complex Gaussian kernels of size 8 on C^40 with stride 4.
    const Filterbank fb = oracles::random_filterbank(4, 8, 4, 40, 5, true);
    const AliasingSpectrum alias = aliasing_terms(fb);
    const FrameOperatorDense dense = frame_operator_dense(fb);
    const int length = fb.signal_length;
    const int hop = length / fb.stride;
    const double scale = oracles::max_abs(dense.spectral);
    for (int n = 0; n < fb.stride; ++n)
        for (int col = 0; col < length; ++col) {
            const int row = ((col - n * hop) % length + length) % length;
            CHECK(std::abs(dense.spectral(row, col) - alias.terms[n][col]) <= 1e-10 * scale);
        }
}

TEST_CASE("assembled operator matches the brute force across configurations") {
    int cases = 0;
    for (const int stride : {1, 2, 3, 4, 8})
        for (const int channels : {1, 2, 4})
            for (const int kernel_size : {3, 8}) {
                const int length = stride * ((std::max(2 * kernel_size - 1, 20) + stride - 1) / stride);
                const Filterbank fb = oracles::random_filterbank(
                    channels, kernel_size, stride, length, 100 + 7 * cases, cases % 2 == 0);
                const AliasingSpectrum alias = aliasing_terms(fb);
                const FrameOperatorDense dense = frame_operator_dense(fb);
                const Eigen::MatrixXcd assembled = assemble_shat(alias);
                const double scale = oracles::max_abs(dense.matrix);
                CHECK(oracles::max_abs(assembled - dense.spectral) <= 1e-10 * scale);
                ++cases;
            }
    CHECK(cases == 30);
}

TEST_CASE("stride one assembles to the diagonal response") {
    const Filterbank fb = oracles::random_filterbank(2, 4, 1, 9, 6);
    const Eigen::MatrixXcd assembled = assemble_shat(aliasing_terms(fb));
    for (int k = 0; k < 9; ++k)
        for (int l = 0; l < 9; ++l)
            if (k != l) CHECK(std::abs(assembled(k, l)) == 0.0);
}

TEST_CASE("Walnut action: frequency-domain application via the aliasing terms") {
    const Filterbank fb = oracles::random_filterbank(3, 6, 3, 18, 7, true);
    const AliasingSpectrum alias = aliasing_terms(fb);
    const Signal x = random_signal(fb.signal_length, 8);
    const ComplexVector xhat = dft(x, true);

    const ComplexVector via_terms = walnut_apply(alias, xhat);
    const ComplexVector via_operator = dft(frame_operator_apply(fb, x), true);
    double scale = 0.0;
    for (const auto& v : via_operator) scale = std::max(scale, std::abs(v));
    for (int k = 0; k < fb.signal_length; ++k)
        CHECK(std::abs(via_terms[k] - via_operator[k]) <= 1e-10 * std::max(scale, 1.0));

    // Same action through the assembled matrix.
    const Eigen::MatrixXcd assembled = assemble_shat(alias);
    Eigen::VectorXcd spectrum(fb.signal_length);
    for (int k = 0; k < fb.signal_length; ++k) spectrum(k) = xhat[k];
    const Eigen::VectorXcd mapped = assembled * spectrum;
    for (int k = 0; k < fb.signal_length; ++k)
        CHECK(std::abs(mapped(k) - via_operator[k]) <= 1e-10 * std::max(scale, 1.0));
}

TEST_CASE("unitary transforms of the terms divide the mean by sqrt(L)") {
    const Filterbank fb = oracles::random_filterbank(2, 5, 2, 12, 9);
    const AliasingSpectrum alias = aliasing_terms(fb);
    double mean = 0.0;
    for (const auto& v : alias.terms[0]) mean += v.real();
    mean /= fb.signal_length;
    CHECK(std::abs(alias.fourier_terms[0][0].real() / std::sqrt(12.0) - mean) < 1e-12);
}

TEST_CASE("dense path refuses oversized problems") {
    std::vector<ComplexVector> kernels(1, ComplexVector(3, Complex(1.0, 0.0)));
    const Filterbank fb = make_filterbank(std::move(kernels), 1, 5000);
    CHECK_THROWS_AS(frame_operator_dense(fb), ResourceLimitError);
}

}  // TEST_SUITE
