// SPDX-License-Identifier: Apache-2.0
#include "framealias/filterbank.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace framealias;

namespace {

/// M = L modulated kernels scaled so that the bank is Parseval for d = 1.
Filterbank full_dft_filterbank(int length) {
    std::vector<ComplexVector> kernels(length, ComplexVector(length));
    for (int j = 0; j < length; ++j)
        for (int n = 0; n < length; ++n)
            kernels[j][n] = std::polar(1.0 / length,
                                       -2.0 * std::numbers::pi * static_cast<double>(j) * n / length);
    return make_filterbank(std::move(kernels), 1, length);
}

Signal random_signal(int length, std::uint64_t seed) {
    auto engine = make_engine(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    Signal x(length);
    for (auto& v : x) v = Complex(dist(engine), dist(engine));
    return x;
}

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    REQUIRE(a.size() == b.size());
    double dev = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) dev = std::max(dev, std::abs(a[n] - b[n]));
    return dev;
}

}  // namespace

TEST_SUITE("filterbank") {

TEST_CASE("construction rounds the requested length up to the stride") {
    const Filterbank fb = oracles::random_filterbank(2, 3, 4, 10, 1);
    CHECK(fb.signal_length == 12);
    CHECK(fb.support_width == 3);
    CHECK(fb.coefficient_length() == 3);
}

TEST_CASE("construction validates shapes") {
    CHECK_THROWS_AS(make_filterbank({}, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_filterbank({ComplexVector(4), ComplexVector(3)}, 1, 8),
                    std::invalid_argument);
    CHECK_THROWS_AS(make_filterbank({ComplexVector(9)}, 1, 8), std::invalid_argument);
    CHECK_THROWS_AS(make_filterbank({ComplexVector(4)}, 0, 8), std::invalid_argument);
}

TEST_CASE("minimal admissible length") {
    CHECK(minimal_length(8, 2) == 16);
    CHECK(minimal_length(8, 3) == 15);
    CHECK(minimal_length(1, 1) == 1);
    CHECK(minimal_length(16, 4) == 32);
}

TEST_CASE("analysis with a unit impulse kernel reproduces the input") {
    const Filterbank fb = make_filterbank({{Complex(1.0, 0.0)}}, 1, 8);
    const Signal x = random_signal(8, 2);
    const CoefficientArray coeffs = analysis(fb, x);
    REQUIRE(coeffs.channels.size() == 1);
    CHECK(max_abs_diff(coeffs.channels[0], x) < 1e-13);
}

TEST_CASE("analysis with stride two keeps the even samples") {
    const Filterbank fb = make_filterbank({{Complex(1.0, 0.0)}}, 2, 8);
    const Signal x = random_signal(8, 3);
    const CoefficientArray coeffs = analysis(fb, x);
    REQUIRE(coeffs.channels[0].size() == 4);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(coeffs.channels[0][n] - x[2 * n]) < 1e-13);
}

TEST_CASE("analysis matches the naive per-channel oracle") {
    const Filterbank fb = oracles::random_filterbank(3, 5, 2, 12, 4, true);
    const Signal x = random_signal(12, 5);
    const CoefficientArray coeffs = analysis(fb, x);
    for (int j = 0; j < fb.channels(); ++j) {
        const ComplexVector expected = oracles::naive_analysis_channel(fb, x, j);
        CHECK(max_abs_diff(coeffs.channels[j], expected) < 1e-12);
    }
}

TEST_CASE("analysis rejects signals of the wrong length") {
    const Filterbank fb = oracles::random_filterbank(2, 3, 2, 8, 6);
    CHECK_THROWS_AS(analysis(fb, random_signal(10, 7)), std::invalid_argument);
}

TEST_CASE("synthesis is the adjoint of analysis") {
    const Filterbank fb = oracles::random_filterbank(3, 4, 2, 10, 8, true);
    for (int trial = 0; trial < 50; ++trial) {
        const Signal x = random_signal(fb.signal_length, 100 + trial);
        CoefficientArray c;
        for (int j = 0; j < fb.channels(); ++j)
            c.channels.push_back(random_signal(fb.coefficient_length(), 200 + 7 * trial + j));
        const Complex lhs = inner_product(analysis(fb, x), c);
        const Complex rhs = inner_product(x, synthesis(fb, c));
        CHECK(std::abs(lhs - rhs) < 1e-10);
    }
}

TEST_CASE("synthesis with a trivial bank returns the coefficients") {
    const Filterbank fb = make_filterbank({{Complex(1.0, 0.0)}}, 1, 6);
    CoefficientArray c;
    c.channels.push_back(random_signal(6, 9));
    CHECK(max_abs_diff(synthesis(fb, c), c.channels[0]) < 1e-13);
}

TEST_CASE("synthesis agrees with the conjugate-transposed analysis matrix") {
    const Filterbank fb = oracles::random_filterbank(2, 4, 3, 9, 10, true);
    const Eigen::MatrixXcd theta = oracles::analysis_matrix(fb);
    CoefficientArray c;
    Eigen::VectorXcd stacked(theta.rows());
    int row = 0;
    for (int j = 0; j < fb.channels(); ++j) {
        c.channels.push_back(random_signal(fb.coefficient_length(), 20 + j));
        for (const auto& v : c.channels.back()) stacked(row++) = v;
    }
    const Eigen::VectorXcd expected = theta.adjoint() * stacked;
    const Signal out = synthesis(fb, c);
    for (int n = 0; n < fb.signal_length; ++n) CHECK(std::abs(out[n] - expected(n)) < 1e-11);
}

TEST_CASE("synthesis validates coefficient shapes") {
    const Filterbank fb = oracles::random_filterbank(2, 3, 2, 8, 11);
    CoefficientArray bad;
    bad.channels.assign(1, ComplexVector(4));
    CHECK_THROWS_AS(synthesis(fb, bad), std::invalid_argument);
    bad.channels.assign(2, ComplexVector(3));
    CHECK_THROWS_AS(synthesis(fb, bad), std::invalid_argument);
}

TEST_CASE("frame operator of the full modulated bank is the identity") {
    const Filterbank fb = full_dft_filterbank(8);
    const Signal x = random_signal(8, 12);
    CHECK(max_abs_diff(frame_operator_apply(fb, x), x) < 1e-12);
}

TEST_CASE("frame operator of the trivial bank is the identity") {
    const Filterbank fb = make_filterbank({{Complex(1.0, 0.0)}}, 1, 8);
    const Signal x = random_signal(8, 13);
    CHECK(max_abs_diff(frame_operator_apply(fb, x), x) < 1e-13);
}

TEST_CASE("frame operator equals synthesis after analysis") {
    const Filterbank fb = oracles::random_filterbank(4, 5, 2, 14, 14, true);
    const Signal x = random_signal(14, 15);
    CHECK(max_abs_diff(frame_operator_apply(fb, x), synthesis(fb, analysis(fb, x))) == 0.0);
}

TEST_CASE("the induced dense operator is Hermitian") {
    const Filterbank fb = oracles::random_filterbank(2, 3, 3, 12, 16, true);
    Eigen::MatrixXcd s(fb.signal_length, fb.signal_length);
    for (int col = 0; col < fb.signal_length; ++col) {
        const Signal out = frame_operator_apply(fb, unit_impulse(fb.signal_length, col));
        for (int r = 0; r < fb.signal_length; ++r) s(r, col) = out[r];
    }
    CHECK(oracles::max_abs(s - s.adjoint()) <= 1e-10);
}

}  // TEST_SUITE
