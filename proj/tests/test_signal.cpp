// SPDX-License-Identifier: Apache-2.0
#include "framealias/signal.hpp"

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace framealias;

namespace {

double max_abs_diff(const ComplexVector& a, const ComplexVector& b) {
    REQUIRE(a.size() == b.size());
    double dev = 0.0;
    for (std::size_t n = 0; n < a.size(); ++n) dev = std::max(dev, std::abs(a[n] - b[n]));
    return dev;
}

ComplexVector random_signal(int length, std::uint64_t seed) {
    auto engine = make_engine(seed);
    std::normal_distribution<double> dist(0.0, 1.0);
    ComplexVector x(length);
    for (auto& v : x) v = Complex(dist(engine), dist(engine));
    return x;
}

}  // namespace

TEST_SUITE("signal") {

TEST_CASE("convolving with the unit impulse is the identity") {
    const ComplexVector x = random_signal(9, 1);
    CHECK(max_abs_diff(circular_convolve(x, unit_impulse(9)), x) < 1e-13);
}

TEST_CASE("convolving an impulse at m shifts the filter by m") {
    const ComplexVector w = random_signal(11, 2);
    for (const int m : {0, 1, 5, 10}) {
        const ComplexVector out = circular_convolve(unit_impulse(11, m), w);
        CHECK(max_abs_diff(out, shift_signal(w, m)) < 1e-13);
    }
}

TEST_CASE("convolution matches the double-loop oracle and commutes") {
    const ComplexVector x = random_signal(12, 3);
    const ComplexVector w = random_signal(12, 4);
    const ComplexVector out = circular_convolve(x, w);
    CHECK(max_abs_diff(out, oracles::naive_convolve(x, w)) < 1e-12);
    CHECK(max_abs_diff(out, circular_convolve(w, x)) < 1e-12);
}

TEST_CASE("convolution rejects mismatched lengths") {
    CHECK_THROWS_AS(circular_convolve(random_signal(8, 5), random_signal(9, 6)),
                    std::invalid_argument);
}

TEST_CASE("unitary transform of the impulse is flat") {
    const ComplexVector out = dft(unit_impulse(16), true);
    for (const auto& v : out) CHECK(std::abs(v - Complex(0.25, 0.0)) < 1e-14);
}

TEST_CASE("unitary transform of the constant vector concentrates at zero") {
    const ComplexVector out = dft(ComplexVector(4, Complex(1.0, 0.0)), true);
    CHECK(std::abs(out[0] - Complex(2.0, 0.0)) < 1e-14);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(out[k]) < 1e-14);
}

TEST_CASE("transform round trips under both normalizations") {
    for (const int length : {1, 2, 7, 32}) {
        const ComplexVector x = random_signal(length, 10 + length);
        for (const bool unitary : {true, false}) {
            const double dev = max_abs_diff(idft(dft(x, unitary), unitary), x);
            CHECK(dev <= 1e-12 * norm2(x));
        }
    }
}

TEST_CASE("convolution theorem carries the sqrt(L) factor under the unitary convention") {
    const int length = 20;
    const ComplexVector x = random_signal(length, 21);
    const ComplexVector w = random_signal(length, 22);
    const ComplexVector lhs = dft(circular_convolve(x, w), true);
    const ComplexVector xs = dft(x, true);
    const ComplexVector ws = dft(w, true);
    const double root = std::sqrt(static_cast<double>(length));
    for (int k = 0; k < length; ++k)
        CHECK(std::abs(lhs[k] - root * xs[k] * ws[k]) < 1e-11);
}

TEST_CASE("stride one reduces to plain convolution") {
    const ComplexVector x = random_signal(10, 30);
    const ComplexVector w = random_signal(10, 31);
    CHECK(max_abs_diff(strided_convolve(x, w, 1), circular_convolve(x, w)) == 0.0);
}

TEST_CASE("strided convolution of an impulse picks every d-th filter tap") {
    const ComplexVector w = random_signal(8, 32);
    const ComplexVector out = strided_convolve(unit_impulse(8), w, 2);
    REQUIRE(out.size() == 4);
    for (int n = 0; n < 4; ++n) CHECK(std::abs(out[n] - w[2 * n]) < 1e-13);
}

TEST_CASE("strided convolution equals downsampled convolution sample-for-sample") {
    const ComplexVector x = random_signal(24, 33);
    const ComplexVector w = random_signal(24, 34);
    const ComplexVector expected = oracles::downsample(circular_convolve(x, w), 4);
    const ComplexVector out = strided_convolve(x, w, 4);
    REQUIRE(out.size() == expected.size());
    for (std::size_t n = 0; n < out.size(); ++n) CHECK(out[n] == expected[n]);
}

TEST_CASE("stride must divide the length") {
    CHECK_THROWS_AS(strided_convolve(random_signal(10, 35), random_signal(10, 36), 4),
                    std::invalid_argument);
}

}  // TEST_SUITE
