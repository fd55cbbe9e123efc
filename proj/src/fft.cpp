// SPDX-License-Identifier: Apache-2.0
#include "framealias/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <stdexcept>

namespace framealias {
namespace fft {
namespace {

// Plans are created once per length and shared. Planning is not thread-safe
// in FFTW, executing through the new-array interface is. FFTW_UNALIGNED keeps
// the plans valid for arbitrarily aligned std::vector storage, and
// FFTW_ESTIMATE keeps plan selection deterministic.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan bwd = nullptr;
};

std::mutex plan_mutex;
std::map<std::size_t, PlanPair>& plan_cache() {
    static std::map<std::size_t, PlanPair> cache;
    return cache;
}

const PlanPair& plans_for(std::size_t n) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<std::complex<double>> probe(n);
    auto* raw = reinterpret_cast<fftw_complex*>(probe.data());
    PlanPair pair;
    const unsigned flags = FFTW_ESTIMATE | FFTW_UNALIGNED;
    pair.fwd = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, FFTW_FORWARD, flags);
    pair.bwd = fftw_plan_dft_1d(static_cast<int>(n), raw, raw, FFTW_BACKWARD, flags);
    if (pair.fwd == nullptr || pair.bwd == nullptr)
        throw std::runtime_error("fftw plan creation failed for length " + std::to_string(n));
    return cache.emplace(n, pair).first->second;
}

void execute(const fftw_plan& plan, ComplexVector& data) {
    auto* raw = reinterpret_cast<fftw_complex*>(data.data());
    fftw_execute_dft(plan, raw, raw);
}

}  // namespace

void forward_inplace(ComplexVector& data) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    execute(plans_for(data.size()).fwd, data);
}

void backward_inplace(ComplexVector& data) {
    if (data.empty()) throw std::invalid_argument("fft: empty input");
    execute(plans_for(data.size()).bwd, data);
}

ComplexVector forward(const ComplexVector& in) {
    ComplexVector out = in;
    forward_inplace(out);
    return out;
}

ComplexVector backward(const ComplexVector& in) {
    ComplexVector out = in;
    backward_inplace(out);
    return out;
}

}  // namespace fft
}  // namespace framealias
