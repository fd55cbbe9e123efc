// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>

namespace framealias {

/// Dense linear algebra requested beyond the configured size guard.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation required a frame (positive lower bound) and did not get one.
class NonFrameError : public std::runtime_error {
public:
    explicit NonFrameError(const std::string& what) : std::runtime_error(what) {}
};

/// Perturbation step violates the condition under which the bound is valid.
class GuaranteeVoidError : public std::runtime_error {
public:
    GuaranteeVoidError(const std::string& what, double step, double update_upper, double lower)
        : std::runtime_error(what), step(step), update_upper(update_upper), lower(lower) {}
    double step;
    double update_upper;
    double lower;
};

/// Filterbank response vanishes somewhere, making a ratio objective undefined.
class DegenerateResponseError : public std::runtime_error {
public:
    explicit DegenerateResponseError(const std::string& what) : std::runtime_error(what) {}
};

/// Requested statistic has no implemented closed form for this distribution.
class UnsupportedSpecError : public std::runtime_error {
public:
    explicit UnsupportedSpecError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace framealias
