// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "framealias/filterbank.hpp"
#include "framealias/randstats.hpp"
#include "framealias/tighten.hpp"

#include <string>

namespace framealias {

inline constexpr int kSchemaVersion = 1;

/// Filterbank file format:
///   {"stride": d, "signal_length": L, "kernels": [[[re, im], ...], ...]}
/// with M outer entries of L_K [re, im] pairs each.
Filterbank read_filterbank_json(const std::string& path);
void write_filterbank_json(const std::string& path, const Filterbank& fb);

std::string filterbank_to_json(const Filterbank& fb);
Filterbank filterbank_from_json(const std::string& text);

/// Shortest round-trip formatting used by every CSV writer (17 significant
/// digits; re-reading reproduces the exact double).
std::string format_double(double value);

/// Columns: iter, condition, recon_error, objective.
void write_trajectory_csv(const std::string& path, const Trajectory& traj);

/// Columns: n, k, E_closed_re, E_closed_im, V_closed, E_emp_re, E_emp_im,
/// V_emp, SE (standard error of the empirical mean).
void write_moments_csv(const std::string& path, const MomentTable& closed,
                       const MomentTable& empirical);

/// Columns: n, k, Re G_n[k], Im G_n[k].
void write_alias_csv(const std::string& path, const AliasingSpectrum& alias);

}  // namespace framealias
