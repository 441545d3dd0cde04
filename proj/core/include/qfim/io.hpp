// Copyright 2026 The qfim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "qfim/closed_form.hpp"
#include "qfim/entanglement.hpp"
#include "qfim/spin_ops.hpp"
#include "qfim/state.hpp"

namespace qfim {

/// {"n_qubits": n, "amplitudes": [[re, im], ...]} in basis-index order,
/// numbers printed with 17 significant digits (lossless round trip).
std::string state_to_json(const QubitState &state);

/// Parses the state JSON. Norm may be off by up to `norm_tol` (the CLI uses
/// 1e-6); the register size cap applies.
QubitState state_from_json(const std::string &text, double norm_tol = 1e-6,
                           int max_qubits = kDefaultMaxQubits);

/// {"n":..., "f_q":..., "chi2":..., "v_f":..., "var_max":...,
///  "degenerate_frame":..., "shot_noise_beaten":..., "heisenberg_attained":...}
/// chi2 is null for a no-sensitivity report.
std::string metric_report_to_json(const MetricReport &rep);

/// {"cuts": {"1|23": e1, ...}, "total": t}
std::string concurrence_to_json(const ConcurrenceReport &rep);

/// Metric report fields plus "delta_theta_qcr" and a nested "concurrence".
std::string combined_metrics_json(const MetricReport &rep, const ConcurrenceReport &conc);

/// Fixed-width human-readable table, 6 significant digits.
std::string combined_metrics_table(const MetricReport &rep, const ConcurrenceReport &conc);

/// {"alpha":..., "beta":..., "gamma":..., "delta":..., "mu":..., "nu":..., "eta":...}
/// Missing phase keys default to 0; amplitudes are required.
SpinParams params_from_json(const std::string &text);
std::string params_to_json(const SpinParams &p);

}  // namespace qfim
