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
#include <utility>
#include <vector>

#include "qfim/state.hpp"

namespace qfim {

/// Per-bipartition concurrence E = sqrt(2[1 - tr(rho_M^2)]) of a pure state,
/// with `total` the plain sum of E over the n single-qubit-vs-rest cuts.
struct ConcurrenceReport {
    std::vector<std::pair<std::string, double>> per_cut;  // label "1|23" -> E
    double total = 0.0;
};

/// tr(rho_M^2) where rho_M traces out the complement of `subset` (1-based
/// qubit indices). Never materializes the full-system density matrix.
double purity_cut(const QubitState &state, const std::vector<int> &subset);

/// E = sqrt(2[1 - tr(rho_M^2)]) across the cut subset|complement.
/// The subset must be a proper nonempty subset of the qubits.
double concurrence_cut(const QubitState &state, const std::vector<int> &subset);

/// All n single-qubit-vs-rest cuts; total = sum of E values. Two-vs-one and
/// larger cuts are available through concurrence_cut but excluded from total.
ConcurrenceReport total_concurrence(const QubitState &state);

}  // namespace qfim
