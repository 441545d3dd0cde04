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

#include "qfim/spin_ops.hpp"
#include "qfim/state.hpp"

namespace qfim {

/// The seven real parameters of the general 3-qubit spin-basis state
///   alpha e^{i mu} |3/2, 3/2> + gamma e^{i eta} |3/2, 1/2>
///   + delta |3/2,-1/2> + beta e^{i nu} |3/2,-3/2>.
/// Amplitudes are signed reals with alpha^2+beta^2+gamma^2+delta^2 = 1;
/// phases are reduced into [0, 2pi) on construction.
struct SpinParams {
    double alpha, beta, gamma, delta;
    double mu, nu, eta;

    SpinParams(double alpha, double beta, double gamma, double delta, double mu = 0.0,
               double nu = 0.0, double eta = 0.0, double norm_tol = 1e-12);
};

/// The three perpendicular-plane quadratic moments in the mean-spin frame:
/// <J_n1^2 + J_n2^2>, <J_n1^2 - J_n2^2>, and <[J_n1, J_n2]_+>.
struct PerpQuadratics {
    double sum_sq = 0.0;
    double diff_sq = 0.0;
    double anticomm = 0.0;
};

/// Lifts the parametric spin-basis state to the 3-qubit computational basis.
QubitState realize(const SpinParams &p);

/// (<J_x>, <J_y>, <J_z>) from the closed-form expressions in the parameters.
Vec3 closed_form_moments(const SpinParams &p);

/// Closed-form perpendicular quadratics, evaluated purely from the parameters
/// (no state vector, no operators). The expressions divide by R^2 and R r^2;
/// throws SingularFrameError when R or r falls below `tol` -- callers must use
/// the operator path there. docs/closed_form_corrections.json records where
/// the implemented expressions deviate from their published source form.
PerpQuadratics closed_form_quadratics(const SpinParams &p, double tol = 1e-9);

/// Largest perpendicular variance assembled from the quadratics:
/// sum/2 + sqrt(diff^2 + anticomm^2)/2.
double assemble_max_variance(const PerpQuadratics &q);

/// chi^2 via the authoritative operator path (realize -> metric_report).
double chi_squared_param(const SpinParams &p);

}  // namespace qfim
