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

#include "qfim/linalg.hpp"
#include "qfim/state.hpp"

namespace qfim {

/// First and second moments of the collective spin J_a = sum_i sigma_a^(i)/2.
/// covariance(a,b) = <J_a J_b + J_b J_a>/2 - <J_a><J_b>, symmetric PSD.
struct CollectiveMoments {
    int n_qubits = 0;
    Vec3 mean;
    Mat3 covariance;

    /// Second-moment matrix <J_a J_b + J_b J_a>/2 (covariance plus mean outer product).
    Mat3 second_moments() const;
};

/// Mean-spin coordinate frame. theta = arccos(<J_z>/R), phi is the azimuth of
/// (<J_x>, <J_y>) in [0, 2pi). The transverse axes are
///   n1 = (sin phi, -cos phi, 0),
///   n2 = (-cos theta cos phi, -cos theta sin phi, sin theta),
/// an orthonormal pair spanning the plane perpendicular to the mean spin.
/// degenerate flags R < tol, where the frame (and the plane) is undefined.
struct SpinFrame {
    double theta = 0.0;
    double phi = 0.0;
    double R = 0.0;
    double r = 0.0;
    Vec3 n1;
    Vec3 n2;
    bool degenerate = false;
};

/// Sensitivity metrics of a pure state under collective-spin phase generation.
struct MetricReport {
    int n = 0;
    double f_q = 0.0;             ///< quantum Fisher information, 4 * var_max
    double chi_squared = 0.0;     ///< N / F_Q (reciprocal mean QFI per particle)
    double v_f = 0.0;             ///< statistical speed sqrt(F_Q)
    double var_max = 0.0;         ///< maximal perpendicular variance
    double delta_theta_qcr = 0.0; ///< 1/sqrt(F_Q)
    bool degenerate_frame = false;
    bool shot_noise_beaten = false;    ///< F_Q > N
    bool heisenberg_attained = false;  ///< F_Q = N^2 within tolerance
    bool no_sensitivity = false;       ///< F_Q below 1e-12; chi_squared is +inf
};

/// Applies J_a = sum_i sigma_a^(i)/2 to the state vector (axis: 0=x, 1=y, 2=z)
/// without materializing any 2^n x 2^n matrix.
std::vector<cplx> apply_collective(const QubitState &state, int axis);

CollectiveMoments collective_moments(const QubitState &state);

SpinFrame spin_frame(const CollectiveMoments &m, double tol = 1e-9);

/// Largest variance of J.u over directions u perpendicular to the mean spin;
/// over the whole sphere when the frame is degenerate. Computed as the top
/// eigenvalue of the (projected) covariance matrix.
double max_perp_variance(const CollectiveMoments &m, const SpinFrame &frame);

MetricReport metric_report(const QubitState &state);

/// Independent grid-search oracle for max_perp_variance: evaluates
/// Var(J.u) = |J_u psi|^2 - <J_u>^2 direction by direction, on a uniform
/// angular grid in the perpendicular plane (or a Fibonacci sphere grid when
/// the frame is degenerate), and returns the largest value found.
/// Requires grid_points >= 64.
double brute_force_max_variance(const QubitState &state, long grid_points);

}  // namespace qfim
