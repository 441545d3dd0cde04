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

#include "qfim/closed_form.hpp"

#include <cmath>

namespace qfim {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;
const double kSqrt3 = std::sqrt(3.0);

double wrap_phase(double x) {
    double y = std::fmod(x, kTwoPi);
    if (y < 0.0) {
        y += kTwoPi;
    }
    return y;
}

}  // namespace

SpinParams::SpinParams(double alpha_, double beta_, double gamma_, double delta_, double mu_,
                       double nu_, double eta_, double norm_tol)
    : alpha(alpha_),
      beta(beta_),
      gamma(gamma_),
      delta(delta_),
      mu(wrap_phase(mu_)),
      nu(wrap_phase(nu_)),
      eta(wrap_phase(eta_)) {
    const double n2 = alpha * alpha + beta * beta + gamma * gamma + delta * delta;
    if (std::abs(n2 - 1.0) > norm_tol) {
        throw NormalizationError("spin parameters have squared norm " + std::to_string(n2));
    }
}

QubitState realize(const SpinParams &p) {
    DickeDecomposition d;
    d.n_qubits = 3;
    d.coefficients = {
        p.alpha * cplx{std::cos(p.mu), std::sin(p.mu)},    // m = +3/2
        p.gamma * cplx{std::cos(p.eta), std::sin(p.eta)},  // m = +1/2
        cplx{p.delta, 0.0},                                // m = -1/2
        p.beta * cplx{std::cos(p.nu), std::sin(p.nu)},     // m = -3/2
    };
    d.residual_norm = 0.0;
    return from_dicke(d);
}

Vec3 closed_form_moments(const SpinParams &p) {
    const double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
    const double jx = kSqrt3 * a * g * std::cos(p.eta - p.mu) + 2.0 * g * d * std::cos(p.eta) +
                      kSqrt3 * b * d * std::cos(p.nu);
    const double jy = kSqrt3 * a * g * std::sin(p.eta - p.mu) - 2.0 * g * d * std::sin(p.eta) +
                      kSqrt3 * b * d * std::sin(p.nu);
    const double jz = 0.5 * (3.0 * (a * a - b * b) + g * g - d * d);
    return {jx, jy, jz};
}

PerpQuadratics closed_form_quadratics(const SpinParams &p, double tol) {
    const double a = p.alpha, b = p.beta, g = p.gamma, d = p.delta;
    const Vec3 mean = closed_form_moments(p);
    const double X = mean.x, Y = mean.y, Z = mean.z;
    const double r2 = X * X + Y * Y;
    const double R2 = r2 + Z * Z;
    const double R = std::sqrt(R2), r = std::sqrt(r2);
    if (R < tol || r < tol) {
        throw SingularFrameError("mean-spin frame singular (R = " + std::to_string(R) + ", r = " +
                                 std::to_string(r) + "); use the operator path");
    }

    const double ab2 = a * a + b * b;
    const double b1 = g * b * std::cos(p.nu - p.eta) + a * d * std::cos(p.mu);
    const double b2s = g * b * std::sin(p.nu - p.eta) - a * d * std::sin(p.mu);
    const double b3s = a * g * std::sin(p.eta - p.mu) - b * d * std::sin(p.nu);
    const double b3c = a * g * std::cos(p.eta - p.mu) - b * d * std::cos(p.nu);
    // [1 + {3(a^2-b^2) + (g^2-d^2)}^2 / 4R^2]; the braced sum is 2<J_z>.
    const double zterm = 3.0 * (a * a - b * b) + (g * g - d * d);
    const double onep = 1.0 + zterm * zterm / (4.0 * R2);

    PerpQuadratics q;
    q.sum_sq = (1.75 - ab2) * onep + (r2 / R2) * (0.25 + 2.0 * ab2) +
               (kSqrt3 / R2) * (Y * Y - X * X) * b1 - (2.0 * kSqrt3 / R2) * X * Y * b2s -
               (2.0 * kSqrt3 / R2) * Y * Z * b3s - (2.0 * kSqrt3 / R2) * Z * X * b3c;

    q.diff_sq = (r2 / R2) * (1.5 - 3.0 * ab2) + kSqrt3 * onep * ((Y * Y - X * X) / r2) * b1 -
                2.0 * kSqrt3 * onep * (X * Y / r2) * b2s + (2.0 * kSqrt3 / R2) * Y * Z * b3s +
                (2.0 * kSqrt3 / R2) * Z * X * b3c;

    // Sign corrected relative to the published form, which evaluates to the
    // negative of this moment in the frame used here (see
    // docs/closed_form_corrections.json, entry "anticommutator-orientation").
    q.anticomm = -(4.0 * kSqrt3 * (X * Y * Z / (R * r2)) * b1 +
                   2.0 * kSqrt3 * (Z * (Y * Y - X * X) / (R * r2)) * b2s -
                   (2.0 * kSqrt3 / R) * Y * b3c + (2.0 * kSqrt3 / R) * X * b3s);
    return q;
}

double assemble_max_variance(const PerpQuadratics &q) {
    return 0.5 * q.sum_sq + 0.5 * std::sqrt(q.diff_sq * q.diff_sq + q.anticomm * q.anticomm);
}

double chi_squared_param(const SpinParams &p) { return metric_report(realize(p)).chi_squared; }

}  // namespace qfim
