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

#include "qfim/state.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace qfim {

namespace {

void check_size(int n, int max_qubits) {
    if (n < 1 || n > max_qubits) {
        throw InvalidSizeError("qubit count " + std::to_string(n) + " outside [1, " +
                               std::to_string(max_qubits) + "]");
    }
}

}  // namespace

QubitState::QubitState(int n_qubits, std::vector<cplx> amplitudes, double norm_tol)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
    if (n_qubits_ < 1 || n_qubits_ > 62) {
        throw InvalidSizeError("qubit count " + std::to_string(n_qubits_) + " outside [1, 62]");
    }
    if (amplitudes_.size() != (std::size_t{1} << n_qubits_)) {
        throw InvalidSizeError("amplitude vector has " + std::to_string(amplitudes_.size()) +
                               " entries, expected 2^" + std::to_string(n_qubits_));
    }
    const double n2 = norm_squared();
    if (std::abs(n2 - 1.0) > norm_tol) {
        throw NormalizationError("state norm^2 = " + std::to_string(n2) +
                                 " is off unity beyond tolerance");
    }
}

double QubitState::norm_squared() const {
    double s = 0.0;
    for (const cplx &a : amplitudes_) {
        s += std::norm(a);
    }
    return s;
}

QubitState plus_state(int n, int max_qubits) {
    check_size(n, max_qubits);
    const double amp = std::pow(2.0, -0.5 * n);
    return QubitState(n, std::vector<cplx>(std::size_t{1} << n, cplx{amp, 0.0}), 1e-9);
}

QubitState ghz_state(int n, int max_qubits) {
    if (n < 2) {
        throw InvalidSizeError("GHZ needs at least 2 qubits, got " + std::to_string(n));
    }
    check_size(n, max_qubits);
    std::vector<cplx> a(std::size_t{1} << n, cplx{0.0, 0.0});
    const double w = 1.0 / std::sqrt(2.0);
    a.front() = w;
    a.back() = w;
    return QubitState(n, std::move(a));
}

QubitState apply_cz(const QubitState &state, const std::vector<int> &targets) {
    const int n = state.n_qubits();
    std::set<int> uniq(targets.begin(), targets.end());
    if (uniq.size() < 2) {
        throw InvalidSizeError("controlled-Z needs at least 2 distinct targets");
    }
    std::uint64_t mask = 0;
    for (int q : uniq) {
        if (q < 1 || q > n) {
            throw InvalidSizeError("target qubit " + std::to_string(q) + " outside [1, " +
                                   std::to_string(n) + "]");
        }
        mask |= std::uint64_t{1} << (n - q);
    }
    std::vector<cplx> a = state.amplitudes();
    for (std::size_t b = 0; b < a.size(); b++) {
        if ((b & mask) == mask) {
            a[b] = -a[b];
        }
    }
    return QubitState(n, std::move(a), 1e-9);
}

double binomial(int n, int k) {
    if (k < 0 || k > n) {
        return 0.0;
    }
    double c = 1.0;
    for (int i = 1; i <= k; i++) {
        c = c * (n - k + i) / i;
    }
    return std::round(c);
}

DickeDecomposition to_dicke(const QubitState &state) {
    const int n = state.n_qubits();
    DickeDecomposition d;
    d.n_qubits = n;
    d.coefficients.assign(n + 1, cplx{0.0, 0.0});
    for (std::size_t b = 0; b < state.dim(); b++) {
        d.coefficients[std::popcount(b)] += state.amplitude(b);
    }
    std::vector<double> w(n + 1);
    for (int k = 0; k <= n; k++) {
        w[k] = 1.0 / std::sqrt(binomial(n, k));
        d.coefficients[k] *= w[k];
    }
    // Norm of the component outside the symmetric subspace, computed directly
    // (the subtraction 1 - sum|c|^2 would wash out small residuals).
    double resid2 = 0.0;
    for (std::size_t b = 0; b < state.dim(); b++) {
        const int k = std::popcount(b);
        resid2 += std::norm(state.amplitude(b) - d.coefficients[k] * w[k]);
    }
    d.residual_norm = std::sqrt(resid2);
    return d;
}

QubitState from_dicke(const DickeDecomposition &d, double tol) {
    if (d.residual_norm > tol) {
        throw NotSymmetricError("decomposition has residual norm " +
                                std::to_string(d.residual_norm) +
                                " outside the symmetric subspace");
    }
    const int n = d.n_qubits;
    if (static_cast<int>(d.coefficients.size()) != n + 1) {
        throw InvalidSizeError("expected " + std::to_string(n + 1) + " Dicke coefficients");
    }
    std::vector<cplx> a(std::size_t{1} << n);
    std::vector<double> w(n + 1);
    for (int k = 0; k <= n; k++) {
        w[k] = 1.0 / std::sqrt(binomial(n, k));
    }
    for (std::size_t b = 0; b < a.size(); b++) {
        const int k = std::popcount(b);
        a[b] = d.coefficients[k] * w[k];
    }
    return QubitState(n, std::move(a), 1e-9);
}

bool equal_up_to_phase(const QubitState &a, const QubitState &b, double tol) {
    if (a.n_qubits() != b.n_qubits()) {
        return false;
    }
    // Anchor the phase on a's largest amplitude.
    std::size_t anchor = 0;
    double best = -1.0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        if (std::abs(a.amplitude(i)) > best) {
            best = std::abs(a.amplitude(i));
            anchor = i;
        }
    }
    if (std::abs(b.amplitude(anchor)) < tol) {
        return best < tol;
    }
    const cplx phase = a.amplitude(anchor) / b.amplitude(anchor);
    if (std::abs(std::abs(phase) - 1.0) > tol) {
        return false;
    }
    for (std::size_t i = 0; i < a.dim(); i++) {
        if (std::abs(a.amplitude(i) - phase * b.amplitude(i)) > tol) {
            return false;
        }
    }
    return true;
}

}  // namespace qfim
