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

#include "qfim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace qfim {

double purity_cut(const QubitState &state, const std::vector<int> &subset) {
    const int n = state.n_qubits();
    std::set<int> m(subset.begin(), subset.end());
    if (m.empty() || static_cast<int>(m.size()) >= n) {
        throw InvalidSizeError("cut subset must be a proper nonempty subset of 1.." +
                               std::to_string(n));
    }
    for (int q : m) {
        if (q < 1 || q > n) {
            throw InvalidSizeError("cut qubit " + std::to_string(q) + " outside [1, " +
                                   std::to_string(n) + "]");
        }
    }
    std::vector<int> mq(m.begin(), m.end()), rq;
    for (int q = 1; q <= n; q++) {
        if (!m.count(q)) {
            rq.push_back(q);
        }
    }
    const std::size_t dm = std::size_t{1} << mq.size();
    const std::size_t dr = std::size_t{1} << rq.size();

    // Reshape the amplitude vector into Psi[m-part][rest-part].
    std::vector<cplx> psi(dm * dr);
    for (std::size_t b = 0; b < state.dim(); b++) {
        std::size_t im = 0, ir = 0;
        for (int q : mq) {
            im = (im << 1) | static_cast<std::size_t>(state.bit(b, q));
        }
        for (int q : rq) {
            ir = (ir << 1) | static_cast<std::size_t>(state.bit(b, q));
        }
        psi[im * dr + ir] = state.amplitude(b);
    }

    // tr(rho_M^2) = sum_{i,j} |<row_i, row_j>|^2 with rho_M = Psi Psi^dagger.
    double purity = 0.0;
    for (std::size_t i = 0; i < dm; i++) {
        for (std::size_t j = 0; j < dm; j++) {
            cplx rij{0.0, 0.0};
            for (std::size_t k = 0; k < dr; k++) {
                rij += psi[i * dr + k] * std::conj(psi[j * dr + k]);
            }
            purity += std::norm(rij);
        }
    }
    return purity;
}

double concurrence_cut(const QubitState &state, const std::vector<int> &subset) {
    const double purity = purity_cut(state, subset);
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

ConcurrenceReport total_concurrence(const QubitState &state) {
    const int n = state.n_qubits();
    if (n < 2) {
        throw InvalidSizeError("concurrence needs at least 2 qubits");
    }
    ConcurrenceReport rep;
    for (int q = 1; q <= n; q++) {
        std::string label = std::to_string(q) + "|";
        for (int o = 1; o <= n; o++) {
            if (o != q) {
                label += std::to_string(o);
            }
        }
        const double e = concurrence_cut(state, {q});
        rep.per_cut.emplace_back(label, e);
        rep.total += e;
    }
    return rep;
}

}  // namespace qfim
