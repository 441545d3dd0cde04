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

#include <complex>
#include <cstdint>
#include <vector>

#include "qfim/errors.hpp"

namespace qfim {

using cplx = std::complex<double>;

/// Default cap on register size; a dense vector of 2^20 amplitudes is the
/// largest register supported without an explicit override.
inline constexpr int kDefaultMaxQubits = 20;

/// Dense pure state of n qubits.
///
/// Basis-index convention: qubit 1 is the MOST significant bit of the basis
/// index, so |q1 q2 q3> reads off directly from the binary expansion.
/// The amplitude vector must carry exactly 2^n entries and unit norm.
class QubitState {
  public:
    /// Validates the length (exactly 2^n) and the norm (|sum|a|^2 - 1| <= norm_tol).
    /// Amplitudes are stored as given; no silent renormalization.
    QubitState(int n_qubits, std::vector<cplx> amplitudes, double norm_tol = 1e-12);

    int n_qubits() const { return n_qubits_; }
    std::size_t dim() const { return amplitudes_.size(); }
    const std::vector<cplx> &amplitudes() const { return amplitudes_; }
    cplx amplitude(std::size_t basis_index) const { return amplitudes_[basis_index]; }

    /// sum |a|^2.
    double norm_squared() const;

    /// Bit of `qubit` (1-based, MSB-first) inside `basis_index`.
    int bit(std::size_t basis_index, int qubit) const {
        return static_cast<int>((basis_index >> (n_qubits_ - qubit)) & 1u);
    }

  private:
    int n_qubits_;
    std::vector<cplx> amplitudes_;
};

/// Projection of a state onto the symmetric (Dicke) ladder |j=n/2, m>.
///
/// coefficients[k] is the amplitude on the normalized symmetric superposition
/// of all basis strings with k ones, i.e. m = n/2 - k under the convention
/// bit 0 -> spin projection +1/2. Coefficients are therefore ordered by
/// descending m. residual_norm is the norm of the component outside the
/// symmetric subspace.
struct DickeDecomposition {
    int n_qubits = 0;
    std::vector<cplx> coefficients;
    double residual_norm = 0.0;

    double j() const { return 0.5 * n_qubits; }
    double m(int k) const { return 0.5 * n_qubits - k; }
};

/// |+>^n: every amplitude 2^(-n/2).
QubitState plus_state(int n, int max_qubits = kDefaultMaxQubits);

/// (|0...0> + |1...1>)/sqrt(2); requires n >= 2.
QubitState ghz_state(int n, int max_qubits = kDefaultMaxQubits);

/// Multi-controlled Z over `targets` (1-based, at least two, no duplicates):
/// negates exactly the amplitudes whose target bits are all 1.
QubitState apply_cz(const QubitState &state, const std::vector<int> &targets);

/// Projects onto each symmetric Dicke vector; residual picks up everything else.
DickeDecomposition to_dicke(const QubitState &state);

/// Lifts a fully symmetric decomposition back to the computational basis.
/// Throws NotSymmetricError if residual_norm exceeds `tol`.
QubitState from_dicke(const DickeDecomposition &d, double tol = 1e-10);

/// True when a = e^{i lambda} b for some global phase, within `tol` on every
/// amplitude. States equal up to global phase are physically identical.
bool equal_up_to_phase(const QubitState &a, const QubitState &b, double tol);

/// n choose k as a double (exact for the sizes handled here).
double binomial(int n, int k);

}  // namespace qfim
