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

#include <optional>
#include <string>
#include <vector>

#include "qfim/closed_form.hpp"

namespace qfim {

enum class Param { Delta, Gamma, Mu, Nu, Eta };

const char *param_name(Param p);
std::optional<Param> param_from_name(const std::string &name);
bool is_phase(Param p);

/// Raw (possibly unnormalized) parameter assignment; the dependent amplitude
/// is filled in by the constraint at each grid point. Values default to zero.
struct ParamValues {
    double alpha = 0.0, beta = 0.0, gamma = 0.0, delta = 0.0;
    double mu = 0.0, nu = 0.0, eta = 0.0;

    double &operator[](Param p);
    double operator[](Param p) const;
};

/// Rule binding the dependent amplitude so every grid point is normalized:
/// dependent = sign * sqrt(1 - sum of the other three amplitudes squared).
/// The sign is an explicit choice, never inferred.
struct Constraint {
    enum class Dependent { None, Gamma, Delta };
    Dependent dependent = Dependent::None;
    int sign = +1;
};

struct SweepSpec {
    ParamValues fixed;
    Param vary = Param::Delta;
    double start = 0.0;
    double stop = 0.0;
    double step = 1e-4;
    Constraint constraint;
};

struct SweepRow {
    double varied = 0.0;
    double dependent = 0.0;
    double chi2 = 0.0;
    double f_q = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;        // sorted by varied value
    std::size_t argmin = 0;            // ties broken toward smaller varied value
    std::size_t argmax = 0;
};

/// Evaluates chi^2 over the grid. Throws RangeDomainError naming the first
/// infeasible grid value when the constraint cannot be satisfied.
SweepResult run_sweep(const SweepSpec &spec);

/// Two-dimensional phase x amplitude sweep.
struct PhaseSweepSpec {
    ParamValues fixed;
    Param phase = Param::Eta;
    double phase_start = 0.0, phase_stop = 0.0, phase_step = 1e-2;
    Param amplitude = Param::Delta;
    double amp_start = 0.0, amp_stop = 0.0, amp_step = 1e-2;
    Constraint constraint;
};

struct GridRow {
    double phase = 0.0;
    double amplitude = 0.0;
    double chi2 = 0.0;
    double f_q = 0.0;
};

struct GridResult {
    std::vector<GridRow> rows;  // phase-major order
    std::size_t argmin = 0;
    std::size_t argmax = 0;
};

GridResult run_phase_sweep(const PhaseSweepSpec &spec);

enum class ExtremumKind { Min, Max };

struct Extremum {
    double parameter = 0.0;
    double chi2 = 0.0;
    bool on_boundary = false;  // best grid point at a range end; not refined
};

/// Grid pass plus derivative-free golden-section refinement of the best
/// interior bracket, to within refine_tol on the parameter.
Extremum locate_extremum(const SweepSpec &spec, double refine_tol, ExtremumKind kind);

/// CSV with mandatory header varied_name,varied_value,dependent_name,
/// dependent_value,chi2,f_q and 12 significant digits. Deterministic:
/// identical specs yield bitwise-identical output.
std::string sweep_csv(const SweepSpec &spec, const SweepResult &result);
std::string phase_sweep_csv(const PhaseSweepSpec &spec, const GridResult &result);

// ---- Preset sweeps ---------------------------------------------------------

/// One pass/fail comparison of a located quantity against its reference value.
struct ReproduceCheck {
    std::string label;
    double measured = 0.0;
    double expected = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct ReproduceArtifact {
    std::string name;  // suggested file name
    std::string csv;
};

struct ReproduceReport {
    std::string target;
    std::vector<ReproduceArtifact> artifacts;
    std::vector<ReproduceCheck> checks;
    bool all_pass = true;
};

/// Known targets: table1, table2, fig5, fig6, fig7.
/// `step` applies to the amplitude grids of table/fig5 targets (default 1e-4).
ReproduceReport reproduce(const std::string &target, double step = 1e-4,
                          double refine_tol = 1e-6);

/// The preset parameter regimes, exposed for tests and the CLI.
SweepSpec table1_delta_spec(double step = 1e-4);   // gamma = +sqrt(3/4 - delta^2)
SweepSpec table1_gamma_spec(double step = 1e-4);   // delta = +sqrt(3/4 - gamma^2)
SweepSpec table2_delta_spec(double step = 1e-4);   // gamma = -sqrt(3/4 - delta^2)
SweepSpec table2_gamma_spec(double step = 1e-4);   // gamma in [-sqrt3/2, 0]
/// Fig 6/7 preset grids: alpha = beta = 1/2, one phase varied over [0, 2pi),
/// the other two fixed on {0, pi/2, pi}, amplitude axis delta (fig6) or gamma
/// (fig7) with the dependent amplitude bound positive or negative.
std::vector<PhaseSweepSpec> phase_grid_presets(Param amplitude_axis, double phase_step,
                                               int amplitude_intervals);

}  // namespace qfim
