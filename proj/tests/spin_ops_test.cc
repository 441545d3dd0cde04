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

#include "qfim/spin_ops.hpp"

#include "gtest/gtest.h"
#include "qfim/hypergraph.hpp"
#include "test_util.hpp"

namespace qfim {
namespace {

QubitState triangle_graph_state() {
    return build_state(Hypergraph(3, {{1, 2}, {2, 3}, {3, 1}}));
}

QubitState hyperedge_state() { return build_state(Hypergraph(3, {{1, 2, 3}})); }

TEST(CollectiveMoments, AllZerosState) {
    const QubitState s(3, {1.0, 0, 0, 0, 0, 0, 0, 0});
    const CollectiveMoments m = collective_moments(s);
    EXPECT_NEAR(m.mean.x, 0.0, 1e-14);
    EXPECT_NEAR(m.mean.y, 0.0, 1e-14);
    EXPECT_NEAR(m.mean.z, 1.5, 1e-14);
    EXPECT_NEAR(m.covariance(0, 0), 0.75, 1e-14);
    EXPECT_NEAR(m.covariance(1, 1), 0.75, 1e-14);
    EXPECT_NEAR(m.covariance(2, 2), 0.0, 1e-14);
    EXPECT_NEAR(m.covariance(0, 1), 0.0, 1e-14);
}

TEST(CollectiveMoments, Ghz) {
    const CollectiveMoments m = collective_moments(ghz_state(3));
    EXPECT_NEAR(m.mean.norm(), 0.0, 1e-14);
    EXPECT_NEAR(m.covariance(2, 2), 2.25, 1e-14);
    EXPECT_NEAR(m.covariance(0, 0), 0.75, 1e-14);
    EXPECT_NEAR(m.covariance(1, 1), 0.75, 1e-14);
}

TEST(CollectiveMoments, PlusState) {
    const CollectiveMoments m = collective_moments(plus_state(3));
    EXPECT_NEAR(m.mean.x, 1.5, 1e-14);
    EXPECT_NEAR(m.mean.y, 0.0, 1e-14);
    EXPECT_NEAR(m.mean.z, 0.0, 1e-14);
    EXPECT_NEAR(m.covariance(0, 0), 0.0, 1e-14);
    EXPECT_NEAR(m.covariance(1, 1), 0.75, 1e-14);
    EXPECT_NEAR(m.covariance(2, 2), 0.75, 1e-14);
}

TEST(CollectiveMoments, CovariancePsdAndBounded) {
    std::mt19937 rng(5);
    for (int n : {2, 3, 4}) {
        for (int rep = 0; rep < 25; rep++) {
            const CollectiveMoments m = collective_moments(qfim_test::random_state(n, rng));
            EXPECT_LE(std::abs(m.mean.x), n / 2.0 + 1e-12);
            EXPECT_LE(std::abs(m.mean.y), n / 2.0 + 1e-12);
            EXPECT_LE(std::abs(m.mean.z), n / 2.0 + 1e-12);
            const auto eig = eigenvalues_sym3(m.covariance);
            EXPECT_GE(eig[2], -1e-10);
        }
    }
}

TEST(SpinFrame, MeanAlongX) {
    CollectiveMoments m;
    m.n_qubits = 3;
    m.mean = {1.5, 0.0, 0.0};
    const SpinFrame f = spin_frame(m);
    EXPECT_FALSE(f.degenerate);
    EXPECT_NEAR(f.theta, 1.5707963267948966, 1e-12);
    EXPECT_NEAR(f.phi, 0.0, 1e-12);
    EXPECT_NEAR(f.R, 1.5, 1e-12);
    EXPECT_NEAR(f.r, 1.5, 1e-12);
}

TEST(SpinFrame, MeanAlongY) {
    CollectiveMoments m;
    m.mean = {0.0, 1.5, 0.0};
    const SpinFrame f = spin_frame(m);
    EXPECT_NEAR(f.theta, 1.5707963267948966, 1e-12);
    EXPECT_NEAR(f.phi, 1.5707963267948966, 1e-12);
}

// The azimuth matches the two-branch arccos rule: arccos(X/r) for Y >= 0,
// 2pi - arccos(X/r) for Y < 0.
TEST(SpinFrame, AzimuthMatchesBranchRule) {
    std::mt19937 rng(71);
    std::uniform_real_distribution<double> comp(-1.0, 1.0);
    for (int i = 0; i < 200; i++) {
        CollectiveMoments m;
        m.mean = {comp(rng), comp(rng), comp(rng)};
        const SpinFrame f = spin_frame(m);
        if (f.degenerate || f.r < 1e-6) {
            continue;
        }
        const double branch = m.mean.y >= 0.0
                                  ? std::acos(m.mean.x / f.r)
                                  : 2.0 * 3.141592653589793238 - std::acos(m.mean.x / f.r);
        EXPECT_NEAR(f.phi, branch, 1e-10);
    }
}

TEST(SpinFrame, GhzIsDegenerate) {
    const SpinFrame f = spin_frame(collective_moments(ghz_state(3)));
    EXPECT_TRUE(f.degenerate);
}

TEST(SpinFrame, AxesOrthonormalAndPerpendicularToMean) {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 50; rep++) {
        const CollectiveMoments m = collective_moments(qfim_test::random_state(3, rng));
        const SpinFrame f = spin_frame(m);
        if (f.degenerate) {
            continue;
        }
        EXPECT_NEAR(f.n1.norm(), 1.0, 1e-10);
        EXPECT_NEAR(f.n2.norm(), 1.0, 1e-10);
        EXPECT_LT(std::abs(f.n1.dot(f.n2)), 1e-10);
        EXPECT_LT(std::abs(f.n1.dot(m.mean)), 1e-10 * f.R);
        EXPECT_LT(std::abs(f.n2.dot(m.mean)), 1e-10 * f.R);
    }
}

TEST(MaxPerpVariance, KnownStates) {
    const CollectiveMoments ghz = collective_moments(ghz_state(3));
    EXPECT_NEAR(max_perp_variance(ghz, spin_frame(ghz)), 2.25, 1e-12);

    const CollectiveMoments g = collective_moments(triangle_graph_state());
    EXPECT_NEAR(max_perp_variance(g, spin_frame(g)), 2.25, 1e-12);

    const CollectiveMoments p = collective_moments(plus_state(3));
    EXPECT_NEAR(max_perp_variance(p, spin_frame(p)), 0.75, 1e-12);
}

TEST(MetricReport, GraphState) {
    const MetricReport rep = metric_report(triangle_graph_state());
    EXPECT_NEAR(rep.f_q, 9.0, 1e-9);
    EXPECT_NEAR(rep.chi_squared, 1.0 / 3.0, 1e-9);
    EXPECT_NEAR(rep.v_f, 3.0, 1e-9);
    EXPECT_TRUE(rep.degenerate_frame);
    EXPECT_TRUE(rep.shot_noise_beaten);
    EXPECT_TRUE(rep.heisenberg_attained);
    EXPECT_NEAR(rep.delta_theta_qcr, 1.0 / 3.0, 1e-9);
}

// The single-hyperedge state has mean spin (3/4, 0, 0) and Var(J_y) = 3/2,
// so F_Q = 6 and chi^2 = 1/2. Frozen from an independent prototype; the
// brute-force oracle below cross-checks the same number.
TEST(MetricReport, HyperedgeState) {
    const MetricReport rep = metric_report(hyperedge_state());
    EXPECT_FALSE(rep.degenerate_frame);
    EXPECT_NEAR(rep.f_q, 6.0, 1e-9);
    EXPECT_NEAR(rep.chi_squared, 0.5, 1e-9);
    EXPECT_NEAR(rep.var_max, 1.5, 1e-9);
    EXPECT_FALSE(rep.heisenberg_attained);
    EXPECT_TRUE(rep.shot_noise_beaten);
}

TEST(MetricReport, SeparableStateSitsAtShotNoise) {
    const QubitState zeros(3, {1.0, 0, 0, 0, 0, 0, 0, 0});
    const MetricReport rep = metric_report(zeros);
    EXPECT_NEAR(rep.f_q, 3.0, 1e-12);
    EXPECT_NEAR(rep.chi_squared, 1.0, 1e-12);
    EXPECT_FALSE(rep.shot_noise_beaten);
}

TEST(MetricReport, ChiSquaredTimesFqIsNByConstruction) {
    std::mt19937 rng(23);
    for (int rep_i = 0; rep_i < 20; rep_i++) {
        const QubitState s = qfim_test::random_state(3, rng);
        const MetricReport rep = metric_report(s);
        EXPECT_EQ(rep.chi_squared, 3.0 / rep.f_q);
        EXPECT_LE(rep.f_q, 9.0 + 1e-9);
    }
}

TEST(MetricReport, SingletHasNoSensitivity) {
    // The two-qubit singlet is annihilated by every collective component, so
    // F_Q = 0 and chi^2 diverges; this must come back flagged, not thrown.
    const double w = 1.0 / std::sqrt(2.0);
    const QubitState singlet(2, {0.0, w, -w, 0.0});
    const MetricReport rep = metric_report(singlet);
    EXPECT_TRUE(rep.no_sensitivity);
    EXPECT_TRUE(rep.degenerate_frame);
    EXPECT_LT(rep.f_q, 1e-12);
    EXPECT_TRUE(std::isinf(rep.chi_squared));
    EXPECT_TRUE(std::isinf(rep.delta_theta_qcr));
    EXPECT_FALSE(rep.shot_noise_beaten);
}

TEST(MetricReport, LargerRegisterSmoke) {
    // 10-qubit ring graph state. Its mean spin vanishes and, because every
    // product of two stabilizer generators has weight >= 4, all two-point
    // correlators vanish too: the covariance is exactly (N/4) I, so F_Q = N
    // and the state sits exactly at the shot-noise boundary.
    QubitState s = plus_state(10);
    for (int v = 1; v <= 10; v++) {
        s = apply_cz(s, {v, v % 10 + 1});
    }
    const MetricReport rep = metric_report(s);
    EXPECT_TRUE(rep.degenerate_frame);
    EXPECT_NEAR(rep.f_q, 10.0, 1e-9);
    EXPECT_FALSE(rep.shot_noise_beaten);
    EXPECT_EQ(rep.chi_squared, 10.0 / rep.f_q);
    EXPECT_NEAR(brute_force_max_variance(s, 20000), rep.var_max, 1e-3);
}

TEST(BruteForce, MatchesAnalyticOnNamedStates) {
    EXPECT_NEAR(brute_force_max_variance(ghz_state(3), 10000), 2.25, 1e-4);
    EXPECT_NEAR(brute_force_max_variance(triangle_graph_state(), 10000), 2.25, 1e-4);
    EXPECT_NEAR(brute_force_max_variance(plus_state(3), 10000), 0.75, 1e-4);
    EXPECT_NEAR(brute_force_max_variance(hyperedge_state(), 10000), 1.5, 1e-4);
}

TEST(BruteForce, RejectsTinyGrids) {
    EXPECT_THROW(brute_force_max_variance(plus_state(2), 32), Error);
}

TEST(BruteForce, AgreesWithEigenpathOnRandomStates) {
    std::mt19937 rng(29);
    for (int n : {2, 3, 4}) {
        for (int rep = 0; rep < 10; rep++) {
            const QubitState s = qfim_test::random_state(n, rng);
            const CollectiveMoments m = collective_moments(s);
            const double analytic = max_perp_variance(m, spin_frame(m));
            const double grid = brute_force_max_variance(s, 20000);
            EXPECT_NEAR(grid, analytic, 1e-3);
            EXPECT_LE(grid, analytic + 1e-9);  // grid can only undershoot
        }
    }
}

TEST(Invariance, GlobalPhaseChangesNothing) {
    std::mt19937 rng(31);
    const QubitState s = qfim_test::random_state(3, rng);
    std::vector<cplx> rot = s.amplitudes();
    const cplx phase = std::polar(1.0, 0.8765);
    for (cplx &a : rot) {
        a *= phase;
    }
    const MetricReport r1 = metric_report(s);
    const MetricReport r2 = metric_report(QubitState(3, rot));
    EXPECT_NEAR(r1.f_q, r2.f_q, 1e-12);
    EXPECT_NEAR(r1.chi_squared, r2.chi_squared, 1e-12);
    EXPECT_NEAR(r1.var_max, r2.var_max, 1e-12);
}

TEST(Invariance, CollectiveRotationPreservesChiSquared) {
    std::mt19937 rng(37);
    for (int rep = 0; rep < 20; rep++) {
        const QubitState s = qfim_test::random_state(3, rng);
        const QubitState r = qfim_test::random_collective_rotation(s, rng);
        EXPECT_NEAR(metric_report(s).chi_squared, metric_report(r).chi_squared, 1e-9);
        EXPECT_NEAR(metric_report(s).f_q, metric_report(r).f_q, 1e-9);
    }
}

TEST(Invariance, GlobalSpinFlipPreservesChiSquared) {
    std::mt19937 rng(41);
    for (int rep = 0; rep < 20; rep++) {
        const QubitState s = qfim_test::random_state(3, rng);
        // X on every qubit.
        const QubitState flipped = qfim_test::apply_uniform_local(s, 0.0, 1.0, 1.0, 0.0);
        EXPECT_NEAR(metric_report(s).chi_squared, metric_report(flipped).chi_squared, 1e-9);
    }
}

TEST(Invariance, FisherInformationBoundedByNSquared) {
    std::mt19937 rng(43);
    for (int n : {2, 3, 4}) {
        for (int rep = 0; rep < 30; rep++) {
            const MetricReport r = metric_report(qfim_test::random_state(n, rng));
            EXPECT_LE(r.f_q, static_cast<double>(n) * n + 1e-9);
        }
    }
}

TEST(Eigen3, MatchesHandComputedSpectrum) {
    Mat3 a;
    a(0, 0) = 2.0;
    a(1, 1) = 3.0;
    a(2, 2) = 4.0;
    a(0, 1) = a(1, 0) = 1.0;
    // Block [[2,1],[1,3]] has eigenvalues (5 +/- sqrt5)/2.
    const auto eig = eigenvalues_sym3(a);
    EXPECT_NEAR(eig[0], 4.0, 1e-12);
    EXPECT_NEAR(eig[1], (5.0 + std::sqrt(5.0)) / 2.0, 1e-12);
    EXPECT_NEAR(eig[2], (5.0 - std::sqrt(5.0)) / 2.0, 1e-12);
}

}  // namespace
}  // namespace qfim
