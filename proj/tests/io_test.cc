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

#include "qfim/io.hpp"

#include "gtest/gtest.h"
#include "qfim/hypergraph.hpp"
#include "test_util.hpp"

#include <json.hpp>

namespace qfim {
namespace {

TEST(StateJson, LosslessRoundTrip) {
    std::mt19937 rng(101);
    const QubitState s = qfim_test::random_state(3, rng);
    const QubitState back = state_from_json(state_to_json(s));
    ASSERT_EQ(back.n_qubits(), s.n_qubits());
    for (std::size_t i = 0; i < s.dim(); i++) {
        EXPECT_EQ(back.amplitude(i), s.amplitude(i));
    }
    // And the serialized form itself is a fixed point.
    EXPECT_EQ(state_to_json(back), state_to_json(s));
}

TEST(StateJson, SchemaAndPrecision) {
    const QubitState g = ghz_state(2);
    const std::string text = state_to_json(g);
    auto j = nlohmann::json::parse(text);
    EXPECT_EQ(j["n_qubits"], 2);
    ASSERT_EQ(j["amplitudes"].size(), 4u);
    // 17 significant digits on a non-terminating value.
    EXPECT_NE(text.find("0.70710678118654746"), std::string::npos);
}

TEST(StateJson, RejectsGarbage) {
    EXPECT_THROW(state_from_json("{"), ParseError);
    EXPECT_THROW(state_from_json(R"({"n_qubits": 2})"), ParseError);
    EXPECT_THROW(state_from_json(R"({"n_qubits": 2, "amplitudes": [[1, 0]]})"), InvalidSizeError);
    EXPECT_THROW(state_from_json(R"({"n_qubits": 0, "amplitudes": []})"), InvalidSizeError);
    EXPECT_THROW(
        state_from_json(R"({"n_qubits": 1, "amplitudes": [[0.9, 0], [0.1, 0]]})"),
        NormalizationError);
}

TEST(StateJson, MaxQubitCapApplies) {
    const std::string text = state_to_json(plus_state(4));
    EXPECT_THROW(state_from_json(text, 1e-6, 3), InvalidSizeError);
    EXPECT_NO_THROW(state_from_json(text, 1e-6, 4));
}

TEST(MetricJson, SchemaKeys) {
    const MetricReport rep = metric_report(ghz_state(3));
    auto j = nlohmann::json::parse(metric_report_to_json(rep));
    for (const char *key : {"n", "f_q", "chi2", "v_f", "var_max", "degenerate_frame",
                            "shot_noise_beaten", "heisenberg_attained"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["n"], 3);
    EXPECT_NEAR(j["f_q"].get<double>(), 9.0, 1e-9);
    EXPECT_TRUE(j["degenerate_frame"].get<bool>());
}

TEST(MetricJson, NoSensitivityEmitsNullChi2) {
    const double w = 1.0 / std::sqrt(2.0);
    const QubitState singlet(2, {0.0, w, -w, 0.0});
    auto j = nlohmann::json::parse(metric_report_to_json(metric_report(singlet)));
    EXPECT_TRUE(j["chi2"].is_null());
    EXPECT_TRUE(j["no_sensitivity"].get<bool>());
    EXPECT_NEAR(j["f_q"].get<double>(), 0.0, 1e-12);
}

TEST(ConcurrenceJson, SchemaMatchesReport) {
    const ConcurrenceReport rep = total_concurrence(ghz_state(3));
    auto j = nlohmann::json::parse(concurrence_to_json(rep));
    ASSERT_TRUE(j.contains("cuts"));
    EXPECT_NEAR(j["cuts"]["1|23"].get<double>(), 1.0, 1e-12);
    EXPECT_NEAR(j["total"].get<double>(), 3.0, 1e-9);
}

TEST(CombinedJson, CarriesDeltaThetaAndConcurrence) {
    const QubitState g = ghz_state(3);
    auto j = nlohmann::json::parse(
        combined_metrics_json(metric_report(g), total_concurrence(g)));
    EXPECT_NEAR(j["delta_theta_qcr"].get<double>(), 1.0 / 3.0, 1e-9);
    EXPECT_TRUE(j.contains("concurrence"));
    EXPECT_NEAR(j["concurrence"]["total"].get<double>(), 3.0, 1e-9);
}

TEST(ParamsJson, RoundTripAndDefaults) {
    const SpinParams p(0.5, 0.5, -0.5, 0.5, 0.25, 0.0, 3.0);
    const SpinParams back = params_from_json(params_to_json(p));
    EXPECT_EQ(back.alpha, p.alpha);
    EXPECT_EQ(back.gamma, p.gamma);
    EXPECT_EQ(back.mu, p.mu);
    EXPECT_EQ(back.eta, p.eta);

    const SpinParams defaults = params_from_json(
        R"({"alpha": 1.0, "beta": 0.0, "gamma": 0.0, "delta": 0.0})");
    EXPECT_EQ(defaults.mu, 0.0);
    EXPECT_EQ(defaults.nu, 0.0);
}

TEST(ParamsJson, Validation) {
    EXPECT_THROW(params_from_json(R"({"alpha": 1.0})"), ParseError);
    EXPECT_THROW(params_from_json(R"({"alpha": 1.0, "beta": 1.0, "gamma": 0, "delta": 0})"),
                 NormalizationError);
    EXPECT_THROW(params_from_json("not json"), ParseError);
}

TEST(Table, SixSignificantDigits) {
    const QubitState h = build_state(Hypergraph(3, {{1, 2, 3}}));
    const std::string table = combined_metrics_table(metric_report(h), total_concurrence(h));
    EXPECT_NE(table.find("0.866025"), std::string::npos);  // concurrence per cut
    EXPECT_NE(table.find("2.59808"), std::string::npos);   // total, 6 digits
}

}  // namespace
}  // namespace qfim
