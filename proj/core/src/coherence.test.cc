// Copyright 2026 The Quantromon Toolkit Authors
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

#include "quantromon/coherence.h"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <vector>

#include "gtest/gtest.h"
#include "quantromon/errors.h"

using namespace quantromon;

TEST(coherence, dielectric_hand_values) {
    EXPECT_NEAR(t1_dielectric(7.185e9, 1.1e6), 24.366e-6, 0.01e-6);
    EXPECT_NEAR(t1_dielectric(4.288e9, 1.61e6), 59.757e-6, 0.01e-6);
    EXPECT_EQ(t1_dielectric(5e9, 2.0e6), 2.0 * t1_dielectric(5e9, 1.0e6));
}

TEST(coherence, dielectric_rejects_nonpositive) {
    EXPECT_THROW(t1_dielectric(0.0, 1e6), ValidationError);
    EXPECT_THROW(t1_dielectric(5e9, -1.0), ValidationError);
}

TEST(coherence, purcell_substitution) {
    double delta = 1e9;
    double g = delta / 10.0;
    double kappa = delta / 100.0;
    // Delta^2 / (kappa g^2) = 100 / kappa = 1e4 / Delta, with kappa taken as angular.
    EXPECT_NEAR(t1_purcell(g, delta, kappa), 1e4 / (2.0 * std::numbers::pi * delta), 1e-20);
}

TEST(coherence, purcell_no_channel) {
    EXPECT_EQ(t1_purcell(0.0, 1e9, 1e6), kNoDecay);
    EXPECT_TRUE(std::isinf(t1_purcell(0.0, 1e9, 1e6)));
}

TEST(coherence, purcell_errors) {
    EXPECT_THROW(t1_purcell(1e6, 0.0, 1e6), ValidationError);
    EXPECT_THROW(t1_purcell(1e6, 1e9, 0.0), ValidationError);
}

TEST(coherence, purcell_quadratic_in_detuning) {
    for (double delta : {0.3e9, -1.1e9, 2.5e9}) {
        EXPECT_EQ(t1_purcell(12e6, 2.0 * delta, 1.28e6) / t1_purcell(12e6, delta, 1.28e6), 4.0);
    }
}

TEST(coherence, combine_examples) {
    std::array<double, 2> one{10e-6, kNoDecay};
    EXPECT_DOUBLE_EQ(combine(one), 10e-6);
    std::array<double, 2> two{20e-6, 20e-6};
    EXPECT_DOUBLE_EQ(combine(two), 10e-6);
    std::array<double, 2> none{kNoDecay, kNoDecay};
    EXPECT_EQ(combine(none), kNoDecay);
}

TEST(coherence, combine_errors) {
    EXPECT_THROW(combine(std::span<const double>{}), ValidationError);
    std::array<double, 2> bad{10e-6, 0.0};
    EXPECT_THROW(combine(bad), ValidationError);
}

TEST(coherence, combine_permutation_invariant_and_monotone) {
    std::vector<double> t{24e-6, 130e-6, 7e-6, 1e-3};
    double base = combine(t);
    std::sort(t.begin(), t.end());
    do {
        EXPECT_NEAR(combine(t), base, 1e-15 * base);
    } while (std::next_permutation(t.begin(), t.end()));
    auto more = t;
    more.push_back(5e-3);
    EXPECT_LT(combine(more), base);
    EXPECT_LE(base, *std::min_element(t.begin(), t.end()));
}

TEST(coherence, transmon_equivalent_scaling) {
    double g = transmon_equivalent_g(2.2e6, -0.398e9, 170e6);
    EXPECT_NEAR(transmon_equivalent_g(4.0 * 2.2e6, -0.398e9, 170e6), 2.0 * g, 1e-9 * g);
    // Qubit below the resonator: |chi| = (g^2 / |Delta|)(alpha / (|Delta| + alpha)).
    double chi = g * g / 0.398e9 * (170e6 / (0.398e9 + 170e6));
    EXPECT_NEAR(2.0 * chi, 2.2e6, 1e-6);
}

TEST(coherence, transmon_purcell_far_below_measured) {
    double g = transmon_equivalent_g(2.2e6, -0.398e9, 170e6);
    EXPECT_NEAR(g, 38.25e6, 0.01e6);
    EXPECT_NEAR(t1_purcell(g, -0.398e9, 1.28e6), 13.46e-6, 0.01e-6);
    EXPECT_LT(t1_purcell(g, -0.398e9, 1.28e6), t1_dielectric(7.185e9, 1.1e6));
}

TEST(coherence, transmon_equivalent_errors) {
    EXPECT_THROW(transmon_equivalent_g(2.2e6, 170e6, 170e6), NumericalError);
    EXPECT_THROW(transmon_equivalent_g(2.2e6, 0.0, 170e6), NumericalError);
    // Straddling regime: 0 < Delta < alpha has no positive-chi solution.
    EXPECT_THROW(transmon_equivalent_g(2.2e6, 100e6, 170e6), NumericalError);
    EXPECT_THROW(transmon_equivalent_g(-1.0, -1e9, 170e6), ValidationError);
}

TEST(coherence, config_check) {
    EXPECT_NO_THROW(CoherenceConfig{}.check());
    EXPECT_THROW((CoherenceConfig{0.0, 1e6}.check()), ValidationError);
    EXPECT_THROW((CoherenceConfig{1e6, -1.0}.check()), ValidationError);
}

TEST(coherence, report_combines_channels) {
    auto p = CircuitParams::table_one();
    p.d_j = 0.045;
    auto s = dressed_spectrum(derive_energies(p));
    auto r = coherence_report(s, CoherenceConfig{});
    EXPECT_NEAR(1.0 / r.t1_model, 1.0 / r.t1_diel + 1.0 / r.t1_asymm, 1e-12 / r.t1_model);
    EXPECT_DOUBLE_EQ(r.t1_diel, t1_dielectric(s.omega_q_t, 1.1e6));
    // Smallest detuning: the asymmetry channel is within an order of
    // magnitude of the dielectric limit.
    EXPECT_GT(r.t1_asymm, r.t1_diel);
    EXPECT_LT(r.t1_asymm, 10.0 * r.t1_diel);
    EXPECT_LT(r.t1_transmon_purcell, r.t1_asymm);
}

TEST(coherence, report_symmetric_device_has_no_purcell_channel) {
    auto s = dressed_spectrum(derive_energies(CircuitParams::table_one()));
    auto r = coherence_report(s, CoherenceConfig{});
    EXPECT_EQ(r.t1_asymm, kNoDecay);
    EXPECT_EQ(r.t1_model, r.t1_diel);
}
