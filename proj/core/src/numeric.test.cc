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

#include "quantromon/numeric.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "quantromon/errors.h"

using namespace quantromon;

namespace {

ModeEnergies table_one(double d_j = 0.0) {
    auto p = CircuitParams::table_one();
    p.d_j = d_j;
    return derive_energies(p);
}

ModeEnergies with_b(const ModeEnergies &en, double b, double d_j) {
    return ModeEnergies::from_scales(en.e_j, en.e_lr, en.e_cq, en.e_cr, b, d_j);
}

}  // namespace

TEST(numeric, truncation_limits) {
    EXPECT_THROW((Truncation{3, 12}.check()), ValidationError);
    EXPECT_THROW((Truncation{12, 2}.check()), ValidationError);
    EXPECT_THROW((Truncation{31, 12}.check()), ValidationError);
    EXPECT_NO_THROW((Truncation{4, 4}.check()));
    EXPECT_THROW(build_hamiltonian(table_one(), {3, 3}), ValidationError);
}

TEST(numeric, rejects_overflow_scale_energies) {
    auto en = table_one();
    en.e_cq = 1e300;
    EXPECT_THROW(build_hamiltonian(en, {}), ValidationError);
}

TEST(numeric, hamiltonian_symmetric) {
    auto h = build_hamiltonian(table_one(0.045), {12, 12});
    double asym = (h.entries - h.entries.transpose()).cwiseAbs().maxCoeff();
    EXPECT_LE(asym, 1e-9 * h.entries.norm());
    EXPECT_EQ(h.dim(), 144);
}

TEST(numeric, uncoupled_hamiltonian_is_direct_sum) {
    auto h = build_hamiltonian(with_b(table_one(), 0.0, 0.0), {8, 6});
    for (int iq = 0; iq < 8; iq++) {
        for (int ir = 0; ir < 6; ir++) {
            for (int jq = 0; jq < 8; jq++) {
                for (int jr = 0; jr < 6; jr++) {
                    double v = h.entries(h.index(iq, ir), h.index(jq, jr));
                    if (iq != jq && ir != jr) {
                        EXPECT_EQ(v, 0.0);
                    }
                    if (iq != jq && ir == jr) {
                        // Qubit-only block identical for every resonator level.
                        EXPECT_EQ(v, h.entries(h.index(iq, 0), h.index(jq, 0)));
                    }
                }
            }
        }
    }
}

TEST(numeric, harmonic_limit_spectrum) {
    auto en = table_one(0.045);
    auto h = build_hamiltonian(en, {6, 5}, {.self_kerr = false, .cross_kerr = false, .transverse = false});
    auto eig = eigensolve(h.entries);
    auto bare = bare_modes(en);
    std::vector<double> expected;
    for (int mq = 0; mq < 6; mq++) {
        for (int mr = 0; mr < 5; mr++) {
            expected.push_back(mq * bare.omega_q + mr * bare.omega_r);
        }
    }
    std::sort(expected.begin(), expected.end());
    for (std::size_t k = 0; k < expected.size(); k++) {
        EXPECT_EQ(eig.values(static_cast<Eigen::Index>(k)), expected[k]);
    }
    auto s = extract_observables(label_states(eig, {6, 5}));
    EXPECT_EQ(s.alpha_q, 0.0);
    EXPECT_EQ(s.two_chi, 0.0);
    for (const auto &[label, ov] : label_states(eig, {6, 5}).overlaps) {
        EXPECT_EQ(ov, 1.0);
    }
}

TEST(numeric, uncoupled_modes_label_cleanly) {
    // The qubit quartic still mixes qubit levels two and four apart, so the
    // overlaps sit just below one; the resonator index stays exact.
    auto en = with_b(table_one(), 0.0, 0.0);
    auto ls = label_states(eigensolve(build_hamiltonian(en, {10, 6}).entries), {10, 6});
    for (const auto &[label, ov] : ls.overlaps) {
        EXPECT_GT(ov, 0.99);
    }
    auto s = extract_observables(ls);
    double scale = bare_modes(en).omega_r;
    EXPECT_NEAR(s.two_chi, 0.0, 1e-12 * scale);
    EXPECT_NEAR(s.omega_r_t, scale, 1e-12 * scale);
}

TEST(numeric, parity_blocks_without_asymmetry) {
    auto h = build_hamiltonian(table_one(), {10, 10});
    for (int i = 0; i < h.dim(); i++) {
        for (int j = 0; j < h.dim(); j++) {
            auto [iq, ir] = h.label(i);
            auto [jq, jr] = h.label(j);
            if ((ir - jr) % 2 != 0 || (iq - jq) % 2 != 0) {
                EXPECT_EQ(h.entries(i, j), 0.0);
            }
        }
    }
}

TEST(numeric, table_one_dispersive_regime) {
    auto en = table_one();
    auto ls = label_states(eigensolve(build_hamiltonian(en, {12, 12}).entries), {12, 12});
    for (const auto &[label, ov] : ls.overlaps) {
        EXPECT_GT(ov, 0.9);
    }
    auto s = extract_observables(ls);
    auto analytic = dressed_spectrum(en);
    EXPECT_EQ(s.source, SpectrumSource::Numeric);
    EXPECT_LT(std::abs(s.two_chi - analytic.two_chi) / analytic.two_chi, 0.10);
    // Frozen regression values of this oracle (12 x 12).
    EXPECT_NEAR(s.two_chi, 2.0056553e6, 50.0);
    EXPECT_NEAR(s.omega_q_t, 7.1894054e9, 1e3);
    EXPECT_NEAR(s.omega_r_t, 7.5865332e9, 1e3);
    // The quartic-only potential renormalizes the anharmonicity ~12% above
    // E_CQ at second order; see the acceptance suite.
    EXPECT_NEAR(s.alpha_q, 190.37756e6, 1e3);
}

TEST(numeric, truncation_convergence) {
    auto en = table_one();
    auto s10 = numeric_spectrum(en, {10, 10});
    auto s14 = numeric_spectrum(en, {14, 14});
    EXPECT_LT(std::abs(s14.two_chi - s10.two_chi), 0.01 * s14.two_chi);
    EXPECT_LT(std::abs(s14.omega_q_t - s10.omega_q_t), 0.01 * s14.omega_q_t);
    EXPECT_LT(std::abs(s14.alpha_q - s10.alpha_q), 0.01 * s14.alpha_q);
}

TEST(numeric, perturbative_limit_matches_closed_form) {
    // Shrinking both charging energies drives the system deep into the
    // perturbative regime, where first-order cross-Kerr theory is exact.
    auto base = table_one();
    auto en = ModeEnergies::from_scales(base.e_j, base.e_lr, base.e_cq / 400.0, base.e_cr / 400.0, base.b, 0.0);
    auto num = numeric_spectrum(en, {10, 10});
    auto ana = dressed_spectrum(en);
    EXPECT_NEAR(num.two_chi / ana.two_chi, 1.0, 0.01);
    EXPECT_NEAR(num.alpha_q / en.e_cq, 1.0, 0.01);
}

TEST(numeric, agreement_degrades_with_inductive_ratio) {
    auto base = table_one();
    double prev = -1.0;
    for (double ratio : {15.0, 10.0, 6.0, 4.0, 3.0, 2.0}) {
        auto en = ModeEnergies::from_scales(base.e_j, ratio * base.e_j, base.e_cq, base.e_cr, base.b, 0.0);
        double num = numeric_spectrum(en, {12, 12}).two_chi;
        double ana = dressed_spectrum(en).two_chi;
        double rel = std::abs(num - ana) / num;
        EXPECT_GT(rel, prev) << "ratio " << ratio;
        prev = rel;
    }
}

TEST(numeric, asymmetry_adds_transverse_shift) {
    auto sym = numeric_spectrum(table_one(), {12, 12});
    auto asym = numeric_spectrum(table_one(0.045), {12, 12});
    EXPECT_GT(asym.two_chi, sym.two_chi);
    EXPECT_EQ(sym.g_asymm, 0.0);
}

TEST(numeric, asymmetry_factor_tracks_closed_form) {
    auto sym = numeric_spectrum(table_one(), {12, 12});
    auto asym = numeric_spectrum(table_one(0.045), {12, 12});
    auto ana = dressed_spectrum(table_one(0.045));
    double closed = ana.two_chi_total / ana.two_chi;
    EXPECT_NEAR(asym.two_chi / sym.two_chi, closed, 0.02 * closed);
}

TEST(numeric, transverse_matrix_element_matches_closed_form_coupling) {
    for (double d : {0.045, -0.2}) {
        auto en = table_one(d);
        auto num = numeric_spectrum(en, {8, 8});
        auto ana = dressed_spectrum(en);
        EXPECT_NEAR(num.g_asymm / ana.g_asymm, 1.0, 1e-12);
    }
}

TEST(numeric, resonant_hybridization_is_ambiguous) {
    auto base = table_one(0.5);
    Truncation trunc{8, 8};
    // Bisect the qubit inductive energy until the two single-excitation
    // eigenvectors carry equal weight on |1,0> and |0,1>.
    auto imbalance = [&](double ejs) {
        auto en = base.retuned(ejs, 0.5);
        auto h = build_hamiltonian(en, trunc);
        auto eig = eigensolve(h.entries);
        // Lowest eigenvector with appreciable weight on either bare state.
        for (Eigen::Index k = 0; k < eig.vectors.cols(); k++) {
            double a = eig.vectors(h.index(1, 0), k);
            double b = eig.vectors(h.index(0, 1), k);
            if (a * a + b * b > 0.5) {
                return a * a - b * b;
            }
        }
        return 0.0;
    };
    double lo = 30e9;
    double hi = 50e9;
    ASSERT_LT(imbalance(lo) * imbalance(hi), 0.0);
    for (int it = 0; it < 200; it++) {
        double mid = 0.5 * (lo + hi);
        (imbalance(mid) * imbalance(lo) > 0.0 ? lo : hi) = mid;
    }
    auto en = base.retuned(0.5 * (lo + hi), 0.5);
    auto eig = eigensolve(build_hamiltonian(en, trunc).entries);
    EXPECT_THROW(label_states(eig, trunc), AmbiguousLabeling);
}

TEST(numeric, eigensolve_two_by_two) {
    Eigen::MatrixXd h(2, 2);
    h << 0.0, 1.0, 1.0, 0.0;
    auto eig = eigensolve(h);
    EXPECT_NEAR(eig.values(0), -1.0, 1e-15);
    EXPECT_NEAR(eig.values(1), 1.0, 1e-15);
}

TEST(numeric, eigensolve_diagonal) {
    Eigen::MatrixXd h = Eigen::Vector4d(-2.0, 0.5, 3.0, 7.0).asDiagonal();
    auto eig = eigensolve(h);
    for (int k = 0; k < 4; k++) {
        EXPECT_EQ(eig.values(k), h(k, k));
    }
    EXPECT_TRUE(eig.vectors.cwiseAbs().isApprox(Eigen::MatrixXd::Identity(4, 4)));
}

TEST(numeric, eigensolve_random_reconstruction) {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> dist(0.0, 1e9);
    for (int trial = 0; trial < 5; trial++) {
        Eigen::MatrixXd a(20, 20);
        for (int i = 0; i < 20; i++) {
            for (int j = 0; j < 20; j++) {
                a(i, j) = dist(rng);
            }
        }
        Eigen::MatrixXd h = 0.5 * (a + a.transpose());
        auto eig = eigensolve(h);
        Eigen::MatrixXd rebuilt = eig.vectors * eig.values.asDiagonal() * eig.vectors.transpose();
        EXPECT_LE((rebuilt - h).norm(), 1e-8 * h.norm());
        for (int k = 1; k < 20; k++) {
            EXPECT_LE(eig.values(k - 1), eig.values(k));
        }
    }
}

TEST(numeric, eigensolve_rejects_asymmetric) {
    Eigen::MatrixXd h(2, 2);
    h << 0.0, 1.0, 2.0, 0.0;
    EXPECT_THROW(eigensolve(h), ValidationError);
}
