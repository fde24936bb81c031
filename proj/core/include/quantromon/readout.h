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
#ifndef QUANTROMON_READOUT_H
#define QUANTROMON_READOUT_H

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace quantromon {

/// Dispersive readout of a reflection-coupled resonator. Frequencies and
/// linewidths are ordinary frequencies in Hz; times in s.
///
/// omega_r is the resonator frequency with the qubit in state 0; state 1
/// pulls it to omega_r - two_chi. The simulator model:
///   pointer(s) = sqrt(nbar) * S11(readout_freq; pulled frequency of s),
///   noise sigma = 1 / (2 sqrt(efficiency * 2 pi kappa_ext * tau)),
/// i.e. the vacuum-limited quadrature noise of an output integrated for tau,
/// referred back through the external coupling and degraded by the detection
/// efficiency. efficiency is a calibration knob, not a prediction.
struct ReadoutParams {
    double omega_r = 0.0;
    double two_chi = 0.0;
    double kappa_ext = 0.0;
    double kappa_int = 0.0;
    double nbar = 0.0;
    double tau = 0.0;
    double t1 = 0.0;
    double readout_freq = 0.0;
    double efficiency = 1.0;
    double thermal_population = 0.0;

    /// Non-tunable device used for the single-shot histograms. T1, omega_r
    /// and the efficiency are calibration assumptions (see README).
    static ReadoutParams sample_c();

    void check() const;
    bool operator==(const ReadoutParams &) const = default;
};

/// S11 = (i (w - w_r) + (k_int - k_ext) / 2) / (i (w - w_r) + (k_int + k_ext) / 2).
std::complex<double> reflection_coefficient(double omega, double omega_r_pulled, double kappa_ext, double kappa_int);

/// Phase difference, in degrees, of S11 between the two pulled resonances when
/// probing at their midpoint. The phase is tracked continuously as the
/// detuning sweeps from -chi to +chi, so an over-coupled resonator reports
/// the wrapped branch (up to 360 degrees).
double phase_separation(double two_chi, double kappa_ext, double kappa_int);

/// 1-D projected pointer positions of the two qubit states and the noise.
struct PointerModel {
    double mean0 = 0.0;
    double mean1 = 0.0;
    double sigma = 0.0;
};

PointerModel pointer_model(const ReadoutParams &p);

struct ShotSet {
    int prepared_state = 0;
    std::vector<double> values;
    std::uint64_t seed = 0;
    ReadoutParams params;
};

/// Deterministic: shot k depends only on (seed, prepared, k). threads > 1
/// splits the index range without changing a single bit of the output.
ShotSet simulate_shots(const ReadoutParams &p, int prepared, int n_shots, std::uint64_t seed, int threads = 1);

struct GaussianMixtureFit {
    double mu0 = 0.0;
    double mu1 = 0.0;
    double sigma0 = 0.0;
    double sigma1 = 0.0;
    double a0 = 1.0;
    double a1 = 1.0;
    double residual_norm = 0.0;
    int iterations = 0;
};

/// Shared histogram edges (Freedman-Diaconis width on the pooled data).
struct Histogram {
    double lo = 0.0;
    double width = 0.0;
    std::vector<double> density0;
    std::vector<double> density1;

    double center(std::size_t bin) const {
        return lo + (static_cast<double>(bin) + 0.5) * width;
    }
};

Histogram shared_histogram(std::span<const double> shots0, std::span<const double> shots1);

/// Simultaneous least-squares fit of
///   state 0: A0 N(mu0, s0) + (1 - A0) N(mu1, s1)
///   state 1: (1 - A1) N(mu0, s0) + A1 N(mu1, s1)
/// to the two shared-edge histograms (densities) with a damped Gauss-Newton
/// (Levenberg-Marquardt) iteration. Throws DegenerateFit when the two sets do
/// not separate, NumericalError when the iteration cap is reached.
GaussianMixtureFit fit_double_gaussian(const ShotSet &shots0, const ShotSet &shots1);
GaussianMixtureFit fit_double_gaussian(std::span<const double> shots0, std::span<const double> shots1);

/// Intersection of the unit-weight normals N(mu0, s0) and N(mu1, s1) lying
/// strictly between the means.
double threshold(const GaussianMixtureFit &fit);

struct FidelityReport {
    double threshold = 0.0;
    double p01 = 0.0;  // P(0 | prepared 1)
    double p10 = 0.0;  // P(1 | prepared 0)
    double fidelity = 0.0;
    double eps_id = 0.0;
    double eps_01 = 0.0;
    double eps_10 = 0.0;
    bool degenerate = false;
};

/// Empirical assignment errors across the threshold; eps_id is the overlap of
/// the two fitted single Gaussians (both tails summed), and eps_01 / eps_10
/// are what remains of p01 / p10 after removing the matching overlap tail.
FidelityReport fidelity_report(
    std::span<const double> shots0, std::span<const double> shots1, const GaussianMixtureFit &fit, double threshold);

/// Fit, threshold and report in one go. Falls back to a flagged report built
/// from sample moments when there are too few shots or the fit degenerates.
FidelityReport analyze_shots(std::span<const double> shots0, std::span<const double> shots1);

struct IntegrationRow {
    double tau = 0.0;
    FidelityReport report;
};

/// simulate -> fit -> report for each integration time; both states share the
/// seed so neighbouring rows use common random numbers.
std::vector<IntegrationRow> error_vs_integration(
    const ReadoutParams &p, std::span<const double> tau_list, int n_shots, std::uint64_t seed);

}  // namespace quantromon

#endif
