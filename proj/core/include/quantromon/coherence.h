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
#ifndef QUANTROMON_COHERENCE_H
#define QUANTROMON_COHERENCE_H

#include <limits>
#include <span>

#include "quantromon/analytic.h"

namespace quantromon {

/// Returned by t1_purcell when there is no decay channel (g = 0).
inline constexpr double kNoDecay = std::numeric_limits<double>::infinity();

struct CoherenceConfig {
    double q_diel = 1.1e6;
    /// Readout linewidth kappa / 2 pi in Hz.
    double kappa = 1.28e6;

    void check() const;
    bool operator==(const CoherenceConfig &) const = default;
};

/// T1 budget in seconds. t1_transmon_purcell is the Purcell limit of a
/// transversely coupled transmon tuned to give the same total 2 chi.
struct CoherenceReport {
    double t1_diel = 0.0;
    double t1_asymm = 0.0;
    double t1_model = 0.0;
    double t1_transmon_purcell = 0.0;
};

/// Q / (2 pi f).
double t1_dielectric(double omega_q, double q_diel);

/// Purcell limit Delta^2 / (kappa g^2) with every argument an ordinary
/// frequency; converted to angular frequency internally. g = 0 -> kNoDecay.
double t1_purcell(double g, double delta, double kappa);

/// Harmonic sum of independent channels; kNoDecay entries add no rate.
double combine(std::span<const double> contributions);

/// Transmon coupling g reproducing |chi| = (g^2 / |Delta|)(alpha / (|Delta| + alpha))
/// for a qubit below the resonator, chi = two_chi_target / 2. Delta is signed
/// (qubit minus resonator) and alpha > 0 is the anharmonicity size, so in
/// general g^2 = chi Delta (Delta - alpha) / alpha, which must be positive.
double transmon_equivalent_g(double two_chi_target, double delta, double alpha_q);

/// Full budget for one operating point of the analytic spectrum.
CoherenceReport coherence_report(const SpectrumResult &spectrum, const CoherenceConfig &cfg);

}  // namespace quantromon

#endif
