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

#include <cmath>

#include "quantromon/constants.h"
#include "quantromon/errors.h"

namespace quantromon {

void CoherenceConfig::check() const {
    if (!(q_diel > 0.0) || !std::isfinite(q_diel)) {
        throw ValidationError("q_diel must be positive and finite");
    }
    if (!(kappa > 0.0) || !std::isfinite(kappa)) {
        throw ValidationError("kappa must be positive and finite");
    }
}

double t1_dielectric(double omega_q, double q_diel) {
    if (!(omega_q > 0.0) || !(q_diel > 0.0)) {
        throw ValidationError("t1_dielectric: frequency and quality factor must be positive");
    }
    return q_diel / (kTwoPi * omega_q);
}

double t1_purcell(double g, double delta, double kappa) {
    if (delta == 0.0) {
        throw ValidationError("t1_purcell: zero detuning");
    }
    if (!(kappa > 0.0)) {
        throw ValidationError("t1_purcell: kappa must be positive");
    }
    if (g == 0.0) {
        return kNoDecay;
    }
    // Gamma = kappa g^2 / Delta^2 in angular units; one factor of 2 pi survives.
    return delta * delta / (kTwoPi * kappa * g * g);
}

double combine(std::span<const double> contributions) {
    if (contributions.empty()) {
        throw ValidationError("combine: no T1 contributions");
    }
    double rate = 0.0;
    for (double t : contributions) {
        if (!(t > 0.0)) {
            throw ValidationError("combine: T1 contributions must be positive");
        }
        if (!std::isinf(t)) {
            rate += 1.0 / t;
        }
    }
    return rate == 0.0 ? kNoDecay : 1.0 / rate;
}

double transmon_equivalent_g(double two_chi_target, double delta, double alpha_q) {
    if (!(two_chi_target >= 0.0)) {
        throw ValidationError("transmon_equivalent_g: target 2chi must be non-negative");
    }
    if (alpha_q == 0.0 || delta == 0.0 || delta == alpha_q) {
        throw NumericalError("transmon_equivalent_g: non-invertible at a pole of the dispersive formula");
    }
    double g2 = two_chi_target / 2.0 * delta * (delta - alpha_q) / alpha_q;
    if (g2 < 0.0) {
        throw NumericalError("transmon_equivalent_g: non-invertible regime, Delta (Delta - alpha) / alpha < 0");
    }
    return std::sqrt(g2);
}

CoherenceReport coherence_report(const SpectrumResult &spectrum, const CoherenceConfig &cfg) {
    cfg.check();
    CoherenceReport r;
    double delta = spectrum.delta();
    r.t1_diel = t1_dielectric(spectrum.omega_q_t, cfg.q_diel);
    r.t1_asymm = t1_purcell(spectrum.g_asymm, delta, cfg.kappa);
    double parts[] = {r.t1_diel, r.t1_asymm};
    r.t1_model = combine(parts);
    double g_transmon = transmon_equivalent_g(spectrum.two_chi_total, delta, spectrum.alpha_q);
    r.t1_transmon_purcell = t1_purcell(g_transmon, delta, cfg.kappa);
    return r;
}

}  // namespace quantromon
