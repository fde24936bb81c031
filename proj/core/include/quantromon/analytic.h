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
#ifndef QUANTROMON_ANALYTIC_H
#define QUANTROMON_ANALYTIC_H

#include "quantromon/params.h"

namespace quantromon {

/// Small-amplitude solution of the two constraint equations:
/// x1 = c1 * x4 and x2 = c2 * x3.
struct ConstraintCoefficients {
    double c1 = 0.0;
    double c2 = 0.0;
};

/// Requires 0 < b < 1 and e_lr > 0. Energies may be in any common unit.
ConstraintCoefficients constraint_coefficients(double e_j, double e_lr, double b);

/// Uncoupled harmonic modes. Frequencies in Hz, impedances in ohm.
struct BareModes {
    double omega_q = 0.0;
    double omega_r = 0.0;
    double z_q = 0.0;
    double z_r = 0.0;
};

BareModes bare_modes(const ModeEnergies &en);

/// Mode impedance (hbar / e^2) sqrt(E_C / E_J) in ohm.
double mode_impedance(double e_c, double e_j_mode);

enum class SpectrumSource { Analytic, Numeric };

const char *to_string(SpectrumSource source);

/// Dressed two-mode observables, all in Hz.
///
/// Sign conventions: the interaction is -2 chi n_q n_r with chi > 0, and the
/// detuning is signed, delta = omega_q_t - omega_r_t. two_chi is the pure
/// cross-Kerr part; two_chi_total adds the asymmetry-induced transverse part.
struct SpectrumResult {
    double omega_q_t = 0.0;
    double omega_r_t = 0.0;
    double alpha_q = 0.0;
    double two_chi = 0.0;
    double g_asymm = 0.0;
    double two_chi_total = 0.0;
    SpectrumSource source = SpectrumSource::Analytic;

    double delta() const {
        return omega_q_t - omega_r_t;
    }
};

/// Closed-form renormalized spectrum. Evaluated once with bare energies (no
/// self-consistency). The transverse correction uses the detuning computed
/// from the same closed-form frequencies.
SpectrumResult dressed_spectrum(const ModeEnergies &en);

/// Cross-Kerr dispersive shift 2 chi in Hz.
double cross_kerr_two_chi(const ModeEnergies &en);

struct AsymmetryCorrection {
    double g_asymm = 0.0;
    double two_chi_total = 0.0;
};

/// Transverse coupling g = -d_J sqrt(2 chi E_JSigma) and the total shift
///   2 chi~ = (1 + 2 d_J^2 E_JSigma alpha_q / (delta (delta - alpha_q))) 2 chi,
/// with delta = omega_q - omega_r signed and alpha_q = en.e_cq > 0 the size of
/// the qubit anharmonicity. For a qubit below the resonator this is the
/// familiar |delta| (|delta| + alpha_q) denominator; the second pole sits at
/// the |1,1> <-> |2,0> resonance delta = alpha_q. E_JSigma enters as a
/// frequency (Hz). Throws NumericalError at either pole for nonzero d_J.
AsymmetryCorrection asymmetric_corrections(const ModeEnergies &en, double two_chi, double delta);

/// The bracketed factor multiplying chi in the total shift.
double asymmetry_factor(double delta, double alpha_q, double e_jsigma, double d_j);

/// Recovers the cross-Kerr 2 chi from a measured total 2 chi~.
double invert_chi(double two_chi_measured, double delta, double alpha_q, double e_jsigma, double d_j);

}  // namespace quantromon

#endif
