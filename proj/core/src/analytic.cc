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

#include "quantromon/analytic.h"

#include <cmath>

#include "quantromon/constants.h"
#include "quantromon/errors.h"

namespace quantromon {

ConstraintCoefficients constraint_coefficients(double e_j, double e_lr, double b) {
    if (!(b > 0.0 && b < 1.0)) {
        throw ValidationError("constraint_coefficients: b must satisfy 0 < b < 1");
    }
    if (!(e_lr > 0.0)) {
        throw ValidationError("constraint_coefficients: e_lr must be positive");
    }
    if (!(e_j >= 0.0)) {
        throw ValidationError("constraint_coefficients: e_j must be non-negative");
    }
    ConstraintCoefficients c;
    c.c1 = -(2.0 * e_j) / (2.0 * e_j + 4.0 * e_lr / (1.0 - b));
    c.c2 = -(e_j + 2.0 * e_lr / b) / (2.0 * e_j + 4.0 * e_lr / (b * (1.0 - b)));
    return c;
}

double mode_impedance(double e_c, double e_j_mode) {
    const auto &k = kConstants;
    double hbar = k.planck_h / kTwoPi;
    return hbar / (k.electron_charge_e * k.electron_charge_e) * std::sqrt(e_c / e_j_mode);
}

BareModes bare_modes(const ModeEnergies &en) {
    return {
        .omega_q = std::sqrt(8.0 * en.e_jq * en.e_cq),
        .omega_r = std::sqrt(8.0 * en.e_jr * en.e_cr),
        .z_q = mode_impedance(en.e_cq, en.e_jq),
        .z_r = mode_impedance(en.e_cr, en.e_jr),
    };
}

const char *to_string(SpectrumSource source) {
    return source == SpectrumSource::Analytic ? "analytic" : "numeric";
}

namespace {

// sqrt(E_CR E_CQ / (b^2/2 + E_LR/E_J)), the common scale of every coupling term.
double coupling_scale(const ModeEnergies &en) {
    return std::sqrt(en.e_cr * en.e_cq / (en.b * en.b / 2.0 + en.e_lr / en.e_j));
}

}  // namespace

double cross_kerr_two_chi(const ModeEnergies &en) {
    return en.b * en.b / std::sqrt(2.0) * coupling_scale(en);
}

SpectrumResult dressed_spectrum(const ModeEnergies &en) {
    auto bare = bare_modes(en);
    double shift = en.b * en.b / 2.0 * coupling_scale(en);

    SpectrumResult s;
    s.source = SpectrumSource::Analytic;
    s.omega_q_t = bare.omega_q - en.e_cq - shift;
    s.omega_r_t = bare.omega_r - shift;
    s.alpha_q = en.e_cq;
    s.two_chi = cross_kerr_two_chi(en);
    auto corr = asymmetric_corrections(en, s.two_chi, s.delta());
    s.g_asymm = corr.g_asymm;
    s.two_chi_total = corr.two_chi_total;
    return s;
}

double asymmetry_factor(double delta, double alpha_q, double e_jsigma, double d_j) {
    if (d_j == 0.0) {
        return 1.0;
    }
    double denom = delta * (delta - alpha_q);
    if (denom == 0.0 || !std::isfinite(denom)) {
        throw NumericalError("straddling resonance: delta (delta - alpha_q) = 0, transverse dispersive correction diverges");
    }
    return 1.0 + 2.0 * d_j * d_j * e_jsigma * alpha_q / denom;
}

AsymmetryCorrection asymmetric_corrections(const ModeEnergies &en, double two_chi, double delta) {
    if (!(two_chi >= 0.0)) {
        throw ValidationError("asymmetric_corrections: 2chi must be non-negative");
    }
    AsymmetryCorrection out;
    if (en.d_j == 0.0) {
        out.g_asymm = 0.0;
        out.two_chi_total = two_chi;
        return out;
    }
    out.g_asymm = -en.d_j * std::sqrt(two_chi * en.e_jsigma());
    out.two_chi_total = asymmetry_factor(delta, en.e_cq, en.e_jsigma(), en.d_j) * two_chi;
    return out;
}

double invert_chi(double two_chi_measured, double delta, double alpha_q, double e_jsigma, double d_j) {
    double factor = asymmetry_factor(delta, alpha_q, e_jsigma, d_j);
    if (!(factor > 0.0)) {
        throw NumericalError("invert_chi: correction factor <= 0, unphysical regime");
    }
    return two_chi_measured / factor;
}

}  // namespace quantromon
