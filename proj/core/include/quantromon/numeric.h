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
#ifndef QUANTROMON_NUMERIC_H
#define QUANTROMON_NUMERIC_H

#include <map>
#include <utility>

#include <Eigen/Dense>

#include "quantromon/analytic.h"
#include "quantromon/params.h"

namespace quantromon {

/// Fock levels kept per mode.
struct Truncation {
    int n_q = 12;
    int n_r = 12;

    static constexpr int kMinLevels = 4;
    /// The quartic-expanded potential is unbounded below; far above this the
    /// basis starts resolving the spurious runaway states.
    static constexpr int kMaxLevels = 30;

    int dim() const {
        return n_q * n_r;
    }
    void check() const;

    bool operator==(const Truncation &) const = default;
};

/// Which terms build_hamiltonian includes on top of the harmonic part.
struct HamiltonianTerms {
    bool self_kerr = true;
    bool cross_kerr = true;
    bool transverse = true;
};

/// Dense real symmetric representation in the product Fock basis of the two
/// harmonic modes, in Hz. Basis index = i_q * n_r + i_r.
struct HamiltonianMatrix {
    Eigen::MatrixXd entries;
    Truncation trunc;
    /// Zero-point flux amplitudes (2 E_C / E_Jmode)^(1/4) of each mode.
    double phi_zpf_q = 0.0;
    double phi_zpf_r = 0.0;

    int dim() const {
        return trunc.dim();
    }
    int index(int i_q, int i_r) const {
        return i_q * trunc.n_r + i_r;
    }
    std::pair<int, int> label(int flat) const {
        return {flat / trunc.n_r, flat % trunc.n_r};
    }
};

/// Builds
///   H = omega_q n_q + omega_r n_r
///       - (E_JSigma / 24) phi_q^4 - (b^4 / 384) E_JSigma phi_r^4
///       - (b^2 / 16) E_JSigma phi_q^2 phi_r^2 - d_J (b / 2) E_JSigma phi_r phi_q
/// with phi = phi_zpf (a + a^dagger). The charge and quadratic inductive terms
/// of each mode are written directly in their diagonal ladder form; constant
/// offsets are dropped. Operator powers are formed in a padded space and then
/// truncated so the retained block is exact.
HamiltonianMatrix build_hamiltonian(const ModeEnergies &en, Truncation trunc, HamiltonianTerms terms = {});

/// Zero-point flux amplitude of a mode with H = 4 E_C n^2 + (E_J / 2) phi^2.
double zero_point_phase(double e_c, double e_j_mode);

struct Eigenpairs {
    Eigen::VectorXd values;   // ascending
    Eigen::MatrixXd vectors;  // orthonormal columns
};

/// Dense symmetric eigendecomposition. Verifies ||H v - lambda v|| <= 1e-8 ||H||
/// per pair and orthonormality to 1e-8; throws NumericalError otherwise.
Eigenpairs eigensolve(const Eigen::MatrixXd &h);

struct StateLabel {
    int m_q = 0;
    int m_r = 0;
    auto operator<=>(const StateLabel &) const = default;
};

/// Dressed energies for m_q <= 2, m_r <= 1, keyed by their dominant bare label.
struct LabeledSpectrum {
    std::map<StateLabel, double> energies;
    std::map<StateLabel, double> overlaps;

    double energy(int m_q, int m_r) const;
};

/// Greedy assignment by descending |<bare|dressed>|^2. Throws AmbiguousLabeling
/// if any required label ends up with overlap < 0.5.
LabeledSpectrum label_states(const Eigenpairs &eig, Truncation trunc);

/// Observables from the labeled energies. two_chi here already contains every
/// coupling in the Hamiltonian, so two_chi_total == two_chi and g_asymm is 0.
SpectrumResult extract_observables(const LabeledSpectrum &ls);

/// build -> eigensolve -> label -> extract. g_asymm is filled with the
/// transverse matrix element of the Hamiltonian.
SpectrumResult numeric_spectrum(const ModeEnergies &en, Truncation trunc = {});

}  // namespace quantromon

#endif
