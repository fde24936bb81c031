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
#include <string>
#include <tuple>
#include <vector>

#include "quantromon/errors.h"

namespace quantromon {

void Truncation::check() const {
    if (n_q < kMinLevels || n_r < kMinLevels) {
        throw ValidationError(
            "truncation below minimum: need at least " + std::to_string(kMinLevels) + " levels per mode (got " +
            std::to_string(n_q) + "x" + std::to_string(n_r) + ")");
    }
    if (n_q > kMaxLevels || n_r > kMaxLevels) {
        throw ValidationError(
            "truncation above maximum of " + std::to_string(kMaxLevels) + " levels per mode (got " +
            std::to_string(n_q) + "x" + std::to_string(n_r) + ")");
    }
}

double zero_point_phase(double e_c, double e_j_mode) {
    return std::pow(2.0 * e_c / e_j_mode, 0.25);
}

namespace {

constexpr int kPadding = 4;

// (a + a^dagger)^power restricted to the first n levels, computed exactly.
Eigen::MatrixXd position_power(int n, int power) {
    int padded = n + kPadding;
    Eigen::MatrixXd x = Eigen::MatrixXd::Zero(padded, padded);
    for (int k = 1; k < padded; k++) {
        double s = std::sqrt(static_cast<double>(k));
        x(k - 1, k) = s;
        x(k, k - 1) = s;
    }
    Eigen::MatrixXd acc = Eigen::MatrixXd::Identity(padded, padded);
    for (int p = 0; p < power; p++) {
        acc = acc * x;
    }
    return acc.topLeftCorner(n, n);
}

Eigen::MatrixXd kron(const Eigen::MatrixXd &a, const Eigen::MatrixXd &b) {
    Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

void check_energies(const ModeEnergies &en) {
    auto finite_positive = [](double v) {
        return v > 0.0 && std::isfinite(v) && v < 1e15;
    };
    if (!finite_positive(en.e_j) || !finite_positive(en.e_lr) || !finite_positive(en.e_cq) ||
        !finite_positive(en.e_cr) || !finite_positive(en.e_jq) || !finite_positive(en.e_jr)) {
        throw ValidationError("build_hamiltonian: energies must be positive, finite and below 1e15 Hz");
    }
}

}  // namespace

HamiltonianMatrix build_hamiltonian(const ModeEnergies &en, Truncation trunc, HamiltonianTerms terms) {
    trunc.check();
    check_energies(en);

    auto bare = bare_modes(en);
    HamiltonianMatrix out;
    out.trunc = trunc;
    out.phi_zpf_q = zero_point_phase(en.e_cq, en.e_jq);
    out.phi_zpf_r = zero_point_phase(en.e_cr, en.e_jr);

    const int nq = trunc.n_q;
    const int nr = trunc.n_r;
    const double ejs = en.e_jsigma();
    const double b = en.b;
    const double zq = out.phi_zpf_q;
    const double zr = out.phi_zpf_r;

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(trunc.dim(), trunc.dim());
    for (int iq = 0; iq < nq; iq++) {
        for (int ir = 0; ir < nr; ir++) {
            h(out.index(iq, ir), out.index(iq, ir)) = iq * bare.omega_q + ir * bare.omega_r;
        }
    }

    Eigen::MatrixXd id_q = Eigen::MatrixXd::Identity(nq, nq);
    Eigen::MatrixXd id_r = Eigen::MatrixXd::Identity(nr, nr);
    if (terms.self_kerr) {
        h -= (ejs / 24.0) * std::pow(zq, 4) * kron(position_power(nq, 4), id_r);
        h -= (std::pow(b, 4) / 384.0) * ejs * std::pow(zr, 4) * kron(id_q, position_power(nr, 4));
    }
    if (terms.cross_kerr && b != 0.0) {
        h -= (b * b / 16.0) * ejs * zq * zq * zr * zr * kron(position_power(nq, 2), position_power(nr, 2));
    }
    if (terms.transverse && en.d_j != 0.0 && b != 0.0) {
        h -= en.d_j * (b / 2.0) * ejs * zq * zr * kron(position_power(nq, 1), position_power(nr, 1));
    }

    out.entries = 0.5 * (h + h.transpose());
    return out;
}

Eigenpairs eigensolve(const Eigen::MatrixXd &h) {
    if (h.rows() != h.cols() || h.rows() == 0) {
        throw ValidationError("eigensolve: matrix must be square and non-empty");
    }
    double norm = h.norm();
    double asym = (h - h.transpose()).cwiseAbs().maxCoeff();
    if (asym > 1e-9 * std::max(norm, 1e-300)) {
        throw ValidationError("eigensolve: matrix is not symmetric (max asymmetry " + std::to_string(asym) + ")");
    }

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw NumericalError(
            "eigensolve: tridiagonal QR failed to converge for dim " + std::to_string(h.rows()) +
            " (Eigen iteration limit " + std::to_string(Eigen::ComputationInfo::NoConvergence) + ")");
    }
    Eigenpairs out{solver.eigenvalues(), solver.eigenvectors()};

    double tol = 1e-8 * std::max(norm, 1e-300);
    Eigen::MatrixXd residual = h * out.vectors - out.vectors * out.values.asDiagonal();
    for (Eigen::Index k = 0; k < residual.cols(); k++) {
        double r = residual.col(k).norm();
        if (r > tol) {
            throw NumericalError(
                "eigensolve: residual " + std::to_string(r) + " exceeds bound for eigenpair " + std::to_string(k));
        }
    }
    Eigen::MatrixXd gram = out.vectors.transpose() * out.vectors;
    gram.diagonal().array() -= 1.0;
    if (gram.cwiseAbs().maxCoeff() > 1e-8) {
        throw NumericalError("eigensolve: eigenvectors not orthonormal to 1e-8");
    }
    return out;
}

double LabeledSpectrum::energy(int m_q, int m_r) const {
    auto it = energies.find({m_q, m_r});
    if (it == energies.end()) {
        throw AmbiguousLabeling("missing dressed label (" + std::to_string(m_q) + "," + std::to_string(m_r) + ")");
    }
    return it->second;
}

LabeledSpectrum label_states(const Eigenpairs &eig, Truncation trunc) {
    trunc.check();
    if (eig.vectors.rows() != trunc.dim()) {
        throw ValidationError("label_states: eigenvector dimension does not match truncation");
    }

    std::vector<StateLabel> required;
    for (int mq = 0; mq <= 2; mq++) {
        for (int mr = 0; mr <= 1; mr++) {
            required.push_back({mq, mr});
        }
    }

    struct Candidate {
        double overlap;
        Eigen::Index vec;
        std::size_t label;
    };
    std::vector<Candidate> candidates;
    for (std::size_t li = 0; li < required.size(); li++) {
        auto row = required[li].m_q * trunc.n_r + required[li].m_r;
        for (Eigen::Index k = 0; k < eig.vectors.cols(); k++) {
            double c = eig.vectors(row, k);
            candidates.push_back({c * c, k, li});
        }
    }
    // Descending overlap; near-ties (< 1e-9) fall back to eigenvalue order.
    std::stable_sort(candidates.begin(), candidates.end(), [](const Candidate &a, const Candidate &b) {
        if (std::abs(a.overlap - b.overlap) >= 1e-9) {
            return a.overlap > b.overlap;
        }
        return std::tie(a.vec, a.label) < std::tie(b.vec, b.label);
    });

    std::vector<bool> vec_taken(eig.vectors.cols(), false);
    std::vector<bool> label_done(required.size(), false);
    LabeledSpectrum out;
    for (const auto &c : candidates) {
        if (vec_taken[c.vec] || label_done[c.label]) {
            continue;
        }
        vec_taken[c.vec] = true;
        label_done[c.label] = true;
        out.energies[required[c.label]] = eig.values(c.vec);
        out.overlaps[required[c.label]] = c.overlap;
    }

    for (const auto &label : required) {
        double ov = out.overlaps.at(label);
        if (ov < 0.5) {
            throw AmbiguousLabeling(
                "state (" + std::to_string(label.m_q) + "," + std::to_string(label.m_r) +
                ") has best overlap " + std::to_string(ov) + " < 0.5; modes are strongly hybridized");
        }
    }
    return out;
}

SpectrumResult extract_observables(const LabeledSpectrum &ls) {
    double e00 = ls.energy(0, 0);
    double e10 = ls.energy(1, 0);
    double e20 = ls.energy(2, 0);
    double e01 = ls.energy(0, 1);
    double e11 = ls.energy(1, 1);

    SpectrumResult s;
    s.source = SpectrumSource::Numeric;
    s.omega_q_t = e10 - e00;
    s.omega_r_t = e01 - e00;
    s.alpha_q = (e10 - e00) - (e20 - e10);
    s.two_chi = e10 + e01 - e11 - e00;
    s.g_asymm = 0.0;
    s.two_chi_total = s.two_chi;
    return s;
}

SpectrumResult numeric_spectrum(const ModeEnergies &en, Truncation trunc) {
    auto h = build_hamiltonian(en, trunc);
    auto eig = eigensolve(h.entries);
    auto s = extract_observables(label_states(eig, trunc));
    // <1,0| H |0,1> is exactly the transverse coupling strength.
    s.g_asymm = h.entries(h.index(1, 0), h.index(0, 1));
    return s;
}

}  // namespace quantromon
