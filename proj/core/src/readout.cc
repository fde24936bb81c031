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

#include "quantromon/readout.h"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <string>
#include <thread>

#include <Eigen/Dense>

#include "quantromon/constants.h"
#include "quantromon/errors.h"
#include "quantromon/philox.h"

namespace quantromon {

ReadoutParams ReadoutParams::sample_c() {
    ReadoutParams p;
    p.omega_r = 7.5e9;
    p.two_chi = 1.37e6;
    p.kappa_ext = 0.90e6;
    p.kappa_int = 0.38e6;
    p.nbar = 30.0;
    p.tau = 1.8e-6;
    p.t1 = 36e-6;
    p.readout_freq = p.omega_r - p.two_chi / 2.0;
    p.efficiency = 0.0148;
    p.thermal_population = 0.0065;
    return p;
}

void ReadoutParams::check() const {
    auto fail = [](const std::string &what) {
        throw ValidationError("readout: " + what);
    };
    if (!(kappa_ext >= 0.0) || !(kappa_int >= 0.0) || !(kappa_ext + kappa_int > 0.0)) {
        fail("linewidths must be non-negative with a positive sum");
    }
    if (!(tau > 0.0)) {
        fail("tau must be positive");
    }
    if (!(nbar > 0.0)) {
        fail("nbar must be positive");
    }
    if (!(t1 > 0.0)) {
        fail("t1 must be positive (use inf for no decay)");
    }
    if (!(efficiency > 0.0 && efficiency <= 1.0)) {
        fail("efficiency must lie in (0, 1]");
    }
    if (!(thermal_population >= 0.0 && thermal_population <= 1.0)) {
        fail("thermal_population must lie in [0, 1]");
    }
    if (!(two_chi >= 0.0) || !std::isfinite(omega_r) || !std::isfinite(readout_freq)) {
        fail("frequencies must be finite and 2chi non-negative");
    }
}

std::complex<double> reflection_coefficient(double omega, double omega_r_pulled, double kappa_ext, double kappa_int) {
    const std::complex<double> i(0.0, 1.0);
    double detuning = omega - omega_r_pulled;
    return (i * detuning + (kappa_int - kappa_ext) / 2.0) / (i * detuning + (kappa_int + kappa_ext) / 2.0);
}

double phase_separation(double two_chi, double kappa_ext, double kappa_int) {
    if (!(kappa_ext >= 0.0) || !(kappa_int >= 0.0) || !(kappa_ext + kappa_int > 0.0)) {
        throw ValidationError("phase_separation: zero or negative linewidth");
    }
    double chi = two_chi / 2.0;
    double num_re = (kappa_int - kappa_ext) / 2.0;
    double den_re = (kappa_int + kappa_ext) / 2.0;
    // Continuous change of arg(i d + c) as d runs from -chi to +chi.
    auto swept_arg = [chi](double c) {
        if (c == 0.0) {
            return chi > 0.0 ? -std::numbers::pi : 0.0;  // over-coupled limit
        }
        return 2.0 * std::atan(chi / c);
    };
    double change = swept_arg(num_re) - swept_arg(den_re);
    return std::abs(change) * 180.0 / std::numbers::pi;
}

PointerModel pointer_model(const ReadoutParams &p) {
    p.check();
    if (!(p.kappa_ext > 0.0)) {
        throw ValidationError("readout: kappa_ext must be positive to observe the reflected signal");
    }
    double amp = std::sqrt(p.nbar);
    auto s0 = amp * reflection_coefficient(p.readout_freq, p.omega_r, p.kappa_ext, p.kappa_int);
    auto s1 = amp * reflection_coefficient(p.readout_freq, p.omega_r - p.two_chi, p.kappa_ext, p.kappa_int);
    auto diff = s1 - s0;
    std::complex<double> axis = std::abs(diff) > 0.0 ? diff / std::abs(diff) : std::complex<double>(1.0, 0.0);
    PointerModel m;
    m.mean0 = (std::conj(axis) * s0).real();
    m.mean1 = (std::conj(axis) * s1).real();
    m.sigma = 1.0 / (2.0 * std::sqrt(p.efficiency * kTwoPi * p.kappa_ext * p.tau));
    return m;
}

ShotSet simulate_shots(const ReadoutParams &p, int prepared, int n_shots, std::uint64_t seed, int threads) {
    if (prepared != 0 && prepared != 1) {
        throw ValidationError("simulate_shots: prepared state must be 0 or 1");
    }
    if (n_shots < 1) {
        throw ValidationError("simulate_shots: need at least one shot");
    }
    auto model = pointer_model(p);

    ShotSet out;
    out.prepared_state = prepared;
    out.seed = seed;
    out.params = p;
    out.values.resize(static_cast<std::size_t>(n_shots));

    auto fill = [&](std::size_t begin, std::size_t end) {
        for (std::size_t k = begin; k < end; k++) {
            auto u = ShotUniforms::draw(seed, static_cast<std::uint32_t>(prepared), k).u;
            double noise = model.sigma * standard_normal(u[0], u[1]);
            bool excited = prepared == 1 || u[2] < p.thermal_population;
            double mean = model.mean0;
            if (excited) {
                double decay_time = -p.t1 * std::log(u[3]);
                mean = decay_time < p.tau ? (decay_time * model.mean1 + (p.tau - decay_time) * model.mean0) / p.tau
                                          : model.mean1;
            }
            out.values[k] = mean + noise;
        }
    };

    auto n = out.values.size();
    auto workers = static_cast<std::size_t>(std::max(1, threads));
    if (workers == 1 || n < 2 * workers) {
        fill(0, n);
        return out;
    }
    std::vector<std::jthread> pool;
    auto chunk = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; w++) {
        auto begin = w * chunk;
        auto end = std::min(n, begin + chunk);
        if (begin < end) {
            pool.emplace_back(fill, begin, end);
        }
    }
    return out;
}

namespace {

double quantile_sorted(const std::vector<double> &sorted, double q) {
    double pos = q * static_cast<double>(sorted.size() - 1);
    auto i = static_cast<std::size_t>(std::floor(pos));
    auto j = std::min(i + 1, sorted.size() - 1);
    double frac = pos - static_cast<double>(i);
    return sorted[i] + frac * (sorted[j] - sorted[i]);
}

double normal_cdf(double x, double mu, double sigma) {
    return 0.5 * std::erfc(-(x - mu) / (sigma * std::sqrt(2.0)));
}

double mean_of(std::span<const double> v) {
    return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double variance_of(std::span<const double> v, double mean) {
    if (v.size() < 2) {
        return 0.0;
    }
    double acc = 0.0;
    for (double x : v) {
        acc += (x - mean) * (x - mean);
    }
    return acc / static_cast<double>(v.size() - 1);
}

constexpr std::size_t kMaxBins = 4000;
constexpr std::size_t kMinShotsForFit = 16;

// Bin-averaged mixture densities for both states, stacked. theta holds
// (mu0, mu1, log sigma0, log sigma1, A0, A1).
Eigen::VectorXd model_densities(const Histogram &h, const Eigen::Matrix<double, 6, 1> &theta) {
    auto bins = h.density0.size();
    Eigen::VectorXd out(2 * bins);
    double mu0 = theta(0);
    double mu1 = theta(1);
    double s0 = std::exp(theta(2));
    double s1 = std::exp(theta(3));
    double a0 = theta(4);
    double a1 = theta(5);
    for (std::size_t k = 0; k < bins; k++) {
        double left = h.lo + static_cast<double>(k) * h.width;
        double right = left + h.width;
        double n0 = (normal_cdf(right, mu0, s0) - normal_cdf(left, mu0, s0)) / h.width;
        double n1 = (normal_cdf(right, mu1, s1) - normal_cdf(left, mu1, s1)) / h.width;
        out(static_cast<Eigen::Index>(k)) = a0 * n0 + (1.0 - a0) * n1;
        out(static_cast<Eigen::Index>(bins + k)) = (1.0 - a1) * n0 + a1 * n1;
    }
    return out;
}

void clamp_weights(Eigen::Matrix<double, 6, 1> &theta) {
    theta(4) = std::clamp(theta(4), 0.0, 1.0);
    theta(5) = std::clamp(theta(5), 0.0, 1.0);
}

}  // namespace

Histogram shared_histogram(std::span<const double> shots0, std::span<const double> shots1) {
    if (shots0.empty() || shots1.empty()) {
        throw ValidationError("histogram: both shot sets must be non-empty");
    }
    std::vector<double> pooled(shots0.begin(), shots0.end());
    pooled.insert(pooled.end(), shots1.begin(), shots1.end());
    std::sort(pooled.begin(), pooled.end());
    double lo = pooled.front();
    double hi = pooled.back();
    double iqr = quantile_sorted(pooled, 0.75) - quantile_sorted(pooled, 0.25);
    double n = static_cast<double>(pooled.size());
    double width = 2.0 * iqr / std::cbrt(n);
    double span = hi - lo;
    if (!(span > 0.0)) {
        span = std::max(std::abs(lo), 1.0) * 1e-6;
        lo -= span / 2.0;
    }
    if (!(width > 0.0)) {
        width = span / std::max(1.0, std::sqrt(n));
    }
    auto bins = static_cast<std::size_t>(std::ceil(span / width));
    bins = std::clamp<std::size_t>(bins, 1, kMaxBins);
    width = span / static_cast<double>(bins);
    // Widen by a hair so the maximum lands inside the last bin.
    width *= 1.0 + 1e-12;

    Histogram h;
    h.lo = lo;
    h.width = width;
    h.density0.assign(bins, 0.0);
    h.density1.assign(bins, 0.0);
    auto accumulate = [&](std::span<const double> shots, std::vector<double> &density) {
        double norm = 1.0 / (static_cast<double>(shots.size()) * width);
        for (double x : shots) {
            auto k = static_cast<std::size_t>(std::floor((x - lo) / width));
            density[std::min(k, bins - 1)] += norm;
        }
    };
    accumulate(shots0, h.density0);
    accumulate(shots1, h.density1);
    return h;
}

GaussianMixtureFit fit_double_gaussian(const ShotSet &shots0, const ShotSet &shots1) {
    return fit_double_gaussian(std::span<const double>(shots0.values), std::span<const double>(shots1.values));
}

GaussianMixtureFit fit_double_gaussian(std::span<const double> shots0, std::span<const double> shots1) {
    if (shots0.size() < kMinShotsForFit || shots1.size() < kMinShotsForFit) {
        throw DegenerateFit(
            "fit_double_gaussian: need at least " + std::to_string(kMinShotsForFit) + " shots per state");
    }
    double m0 = mean_of(shots0);
    double m1 = mean_of(shots1);
    double se = std::sqrt(
        variance_of(shots0, m0) / static_cast<double>(shots0.size()) +
        variance_of(shots1, m1) / static_cast<double>(shots1.size()));
    if (!(std::abs(m1 - m0) > 5.0 * se)) {
        throw DegenerateFit("fit_double_gaussian: state means indistinguishable, single-cluster data");
    }

    auto hist = shared_histogram(shots0, shots1);
    Eigen::VectorXd data(2 * hist.density0.size());
    for (std::size_t k = 0; k < hist.density0.size(); k++) {
        data(static_cast<Eigen::Index>(k)) = hist.density0[k];
        data(static_cast<Eigen::Index>(hist.density0.size() + k)) = hist.density1[k];
    }

    // Initial guess from the pooled quartiles and per-side deviations.
    std::vector<double> pooled(shots0.begin(), shots0.end());
    pooled.insert(pooled.end(), shots1.begin(), shots1.end());
    std::sort(pooled.begin(), pooled.end());
    double q25 = quantile_sorted(pooled, 0.25);
    double q75 = quantile_sorted(pooled, 0.75);
    double median = quantile_sorted(pooled, 0.5);
    auto side_sigma = [&](bool lower, double centre) {
        double acc = 0.0;
        std::size_t count = 0;
        for (double x : pooled) {
            if ((x < median) == lower) {
                acc += (x - centre) * (x - centre);
                count++;
            }
        }
        double s = count > 1 ? std::sqrt(acc / static_cast<double>(count - 1)) : 0.0;
        return s > 0.0 ? s : (q75 - q25) / 2.0;
    };
    double sig_lo = side_sigma(true, q25);
    double sig_hi = side_sigma(false, q75);
    bool zero_is_low = m0 <= m1;

    Eigen::Matrix<double, 6, 1> theta;
    theta << (zero_is_low ? q25 : q75), (zero_is_low ? q75 : q25), std::log(zero_is_low ? sig_lo : sig_hi),
        std::log(zero_is_low ? sig_hi : sig_lo), 0.95, 0.95;

    auto residual = [&](const Eigen::Matrix<double, 6, 1> &t) {
        return Eigen::VectorXd(model_densities(hist, t) - data);
    };

    constexpr int kMaxIterations = 500;
    double lambda = 1e-3;
    Eigen::VectorXd r = residual(theta);
    double cost = r.squaredNorm();
    int stagnant = 0;
    int it = 0;
    bool converged = false;
    for (; it < kMaxIterations; it++) {
        // Central-difference Jacobian.
        Eigen::MatrixXd jac(r.size(), 6);
        for (int j = 0; j < 6; j++) {
            double step = 1e-6 * std::max(1.0, std::abs(theta(j)));
            auto plus = theta;
            auto minus = theta;
            plus(j) += step;
            minus(j) -= step;
            jac.col(j) = (model_densities(hist, plus) - model_densities(hist, minus)) / (2.0 * step);
        }
        Eigen::Matrix<double, 6, 6> jtj = jac.transpose() * jac;
        Eigen::Matrix<double, 6, 1> grad = jac.transpose() * r;

        bool accepted = false;
        Eigen::Matrix<double, 6, 1> step;
        while (lambda < 1e16) {
            Eigen::Matrix<double, 6, 6> damped = jtj;
            damped.diagonal() += lambda * jtj.diagonal().cwiseMax(1e-12);
            step = damped.ldlt().solve(-grad);
            Eigen::Matrix<double, 6, 1> trial = theta + step;
            clamp_weights(trial);
            Eigen::VectorXd r_trial = residual(trial);
            double trial_cost = r_trial.squaredNorm();
            if (std::isfinite(trial_cost) && trial_cost <= cost) {
                step = trial - theta;
                double decrease = cost - trial_cost;
                theta = trial;
                r = r_trial;
                stagnant = decrease <= 1e-12 * cost ? stagnant + 1 : 0;
                cost = trial_cost;
                lambda = std::max(lambda / 10.0, 1e-12);
                accepted = true;
                break;
            }
            lambda *= 10.0;
        }
        if (!accepted) {
            converged = true;  // no descent direction left: residual has stagnated
            break;
        }
        if (step.norm() <= 1e-8 * (theta.norm() + 1e-8) || stagnant >= 3) {
            converged = true;
            it++;
            break;
        }
    }
    if (!converged) {
        throw NumericalError(
            "fit_double_gaussian: no convergence after " + std::to_string(kMaxIterations) + " iterations");
    }

    GaussianMixtureFit fit;
    fit.mu0 = theta(0);
    fit.mu1 = theta(1);
    fit.sigma0 = std::exp(theta(2));
    fit.sigma1 = std::exp(theta(3));
    fit.a0 = theta(4);
    fit.a1 = theta(5);
    fit.residual_norm = std::sqrt(cost);
    fit.iterations = it;
    if (!(std::abs(fit.mu1 - fit.mu0) > 1e-6 * (fit.sigma0 + fit.sigma1)) || !std::isfinite(fit.mu0) ||
        !std::isfinite(fit.mu1)) {
        throw DegenerateFit("fit_double_gaussian: fitted means collapsed onto a single cluster");
    }
    return fit;
}

double threshold(const GaussianMixtureFit &fit) {
    double mu0 = fit.mu0;
    double mu1 = fit.mu1;
    double s0 = fit.sigma0;
    double s1 = fit.sigma1;
    if (mu0 == mu1) {
        throw ValidationError("threshold: means coincide");
    }
    if (!(s0 > 0.0) || !(s1 > 0.0)) {
        throw ValidationError("threshold: widths must be positive");
    }
    if (s0 == s1) {
        return (mu0 + mu1) / 2.0;
    }
    // (x - mu0)^2 / s0^2 + 2 ln s0 = (x - mu1)^2 / s1^2 + 2 ln s1
    double qa = 1.0 / (s0 * s0) - 1.0 / (s1 * s1);
    double qb = -2.0 * (mu0 / (s0 * s0) - mu1 / (s1 * s1));
    double qc = mu0 * mu0 / (s0 * s0) - mu1 * mu1 / (s1 * s1) + 2.0 * std::log(s0 / s1);
    double lo = std::min(mu0, mu1);
    double hi = std::max(mu0, mu1);
    double disc = qb * qb - 4.0 * qa * qc;
    if (disc < 0.0) {
        throw NumericalError("threshold: the two densities do not intersect");
    }
    double q = -0.5 * (qb + std::copysign(std::sqrt(disc), qb));
    double roots[2] = {q != 0.0 ? qc / q : std::nan(""), qa != 0.0 ? q / qa : std::nan("")};
    for (double x : roots) {
        if (std::isfinite(x) && x > lo && x < hi) {
            return x;
        }
    }
    throw NumericalError("threshold: no intersection strictly between the means");
}

FidelityReport fidelity_report(
    std::span<const double> shots0, std::span<const double> shots1, const GaussianMixtureFit &fit, double thr) {
    if (shots0.empty() || shots1.empty()) {
        throw ValidationError("fidelity_report: both shot sets must be non-empty");
    }
    double orient = fit.mu1 >= fit.mu0 ? 1.0 : -1.0;
    auto assigned_one = [&](double x) {
        return orient * (x - thr) > 0.0;
    };
    auto count = [&](std::span<const double> shots, bool want_one) {
        std::size_t c = 0;
        for (double x : shots) {
            c += assigned_one(x) == want_one ? 1 : 0;
        }
        return static_cast<double>(c) / static_cast<double>(shots.size());
    };
    // Probability mass of N(mu, sigma) on the far side of the threshold.
    auto tail = [&](double mu, double sigma) {
        double gap = std::abs(thr - mu);
        if (!(sigma > 0.0)) {
            return gap > 0.0 ? 0.0 : 0.5;
        }
        return 0.5 * std::erfc(gap / (sigma * std::sqrt(2.0)));
    };

    FidelityReport r;
    r.threshold = thr;
    r.p10 = count(shots0, true);
    r.p01 = count(shots1, false);
    r.fidelity = 1.0 - (r.p01 + r.p10) / 2.0;
    double over0 = tail(fit.mu0, fit.sigma0);
    double over1 = tail(fit.mu1, fit.sigma1);
    r.eps_id = over0 + over1;
    r.eps_01 = std::max(0.0, r.p01 - over1);
    r.eps_10 = std::max(0.0, r.p10 - over0);
    return r;
}

FidelityReport analyze_shots(std::span<const double> shots0, std::span<const double> shots1) {
    try {
        auto fit = fit_double_gaussian(shots0, shots1);
        return fidelity_report(shots0, shots1, fit, threshold(fit));
    } catch (const DegenerateFit &) {
        if (shots0.empty() || shots1.empty()) {
            throw;
        }
        GaussianMixtureFit moments;
        moments.mu0 = mean_of(shots0);
        moments.mu1 = mean_of(shots1);
        moments.sigma0 = std::sqrt(variance_of(shots0, moments.mu0));
        moments.sigma1 = std::sqrt(variance_of(shots1, moments.mu1));
        auto report = fidelity_report(shots0, shots1, moments, (moments.mu0 + moments.mu1) / 2.0);
        report.degenerate = true;
        return report;
    }
}

std::vector<IntegrationRow> error_vs_integration(
    const ReadoutParams &p, std::span<const double> tau_list, int n_shots, std::uint64_t seed) {
    std::vector<IntegrationRow> rows;
    rows.reserve(tau_list.size());
    for (double tau : tau_list) {
        auto point = p;
        point.tau = tau;
        auto s0 = simulate_shots(point, 0, n_shots, seed);
        auto s1 = simulate_shots(point, 1, n_shots, seed);
        rows.push_back({tau, analyze_shots(s0.values, s1.values)});
    }
    return rows;
}

}  // namespace quantromon
