// Copyright 2026 The wrealism Authors
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

#include "wrealism/preparation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <fmt/core.h>

namespace wrealism::preparation {

namespace {

void check_time(double t) {
    if (!(t >= 0.0)) throw std::invalid_argument(fmt::format("evolution time must be >= 0, got {}", t));
}

ExcitationSectorState apply_propagator(const Eigen::MatrixXd &vecs, const Eigen::VectorXd &vals, double t) {
    // psi(0) = e_0, so psi(t) = V diag(exp(-i lambda t)) V^T e_0.
    const Eigen::Index dim = vecs.rows();
    std::vector<Complex> out(static_cast<std::size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex phase = vecs(0, k) * std::exp(Complex{0.0, -vals(k) * t});
        for (Eigen::Index i = 0; i < dim; ++i) out[static_cast<std::size_t>(i)] += vecs(i, k) * phase;
    }
    return ExcitationSectorState(std::move(out));
}

}  // namespace

void PreparationConfig::validate() const {
    if (n < 1) throw std::invalid_argument(fmt::format("n must be >= 1, got {}", n));
    if (!(coupling > 0.0)) throw std::invalid_argument(fmt::format("coupling must be > 0, got {}", coupling));
    if (samples < 2) throw std::invalid_argument(fmt::format("samples must be >= 2, got {}", samples));
    if (!(duration >= 0.0)) throw std::invalid_argument(fmt::format("duration must be >= 0, got {}", duration));
}

ExcitationSectorState::ExcitationSectorState(std::vector<Complex> amplitudes) : amplitudes_(std::move(amplitudes)) {
    if (amplitudes_.size() < 2) throw std::invalid_argument("sector state needs at least one target");
}

double ExcitationSectorState::norm_squared() const {
    double s = 0.0;
    for (const auto &a : amplitudes_) s += std::norm(a);
    return s;
}

Eigen::MatrixXd sector_hamiltonian(int n, double coupling) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n + 1, n + 1);
    for (int j = 1; j <= n; ++j) {
        h(0, j) = -coupling;
        h(j, 0) = -coupling;
    }
    return h;
}

SectorPropagator::SectorPropagator(int n, double coupling) {
    const Eigen::MatrixXd h = sector_hamiltonian(n, coupling);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("sector eigendecomposition failed");
    eigenvectors_ = solver.eigenvectors();
    eigenvalues_ = solver.eigenvalues();
    residual_ = (h * eigenvectors_ - eigenvectors_ * eigenvalues_.asDiagonal()).cwiseAbs().maxCoeff();
    if (residual_ > kEigenResidual * std::max(1.0, coupling * std::sqrt(static_cast<double>(n))))
        throw std::runtime_error(fmt::format("sector eigendecomposition residual {} too large", residual_));
}

ExcitationSectorState SectorPropagator::evolve(double t) const {
    check_time(t);
    return apply_propagator(eigenvectors_, eigenvalues_, t);
}

ExcitationSectorState evolve_closed_form(const PreparationConfig &config, double t) {
    config.validate();
    check_time(t);
    // H = -Omega (|p><W| + |W><p|) with Omega = g sqrt(N), so
    // exp(-iHt)|p> = cos(Omega t)|p> + i sin(Omega t)|W>.
    const double root_n = std::sqrt(static_cast<double>(config.n));
    const double angle = config.coupling * root_n * t;
    std::vector<Complex> amps(static_cast<std::size_t>(config.n) + 1);
    amps[0] = std::cos(angle);
    const Complex target{0.0, std::sin(angle) / root_n};
    for (int j = 1; j <= config.n; ++j) amps[static_cast<std::size_t>(j)] = target;
    return ExcitationSectorState(std::move(amps));
}

ExcitationSectorState evolve_matrix_exponential(const PreparationConfig &config, double t) {
    config.validate();
    return SectorPropagator(config.n, config.coupling).evolve(t);
}

ExcitationSectorState evolve(const PreparationConfig &config, double t) {
    auto closed = evolve_closed_form(config, t);
    const auto numeric = evolve_matrix_exponential(config, t);
    for (std::size_t i = 0; i < closed.amplitudes().size(); ++i) {
        const double diff = std::abs(closed.amplitudes()[i] - numeric.amplitudes()[i]);
        if (diff > kRouteAgreement)
            throw std::logic_error(fmt::format("closed-form and matrix-exponential evolution disagree by {} at t={}",
                                               diff, t));
    }
    return closed;
}

double tau_pi_half(const PreparationConfig &config) {
    config.validate();
    return std::numbers::pi / (2.0 * config.coupling * std::sqrt(static_cast<double>(config.n)));
}

double w_fidelity(const ExcitationSectorState &state) {
    const int n = state.num_targets();
    Complex overlap{};
    for (int j = 1; j <= n; ++j) overlap += state.amplitudes()[static_cast<std::size_t>(j)];
    return std::norm(overlap) / n;
}

std::vector<CurvePoint> fidelity_curve(const PreparationConfig &config) {
    config.validate();
    const SectorPropagator propagator(config.n, config.coupling);
    std::vector<CurvePoint> curve(static_cast<std::size_t>(config.samples));
    const double step = config.duration / (config.samples - 1);
    bool routes_agree = true;
#pragma omp parallel for schedule(static) reduction(&& : routes_agree)
    for (int i = 0; i < config.samples; ++i) {
        const double t = (i == config.samples - 1) ? config.duration : step * i;
        const auto closed = evolve_closed_form(config, t);
        const auto numeric = propagator.evolve(t);
        for (std::size_t k = 0; k < closed.amplitudes().size(); ++k)
            routes_agree = routes_agree && std::abs(closed.amplitudes()[k] - numeric.amplitudes()[k]) <= kRouteAgreement;
        curve[static_cast<std::size_t>(i)] = CurvePoint{t, w_fidelity(closed)};
    }
    if (!routes_agree) throw std::logic_error("closed-form and matrix-exponential evolution disagree on the curve grid");
    return curve;
}

Statevector target_state(const ExcitationSectorState &state) {
    const int n = state.num_targets();
    if (n > kMaxDenseQubits) throw std::invalid_argument("too many targets for a dense state");
    std::vector<Complex> amps(std::size_t{1} << n);
    for (int j = 1; j <= n; ++j) amps[site_mask(n, j - 1)] = state.amplitudes()[static_cast<std::size_t>(j)];
    double weight = 0.0;
    for (const auto &a : amps) weight += std::norm(a);
    if (weight < kZeroTolerance * kZeroTolerance)
        throw std::domain_error("preparation qubit is still excited; no target-register state to extract");
    return Statevector::normalized(n, std::move(amps));
}

Statevector embed(const ExcitationSectorState &state) {
    const int n = state.num_targets();
    const int total = n + 1;
    if (total > kMaxDenseQubits) throw std::invalid_argument("too many targets for a dense state");
    std::vector<Complex> amps(std::size_t{1} << total);
    amps[site_mask(total, 0)] = state.amplitudes()[0];
    for (int j = 1; j <= n; ++j) amps[site_mask(total, j)] = state.amplitudes()[static_cast<std::size_t>(j)];
    return Statevector::normalized(total, std::move(amps));
}

Statevector evolve_full_space(const PreparationConfig &config, double t) {
    config.validate();
    check_time(t);
    if (config.n > kMaxFullSpaceTargets)
        throw std::invalid_argument(
            fmt::format("full-space reference limited to {} targets, got {}", kMaxFullSpaceTargets, config.n));
    const int total = config.n + 1;
    const auto dim = static_cast<Eigen::Index>(1) << total;
    const std::uint64_t p_bit = site_mask(total, 0);
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (Eigen::Index b = 0; b < dim; ++b) {
        const auto idx = static_cast<std::uint64_t>(b);
        for (int j = 1; j <= config.n; ++j) {
            const std::uint64_t j_bit = site_mask(total, j);
            // s+_p s-_j: p 0->1, j 1->0.
            if (!(idx & p_bit) && (idx & j_bit)) {
                const auto to = static_cast<Eigen::Index>((idx | p_bit) & ~j_bit);
                h(to, b) += -config.coupling;
                h(b, to) += -config.coupling;
            }
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    if (solver.info() != Eigen::Success) throw std::runtime_error("full-space eigendecomposition failed");
    const Eigen::MatrixXd &v = solver.eigenvectors();
    const Eigen::VectorXd &lambda = solver.eigenvalues();
    const auto start = static_cast<Eigen::Index>(p_bit);
    std::vector<Complex> amps(static_cast<std::size_t>(dim));
    for (Eigen::Index k = 0; k < dim; ++k) {
        const Complex phase = v(start, k) * std::exp(Complex{0.0, -lambda(k) * t});
        for (Eigen::Index i = 0; i < dim; ++i) amps[static_cast<std::size_t>(i)] += v(i, k) * phase;
    }
    return Statevector::normalized(total, std::move(amps));
}

}  // namespace wrealism::preparation
