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

// W-state preparation by exchange coupling. A preparation qubit p starts
// excited and couples to N ground-state targets through
//
//     H = -g * sum_j (s+_p s-_j + s-_p s+_j)        (hbar = 1)
//
// Only the single-excitation sector {|1_p 0..0>, |0_p 1_j>} is reachable, and
// inside it the dynamics is a Rabi oscillation at frequency g*sqrt(N) between
// |1_p 0..0> and |0_p> (x) |W_N>.

#ifndef WREALISM_PREPARATION_HPP
#define WREALISM_PREPARATION_HPP

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "wrealism/statevector.hpp"

namespace wrealism::preparation {

inline constexpr double kRouteAgreement = 1e-10;
inline constexpr double kEigenResidual = 1e-12;
inline constexpr int kMaxFullSpaceTargets = 6;

struct PreparationConfig {
    int n = 1;              // target qubits
    double coupling = 1.0;  // g, rad per unit time
    double duration = 0.0;  // curve end time
    int samples = 2;        // curve points, endpoints included

    /// Throws std::invalid_argument on n < 1, coupling <= 0, samples < 2 or
    /// a negative duration.
    void validate() const;
};

/// Amplitudes over the N+1 single-excitation basis states. Index 0 is the
/// excitation on p, index j (1..N) the excitation on target j.
class ExcitationSectorState {
   public:
    explicit ExcitationSectorState(std::vector<Complex> amplitudes);

    int num_targets() const { return static_cast<int>(amplitudes_.size()) - 1; }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    double norm_squared() const;

   private:
    std::vector<Complex> amplitudes_;
};

/// Sector Hamiltonian: H(0,j) = H(j,0) = -g, zero elsewhere.
Eigen::MatrixXd sector_hamiltonian(int n, double coupling);

/// exp(-iHt) on the sector through a cached eigendecomposition.
class SectorPropagator {
   public:
    SectorPropagator(int n, double coupling);

    ExcitationSectorState evolve(double t) const;
    /// max |H V - V Lambda| of the decomposition.
    double residual() const { return residual_; }

   private:
    Eigen::MatrixXd eigenvectors_;
    Eigen::VectorXd eigenvalues_;
    double residual_ = 0.0;
};

ExcitationSectorState evolve_closed_form(const PreparationConfig &config, double t);
ExcitationSectorState evolve_matrix_exponential(const PreparationConfig &config, double t);

/// State at time t from the excited preparation qubit. Runs both routes and
/// throws std::logic_error if they disagree by more than kRouteAgreement.
/// Negative t is rejected.
ExcitationSectorState evolve(const PreparationConfig &config, double t);

/// pi / (2 g sqrt(N)).
double tau_pi_half(const PreparationConfig &config);

/// |<0_p, W_N | psi>|^2.
double w_fidelity(const ExcitationSectorState &state);

struct CurvePoint {
    double time;
    double fidelity;
};

/// Fidelity to |0_p>|W_N> on `samples` equally spaced times in [0, duration].
std::vector<CurvePoint> fidelity_curve(const PreparationConfig &config);

/// Target register after finding p in |0>, renormalized. Throws
/// std::domain_error if that branch has zero weight.
Statevector target_state(const ExcitationSectorState &state);

/// The sector state embedded in the (N+1)-qubit space, p at site 0.
Statevector embed(const ExcitationSectorState &state);

/// Reference evolution in the full 2^(N+1) space for N <= kMaxFullSpaceTargets.
Statevector evolve_full_space(const PreparationConfig &config, double t);

}  // namespace wrealism::preparation

#endif  // WREALISM_PREPARATION_HPP
