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

#ifndef WREALISM_STATEVECTOR_HPP
#define WREALISM_STATEVECTOR_HPP

#include <array>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "wrealism/basis.hpp"
#include "wrealism/rational.hpp"

namespace wrealism {

using Complex = std::complex<double>;

inline constexpr int kMaxDenseQubits = 20;
inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kZeroTolerance = 1e-12;

/// A state written as sum_b weight_b |b> / sqrt(norm_squared) with integer
/// weights. W and GHZ states have this form, and then every Z/X amplitude is
/// an integer divided by sqrt(norm_squared * 2^(#X sites)).
struct IntegerForm {
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;  // (basis index, weight)
    std::int64_t norm_squared = 0;
};

/// Dense pure state over the computational basis. Index bits follow
/// site_mask(): site 0 is the leftmost ket label. Immutable once built.
class Statevector {
   public:
    /// Requires unit norm within kNormTolerance.
    static Statevector from_amplitudes(int num_qubits, std::vector<Complex> amplitudes);
    /// Rescales to unit norm; rejects the zero vector.
    static Statevector normalized(int num_qubits, std::vector<Complex> amplitudes);
    static Statevector from_integer_form(int num_qubits, IntegerForm form);

    int num_qubits() const { return num_qubits_; }
    std::size_t dimension() const { return amplitudes_.size(); }
    std::span<const Complex> amplitudes() const { return amplitudes_; }
    Complex operator[](std::uint64_t index) const { return amplitudes_[index]; }
    const std::optional<IntegerForm> &integer_form() const { return integer_form_; }
    double norm_squared() const;

   private:
    Statevector(int num_qubits, std::vector<Complex> amplitudes, std::optional<IntegerForm> form)
        : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)), integer_form_(std::move(form)) {}

    int num_qubits_;
    std::vector<Complex> amplitudes_;
    std::optional<IntegerForm> integer_form_;
};

/// Amplitude 1/sqrt(n) on each single-excitation string.
Statevector w_state(int n);

/// (|1...1> + |0...0>)/sqrt(2).
Statevector ghz_state(int n);

/// <outcome|state>, with X-site bras taken from |+> = (|1>+|0>)/sqrt2 and
/// |-> = (|1>-|0>)/sqrt2.
Complex amplitude(const Statevector &state, const MeasurementSettings &settings, const Outcome &outcome);

double probability(const Statevector &state, const MeasurementSettings &settings, const Outcome &outcome);

/// Exact amplitude numerator / sqrt(norm_squared * 2^x_sites).
struct ExactAmplitude {
    std::int64_t numerator = 0;
    std::int64_t norm_squared = 1;
    int x_sites = 0;

    Rational probability() const;
    double value() const;
    bool is_zero() const { return numerator == 0; }
};

/// Available when the state carries an IntegerForm.
std::optional<ExactAmplitude> exact_amplitude(const Statevector &state, const MeasurementSettings &settings,
                                              const Outcome &outcome);

struct ZeroVerdict {
    bool is_zero = false;
    /// False when the decision fell back to |amplitude| < kZeroTolerance.
    bool exact = false;
    double magnitude = 0.0;
};

/// Decides whether <outcome|state> vanishes. Integer arithmetic when the
/// state has an IntegerForm, otherwise a flagged floating comparison.
ZeroVerdict exact_zero_test(const Statevector &state, const MeasurementSettings &settings, const Outcome &outcome);

/// Projects one site onto `result` (its basis is implied) and renormalizes.
/// Throws std::domain_error for a zero-probability result.
Statevector project(const Statevector &state, int site, Result result);

/// Complete outcome distribution for fixed settings, indexed by Outcome::code().
class Distribution {
   public:
    Distribution(MeasurementSettings settings, std::vector<double> probabilities)
        : settings_(std::move(settings)), probabilities_(std::move(probabilities)) {}

    const MeasurementSettings &settings() const { return settings_; }
    std::size_t size() const { return probabilities_.size(); }
    std::span<const double> probabilities() const { return probabilities_; }
    double operator[](const Outcome &o) const;
    double at_code(std::uint64_t code) const { return probabilities_.at(code); }
    Outcome outcome(std::uint64_t code) const { return Outcome::from_code(settings_, code); }
    double total() const;

   private:
    MeasurementSettings settings_;
    std::vector<double> probabilities_;
};

Distribution distribution(const Statevector &state, const MeasurementSettings &settings);

/// Z-measurement probabilities {P(0), P(1)} of one site.
std::array<double, 2> z_marginal(const Statevector &state, int site);

}  // namespace wrealism

#endif  // WREALISM_STATEVECTOR_HPP
