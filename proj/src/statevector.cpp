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

#include "wrealism/statevector.hpp"

#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <fmt/core.h>

#include "wrealism/kernels.hpp"

namespace wrealism {

namespace {

void check_num_qubits(int n) {
    if (n < 1) throw std::invalid_argument(fmt::format("number of qubits must be >= 1, got {}", n));
    if (n > kMaxDenseQubits)
        throw std::invalid_argument(fmt::format("number of qubits {} exceeds the dense limit {}", n, kMaxDenseQubits));
}

double sum_norm(std::span<const Complex> amps) {
    double s = 0.0;
    for (const auto &a : amps) s += std::norm(a);
    return s;
}

void check_sizes(const Statevector &state, const MeasurementSettings &settings) {
    if (settings.size() != state.num_qubits())
        throw std::invalid_argument(
            fmt::format("settings have {} sites but the state has {} qubits", settings.size(), state.num_qubits()));
}

}  // namespace

Statevector Statevector::from_amplitudes(int num_qubits, std::vector<Complex> amplitudes) {
    check_num_qubits(num_qubits);
    if (amplitudes.size() != (std::size_t{1} << num_qubits))
        throw std::invalid_argument(fmt::format("expected {} amplitudes for {} qubits, got {}",
                                                std::size_t{1} << num_qubits, num_qubits, amplitudes.size()));
    const double norm = sum_norm(amplitudes);
    if (std::abs(norm - 1.0) > kNormTolerance)
        throw std::invalid_argument(fmt::format("state is not normalized: sum |a|^2 = {:.17g}", norm));
    return Statevector(num_qubits, std::move(amplitudes), std::nullopt);
}

Statevector Statevector::normalized(int num_qubits, std::vector<Complex> amplitudes) {
    check_num_qubits(num_qubits);
    if (amplitudes.size() != (std::size_t{1} << num_qubits))
        throw std::invalid_argument(fmt::format("expected {} amplitudes for {} qubits, got {}",
                                                std::size_t{1} << num_qubits, num_qubits, amplitudes.size()));
    const double norm = sum_norm(amplitudes);
    if (!(norm > 0.0)) throw std::invalid_argument("cannot normalize the zero vector");
    const double scale = 1.0 / std::sqrt(norm);
    for (auto &a : amplitudes) a *= scale;
    return Statevector(num_qubits, std::move(amplitudes), std::nullopt);
}

Statevector Statevector::from_integer_form(int num_qubits, IntegerForm form) {
    check_num_qubits(num_qubits);
    const std::uint64_t dim = std::uint64_t{1} << num_qubits;
    std::int64_t sum_sq = 0;
    for (const auto &[index, weight] : form.terms) {
        if (index >= dim) throw std::invalid_argument(fmt::format("basis index {} out of range", index));
        sum_sq += weight * weight;
    }
    if (sum_sq != form.norm_squared || sum_sq == 0)
        throw std::invalid_argument("integer form norm does not match its weights");
    std::vector<Complex> amps(dim);
    const double scale = 1.0 / std::sqrt(static_cast<double>(form.norm_squared));
    for (const auto &[index, weight] : form.terms) amps[index] += static_cast<double>(weight) * scale;
    return Statevector(num_qubits, std::move(amps), std::move(form));
}

double Statevector::norm_squared() const { return sum_norm(amplitudes_); }

Statevector w_state(int n) {
    check_num_qubits(n);
    IntegerForm form;
    for (int site = 0; site < n; ++site) form.terms.emplace_back(site_mask(n, site), 1);
    form.norm_squared = n;
    return Statevector::from_integer_form(n, std::move(form));
}

Statevector ghz_state(int n) {
    check_num_qubits(n);
    IntegerForm form;
    const std::uint64_t all_ones = (std::uint64_t{1} << n) - 1;
    form.terms.emplace_back(all_ones, 1);
    form.terms.emplace_back(0, 1);
    form.norm_squared = 2;
    return Statevector::from_integer_form(n, std::move(form));
}

Complex amplitude(const Statevector &state, const MeasurementSettings &settings, const Outcome &outcome) {
    check_sizes(state, settings);
    check_compatible(settings, outcome);
    return kernels::parallel::mixed_basis_overlap(state.amplitudes(), settings.x_mask(), outcome.code());
}

double probability(const Statevector &state, const MeasurementSettings &settings, const Outcome &outcome) {
    return std::norm(amplitude(state, settings, outcome));
}

Rational ExactAmplitude::probability() const {
    return Rational(numerator * numerator, norm_squared << x_sites);
}

double ExactAmplitude::value() const {
    return static_cast<double>(numerator) / std::sqrt(static_cast<double>(norm_squared) * std::ldexp(1.0, x_sites));
}

std::optional<ExactAmplitude> exact_amplitude(const Statevector &state, const MeasurementSettings &settings,
                                              const Outcome &outcome) {
    check_sizes(state, settings);
    check_compatible(settings, outcome);
    const auto &form = state.integer_form();
    if (!form) return std::nullopt;
    const std::uint64_t x_mask = settings.x_mask();
    const std::uint64_t code = outcome.code();
    std::int64_t numerator = 0;
    for (const auto &[index, weight] : form->terms) {
        if (((index ^ code) & ~x_mask) != 0) continue;
        const bool negative = std::popcount(x_mask & code & ~index) & 1;
        numerator += negative ? -weight : weight;
    }
    return ExactAmplitude{numerator, form->norm_squared, settings.count(Basis::X)};
}

ZeroVerdict exact_zero_test(const Statevector &state, const MeasurementSettings &settings, const Outcome &outcome) {
    if (auto exact = exact_amplitude(state, settings, outcome))
        return ZeroVerdict{exact->is_zero(), true, std::abs(exact->value())};
    const double mag = std::abs(amplitude(state, settings, outcome));
    return ZeroVerdict{mag < kZeroTolerance, false, mag};
}

Statevector project(const Statevector &state, int site, Result result) {
    const int n = state.num_qubits();
    if (site < 0 || site >= n) throw std::out_of_range(fmt::format("site {} out of range for {} qubits", site, n));
    const std::uint64_t bit = site_mask(n, site);
    auto src = state.amplitudes();
    std::vector<Complex> out(src.begin(), src.end());
    for (std::uint64_t i = 0; i < out.size(); ++i) {
        if (i & bit) continue;
        const Complex a0 = out[i];
        const Complex a1 = out[i | bit];
        switch (result) {
            case Result::Zero:
                out[i | bit] = 0.0;
                break;
            case Result::One:
                out[i] = 0.0;
                break;
            case Result::Plus: {
                const Complex c = (a1 + a0) * 0.5;
                out[i] = c;
                out[i | bit] = c;
                break;
            }
            case Result::Minus: {
                const Complex c = (a1 - a0) * 0.5;
                out[i] = -c;
                out[i | bit] = c;
                break;
            }
        }
    }
    const double p = sum_norm(out);
    if (p < kZeroTolerance * kZeroTolerance)
        throw std::domain_error(fmt::format("projection of site {} onto '{}' has zero probability", site, to_char(result)));
    return Statevector::normalized(n, std::move(out));
}

double Distribution::operator[](const Outcome &o) const {
    check_compatible(settings_, o);
    return probabilities_.at(o.code());
}

double Distribution::total() const { return std::accumulate(probabilities_.begin(), probabilities_.end(), 0.0); }

Distribution distribution(const Statevector &state, const MeasurementSettings &settings) {
    check_sizes(state, settings);
    auto src = state.amplitudes();
    std::vector<Complex> amps(src.begin(), src.end());
    kernels::parallel::x_basis_transform(amps, settings.x_mask());
    std::vector<double> probs(amps.size());
    kernels::parallel::squared_magnitudes(amps, probs);
    return Distribution(settings, std::move(probs));
}

std::array<double, 2> z_marginal(const Statevector &state, int site) {
    const int n = state.num_qubits();
    if (site < 0 || site >= n) throw std::out_of_range(fmt::format("site {} out of range for {} qubits", site, n));
    const std::uint64_t bit = site_mask(n, site);
    std::array<double, 2> p{0.0, 0.0};
    auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) p[(i & bit) ? 1 : 0] += std::norm(amps[i]);
    return p;
}

}  // namespace wrealism
