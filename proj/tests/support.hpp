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


// Shared test helpers: an independent amplitude oracle built from explicit
// per-site bra vectors, and small seeded generators for property tests.

#ifndef WREALISM_TESTS_SUPPORT_HPP
#define WREALISM_TESTS_SUPPORT_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "wrealism/basis.hpp"
#include "wrealism/statevector.hpp"

namespace wrealism::testing {

inline constexpr double kPi = 3.14159265358979323846;

// <r| in the computational basis, written out by hand. No shared code with
// the library kernels.
inline std::array<Complex, 2> bra(Result r) {
    const double h = 1.0 / std::sqrt(2.0);
    switch (r) {
        case Result::Zero: return {Complex{1, 0}, Complex{0, 0}};
        case Result::One: return {Complex{0, 0}, Complex{1, 0}};
        case Result::Plus: return {Complex{h, 0}, Complex{h, 0}};
        case Result::Minus: return {Complex{-h, 0}, Complex{h, 0}};
    }
    return {};
}

// Full tensor-product inner product <outcome|state>, O(n 2^n).
inline Complex oracle_amplitude(const std::vector<Complex> &amps, int n, const Outcome &outcome) {
    Complex total{0, 0};
    for (std::uint64_t b = 0; b < amps.size(); ++b) {
        Complex coeff{1, 0};
        for (int i = 0; i < n; ++i) {
            const unsigned bit = (b >> (n - 1 - i)) & 1u;
            coeff *= std::conj(bra(outcome.results[i])[bit]);
        }
        total += coeff * amps[b];
    }
    return total;
}

inline std::vector<Complex> to_vector(const Statevector &s) {
    return {s.amplitudes().begin(), s.amplitudes().end()};
}

// Seeded generators. Each property test owns one Gen so failures replay.
class Gen {
   public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(engine_); }
    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    bool coin() { return integer(0, 1) == 1; }
    std::uint64_t bits(int n) { return n == 0 ? 0 : engine_() >> (64 - n); }

    Statevector state(int n) {
        std::vector<Complex> amps(std::size_t{1} << n);
        std::normal_distribution<double> g;
        for (auto &a : amps) a = {g(engine_), g(engine_)};
        return Statevector::normalized(n, std::move(amps));
    }

    MeasurementSettings settings(int n) {
        MeasurementSettings s;
        for (int i = 0; i < n; ++i) s.bases.push_back(coin() ? Basis::X : Basis::Z);
        return s;
    }

    Outcome outcome(const MeasurementSettings &s) { return Outcome::from_code(s, bits(s.size())); }

    std::mt19937_64 &engine() { return engine_; }

   private:
    std::mt19937_64 engine_;
};

}  // namespace wrealism::testing

#endif  // WREALISM_TESTS_SUPPORT_HPP
