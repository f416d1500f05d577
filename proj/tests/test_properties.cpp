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


// Randomized and exhaustive invariants. Generators are seeded so any failure
// is replayable; the seed and draw index appear in the failure message.

#include <bit>
#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wrealism/bellmermin.hpp"
#include "wrealism/kernels.hpp"
#include "wrealism/lhv_ensemble.hpp"
#include "wrealism/statevector.hpp"

namespace wrealism {
namespace {

using testing::Gen;
using testing::oracle_amplitude;
using testing::to_vector;

constexpr std::uint64_t kSeed = 20260101;

TEST(Property, NormalizationAndParseval) {
    Gen gen(kSeed);
    for (int draw = 0; draw < 1000; ++draw) {
        const int n = gen.integer(1, 8);
        const auto state = gen.state(n);
        const auto settings = gen.settings(n);
        const auto dist = distribution(state, settings);
        ASSERT_NEAR(dist.total(), 1.0, 1e-12) << "draw " << draw;

        double parseval = 0.0;
        for (std::uint64_t c = 0; c < dist.size(); ++c)
            parseval += std::norm(amplitude(state, settings, Outcome::from_code(settings, c)));
        ASSERT_NEAR(parseval, 1.0, 1e-12) << "draw " << draw;

        const auto o = gen.outcome(settings);
        ASSERT_NEAR(std::abs(amplitude(state, settings, o) - oracle_amplitude(to_vector(state), n, o)), 0.0, 1e-12)
            << "draw " << draw << ' ' << settings.str() << ' ' << o.str();
    }
}

TEST(Property, ExactAmplitudeMatchesFloatingOnWAndGhz) {
    Gen gen(kSeed + 1);
    for (int draw = 0; draw < 500; ++draw) {
        const int n = gen.integer(1, 10);
        const auto state = gen.coin() ? w_state(n) : ghz_state(n);
        const auto settings = gen.settings(n);
        const auto o = gen.outcome(settings);
        const auto e = exact_amplitude(state, settings, o);
        ASSERT_TRUE(e.has_value());
        ASSERT_NEAR(to_double(e->probability()), probability(state, settings, o), 1e-12) << "draw " << draw;
    }
}

bool balanced(std::uint64_t x_code, int x_sites) { return 2 * std::popcount(x_code) == x_sites; }

TEST(Property, ZeroLawExhaustive) {
    for (int n = 1; n <= 12; ++n) {
        const auto w = w_state(n);
        for (int k = 0; k < n; ++k) {
            const auto s = MeasurementSettings::one_z_rest_x(n, k);
            const std::uint64_t zmask = site_mask(n, k);
            for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
                if (code & zmask) continue;  // Z result 1
                const auto o = Outcome::from_code(s, code);
                const auto v = exact_zero_test(w, s, o);
                ASSERT_TRUE(v.exact);
                const std::uint64_t x_code = code & ~zmask;
                const bool want = balanced(x_code, n - 1);
                ASSERT_EQ(v.is_zero, want) << n << ' ' << s.str() << ' ' << o.str();
                ASSERT_EQ(std::abs(amplitude(w, s, o)) < kZeroTolerance, want) << n << ' ' << o.str();
            }
        }
    }
}

TEST(Property, NoZerosForBellOrGhzOnOneZFamily) {
    const auto checks = [](const Statevector &state, int n) {
        for (const auto &s : lhv::one_z_rest_x_family(n))
            for (std::uint64_t c = 0; c < (std::uint64_t{1} << n); ++c)
                ASSERT_FALSE(exact_zero_test(state, s, Outcome::from_code(s, c)).is_zero) << n << ' ' << s.str();
    };
    checks(w_state(2), 2);
    for (int n = 1; n <= 11; ++n) checks(ghz_state(n), n);
}

// Removal by the forbidden-pattern rule agrees with (a) the exact quantum
// zero test on every reading and (b) the closed pattern description.
TEST(Property, ForbiddenRuleMatchesExactZeros) {
    for (int n : {1, 3, 5, 7}) {
        const auto all = lhv::enumerate_all(n);
        const auto kept = lhv::rule_forbidden_patterns(all, n);
        const auto w = w_state(n);
        const auto family = lhv::one_z_rest_x_family(n);
        for (const auto &a : all.members()) {
            bool any_zero = false;
            for (const auto &s : family) any_zero = any_zero || exact_zero_test(w, s, a.reading(s)).is_zero;
            bool pattern = false;
            for (int k = 0; k < n; ++k) {
                if (a.z(k) != Result::Zero) continue;
                const std::uint64_t others = a.x_bits & ~site_mask(n, k);
                pattern = pattern || balanced(others, n - 1);
            }
            ASSERT_EQ(any_zero, pattern) << a.str();
            ASSERT_EQ(kept.contains(a), !any_zero) << a.str();
        }
    }
}

TEST(Property, GhzConditionalZIsFair) {
    Gen gen(kSeed + 2);
    for (int draw = 0; draw < 200; ++draw) {
        const int n = gen.integer(2, 10);
        const int keep = gen.integer(0, n - 1);
        auto s = ghz_state(n);
        for (int i = 0; i < n; ++i)
            if (i != keep) s = project(s, i, gen.coin() ? Result::Plus : Result::Minus);
        const auto m = z_marginal(s, keep);
        ASSERT_NEAR(m[0], 0.5, 1e-12) << "draw " << draw;
        ASSERT_NEAR(m[1], 0.5, 1e-12) << "draw " << draw;
    }
}

TEST(Property, SerialAndParallelKernelsAgree) {
    Gen gen(kSeed + 3);
    for (int draw = 0; draw < 50; ++draw) {
        const int n = gen.integer(1, 16);
        const auto state = gen.state(n);
        const std::uint64_t mask = gen.bits(n);
        std::vector<Complex> a = to_vector(state), b = a;
        kernels::serial::x_basis_transform(a, mask);
        kernels::parallel::x_basis_transform(b, mask);
        ASSERT_EQ(a, b) << "draw " << draw;

        std::vector<double> pa(a.size()), pb(a.size());
        kernels::serial::squared_magnitudes(a, pa);
        kernels::parallel::squared_magnitudes(b, pb);
        ASSERT_EQ(pa, pb);

        const std::uint64_t code = gen.bits(n);
        const Complex sa = kernels::serial::mixed_basis_overlap(state.amplitudes(), mask, code);
        const Complex sb = kernels::parallel::mixed_basis_overlap(state.amplitudes(), mask, code);
        ASSERT_NEAR(std::abs(sa - sb), 0.0, 1e-13);

        const auto keep = [&](std::uint64_t i) { return pa[i] > 1.0 / static_cast<double>(pa.size()); };
        ASSERT_EQ(kernels::serial::filter_indices(pa.size(), keep), kernels::parallel::filter_indices(pa.size(), keep));
    }
}

TEST(Property, MonteCarloConvergesAtRootN) {
    Gen gen(kSeed + 4);
    for (int draw = 0; draw < 10; ++draw) {
        const bellmermin::Observable a{gen.real(-1, 1), bellmermin::Vec3(gen.real(-1, 1), gen.real(-1, 1), gen.real(-1, 1))};
        const auto n = bellmermin::PreparedDirection::normalized(
            bellmermin::Vec3(gen.real(-1, 1), gen.real(-1, 1), gen.real(-1, 1)));
        const double exact = bellmermin::closed_form_mean(a, n);
        const auto small = bellmermin::sample_mean(a, n, 10'000, 100 + draw);
        const auto large = bellmermin::sample_mean(a, n, 1'000'000, 100 + draw);
        ASSERT_NEAR(large.standard_error * 10, small.standard_error, 0.2 * small.standard_error);
        ASSERT_LE(std::abs(large.mean - exact), 5 * large.standard_error + 1e-12) << "draw " << draw;
    }
}

}  // namespace
}  // namespace wrealism
