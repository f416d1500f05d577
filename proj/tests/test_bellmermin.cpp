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


#include <cmath>

#include <gtest/gtest.h>

#include "support.hpp"
#include "wrealism/bellmermin.hpp"
#include "wrealism/rng.hpp"

namespace wrealism::bellmermin {
namespace {

const PreparedDirection kZ{Vec3::UnitZ()};
const PreparedDirection kX{Vec3::UnitX()};

HiddenDirection hidden(double x, double y, double z) { return HiddenDirection::normalized(Vec3(x, y, z)); }

TEST(BellMermin, DeterministicRule) {
    const auto sz = Observable::pauli_z();
    const auto sx = Observable::pauli_x();
    EXPECT_EQ(outcome(sz, kZ, hidden(0.3, -0.2, -0.9)), 1.0);
    EXPECT_EQ(outcome(sx, kZ, hidden(0.4, 0.1, 0.2)), 1.0);
    EXPECT_EQ(outcome(sx, kZ, hidden(-0.4, 0.1, 0.2)), -1.0);
    EXPECT_EQ(outcome({2.0, Vec3::UnitZ()}, kZ, hidden(0.1, 0.7, 0.1)), 3.0);
    EXPECT_EQ(outcome({0.25, Vec3::Zero()}, kZ, hidden(0, 0, 1)), 0.25);
}

TEST(BellMermin, BoundaryTakesPlusBranch) {
    const auto m = hidden(0, 0, -1);
    EXPECT_TRUE(on_boundary(Observable::pauli_z(), kZ, m));
    EXPECT_EQ(outcome(Observable::pauli_z(), kZ, m), 1.0);
}

TEST(BellMermin, ClosedForm) {
    EXPECT_NEAR(closed_form_mean(Observable::pauli_x(), kZ), 0.0, 1e-15);
    EXPECT_NEAR(closed_form_mean(Observable::pauli_z(), kZ), 1.0, 1e-15);
    const double c = std::cos(testing::kPi / 3), s = std::sin(testing::kPi / 3);
    EXPECT_NEAR(closed_form_mean({0.5, 2.0 * Vec3::UnitZ()}, PreparedDirection(Vec3(s, 0, c))), 1.5, 1e-12);
}

TEST(BellMermin, MonteCarloExamples) {
    const auto sx = sample_mean(Observable::pauli_x(), kZ, 1'000'000, 11);
    EXPECT_NEAR(sx.mean, 0.0, 3 * 1e-3);
    EXPECT_NEAR(sx.standard_error, 1e-3, 1e-5);

    const auto sz = sample_mean(Observable::pauli_z(), kZ, 100'000, 3);
    EXPECT_EQ(sz.mean, 1.0);
    EXPECT_EQ(sz.standard_error, 0.0);

    const auto xx = sample_mean(Observable::pauli_x(), kX, 100'000, 5);
    EXPECT_EQ(xx.mean, 1.0);
}

TEST(BellMermin, SerialAndParallelAreBitIdentical) {
    const Observable a{0.2, Vec3(0.3, -0.5, 0.8)};
    const auto n = PreparedDirection::normalized(Vec3(1, 2, -0.5));
    for (std::uint64_t samples : {1ull, 65535ull, 65536ull, 200'001ull}) {
        const auto p = sample_mean(a, n, samples, 99);
        const auto s = sample_mean_serial(a, n, samples, 99);
        EXPECT_EQ(p.mean, s.mean) << samples;
        EXPECT_EQ(p.standard_error, s.standard_error) << samples;
        EXPECT_EQ(p.boundary_hits, s.boundary_hits);
    }
}

TEST(BellMermin, SeedsChangeTheStream) {
    const auto a = Observable::pauli_x();
    EXPECT_NE(sample_mean(a, kZ, 10'000, 1).mean, sample_mean(a, kZ, 10'000, 2).mean);
    EXPECT_EQ(sample_mean(a, kZ, 10'000, 1).mean, sample_mean(a, kZ, 10'000, 1).mean);
}

TEST(BellMermin, Guards) {
    EXPECT_THROW((void)sample_mean(Observable::pauli_x(), kZ, 0, 1), std::invalid_argument);
    EXPECT_THROW((PreparedDirection(Vec3(1, 1, 0))), std::invalid_argument);
    EXPECT_THROW((void)PreparedDirection::normalized(Vec3::Zero()), std::invalid_argument);
}

TEST(BellMermin, SphereMoments) {
    auto engine = rng::make_stream(1234, 0);
    constexpr int kN = 200'000;
    Vec3 first = Vec3::Zero();
    Vec3 second = Vec3::Zero();
    for (int i = 0; i < kN; ++i) {
        const Vec3 m = sample_sphere(engine);
        ASSERT_NEAR(m.norm(), 1.0, 1e-12);
        first += m;
        second += m.cwiseProduct(m);
    }
    // Each coordinate is uniform in [-1, 1] marginally: variance 1/3, so the
    // mean has standard error sqrt(1/(3N)) ~ 1.3e-3.
    for (int k = 0; k < 3; ++k) {
        EXPECT_NEAR(first[k] / kN, 0.0, 6e-3) << k;
        EXPECT_NEAR(second[k] / kN, 1.0 / 3, 3e-3) << k;
    }
}

TEST(Rng, StreamsArePinned) {
    EXPECT_EQ(rng::splitmix64(0), 0xE220A8397B1DCDAFull);
    EXPECT_NE(rng::stream_seed(7, 0), rng::stream_seed(7, 1));
    auto e = rng::make_stream(7, 0);
    const double u = rng::uniform01(e);
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
}

}  // namespace
}  // namespace wrealism::bellmermin
