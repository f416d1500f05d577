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

// Bell–Mermin hidden-variable model of one qubit. A state polarized along n
// and a hidden unit vector m fix the value of every observable
// A = a0 + a1.sigma:
//
//     v = a0 + |a1|   if (m + n).a1 > 0
//     v = a0 - |a1|   if (m + n).a1 < 0
//
// Averaging over uniform m reproduces <A> = a0 + a1.n.

#ifndef WREALISM_BELLMERMIN_HPP
#define WREALISM_BELLMERMIN_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

#include "wrealism/rng.hpp"

namespace wrealism::bellmermin {

using Vec3 = Eigen::Vector3d;

inline constexpr double kUnitTolerance = 1e-12;
inline constexpr std::uint64_t kBlockSize = std::uint64_t{1} << 16;

struct Observable {
    double a0 = 0.0;
    Vec3 a1 = Vec3::Zero();

    double magnitude() const { return a1.norm(); }

    static Observable pauli_x() { return {0.0, Vec3::UnitX()}; }
    static Observable pauli_z() { return {0.0, Vec3::UnitZ()}; }
};

/// Unit 3-vector; the tag keeps hidden and prepared directions apart.
template <class Tag>
class Direction {
   public:
    /// Throws std::invalid_argument unless |v| = 1 within kUnitTolerance.
    explicit Direction(const Vec3 &v) : v_(v) {
        if (!(std::abs(v.norm() - 1.0) <= kUnitTolerance))
            throw std::invalid_argument("direction must be a unit vector");
    }
    /// Normalizes v; rejects the zero vector.
    static Direction normalized(const Vec3 &v) {
        const double len = v.norm();
        if (!(len > 0.0)) throw std::invalid_argument("direction must be nonzero");
        return Direction(v / len);
    }

    const Vec3 &vec() const { return v_; }

   private:
    Vec3 v_;
};

struct HiddenTag {};
struct PreparedTag {};
using HiddenDirection = Direction<HiddenTag>;
using PreparedDirection = Direction<PreparedTag>;

/// True when (m + n).a1 == 0 exactly; outcome() then takes the + branch.
bool on_boundary(const Observable &a, const PreparedDirection &n, const HiddenDirection &m);

/// Deterministic value of `a` for hidden vector m. Returns a0 when a1 = 0.
double outcome(const Observable &a, const PreparedDirection &n, const HiddenDirection &m);

/// Uniform point on the unit sphere: z uniform in [-1, 1), azimuth uniform in
/// [0, 2 pi).
Vec3 sample_sphere(rng::Engine &engine);

struct SampleStats {
    double mean = 0.0;
    double standard_error = 0.0;
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    /// Draws that landed exactly on (m + n).a1 = 0.
    std::uint64_t boundary_hits = 0;
};

/// Monte Carlo mean of outcome() over uniform m. Samples are split into
/// blocks of kBlockSize, block k drawing from rng stream k, and block
/// statistics are merged in block order, so the result depends only on
/// (a, n, samples, seed). Throws std::invalid_argument for samples == 0.
SampleStats sample_mean(const Observable &a, const PreparedDirection &n, std::uint64_t samples, std::uint64_t seed);

/// Single-threaded reference for sample_mean(); bit-identical output.
SampleStats sample_mean_serial(const Observable &a, const PreparedDirection &n, std::uint64_t samples,
                               std::uint64_t seed);

/// a0 + a1.n.
double closed_form_mean(const Observable &a, const PreparedDirection &n);

}  // namespace wrealism::bellmermin

#endif  // WREALISM_BELLMERMIN_HPP
