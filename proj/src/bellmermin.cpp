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

#include "wrealism/bellmermin.hpp"

#include <algorithm>
#include <numbers>
#include <vector>

#include "wrealism/kernels.hpp"

namespace wrealism::bellmermin {

namespace {

struct BlockStats {
    std::uint64_t count = 0;
    double mean = 0.0;
    double m2 = 0.0;
    std::uint64_t boundary_hits = 0;
};

BlockStats run_block(const Observable &a, const PreparedDirection &n, std::uint64_t samples, std::uint64_t seed,
                     std::uint64_t block) {
    const std::uint64_t begin = block * kBlockSize;
    const std::uint64_t count = std::min(kBlockSize, samples - begin);
    auto engine = rng::make_stream(seed, block);
    BlockStats s;
    for (std::uint64_t i = 0; i < count; ++i) {
        const HiddenDirection m(sample_sphere(engine));
        if (on_boundary(a, n, m)) ++s.boundary_hits;
        const double v = outcome(a, n, m);
        ++s.count;
        const double delta = v - s.mean;
        s.mean += delta / static_cast<double>(s.count);
        s.m2 += delta * (v - s.mean);
    }
    return s;
}

// Chan et al. pairwise merge, applied left to right.
BlockStats merge(const BlockStats &x, const BlockStats &y) {
    if (x.count == 0) return y;
    if (y.count == 0) return x;
    BlockStats out;
    out.count = x.count + y.count;
    const double delta = y.mean - x.mean;
    const double wy = static_cast<double>(y.count) / static_cast<double>(out.count);
    out.mean = x.mean + delta * wy;
    out.m2 = x.m2 + y.m2 + delta * delta * static_cast<double>(x.count) * wy;
    out.boundary_hits = x.boundary_hits + y.boundary_hits;
    return out;
}

SampleStats finish(const std::vector<BlockStats> &blocks, std::uint64_t seed) {
    BlockStats total;
    for (const auto &b : blocks) total = merge(total, b);
    SampleStats out;
    out.samples = total.count;
    out.seed = seed;
    out.mean = total.mean;
    out.boundary_hits = total.boundary_hits;
    if (total.count > 1) {
        const double variance = total.m2 / static_cast<double>(total.count - 1);
        out.standard_error = std::sqrt(variance / static_cast<double>(total.count));
    }
    return out;
}

std::uint64_t block_count(std::uint64_t samples) {
    if (samples == 0) throw std::invalid_argument("samples must be >= 1");
    return (samples + kBlockSize - 1) / kBlockSize;
}

}  // namespace

bool on_boundary(const Observable &a, const PreparedDirection &n, const HiddenDirection &m) {
    return a.magnitude() > 0.0 && (m.vec() + n.vec()).dot(a.a1) == 0.0;
}

double outcome(const Observable &a, const PreparedDirection &n, const HiddenDirection &m) {
    const double mag = a.magnitude();
    if (mag == 0.0) return a.a0;
    const double s = (m.vec() + n.vec()).dot(a.a1);
    return s >= 0.0 ? a.a0 + mag : a.a0 - mag;
}

Vec3 sample_sphere(rng::Engine &engine) {
    const double z = 2.0 * rng::uniform01(engine) - 1.0;
    const double phi = 2.0 * std::numbers::pi * rng::uniform01(engine);
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    Vec3 v(r * std::cos(phi), r * std::sin(phi), z);
    // Renormalize so rounding never trips the unit-vector check.
    return v / v.norm();
}

SampleStats sample_mean(const Observable &a, const PreparedDirection &n, std::uint64_t samples, std::uint64_t seed) {
    const auto blocks = kernels::parallel::map_blocks<BlockStats>(
        block_count(samples), [&](std::uint64_t b) { return run_block(a, n, samples, seed, b); });
    return finish(blocks, seed);
}

SampleStats sample_mean_serial(const Observable &a, const PreparedDirection &n, std::uint64_t samples,
                               std::uint64_t seed) {
    const auto blocks = kernels::serial::map_blocks<BlockStats>(
        block_count(samples), [&](std::uint64_t b) { return run_block(a, n, samples, seed, b); });
    return finish(blocks, seed);
}

double closed_form_mean(const Observable &a, const PreparedDirection &n) { return a.a0 + a.a1.dot(n.vec()); }

}  // namespace wrealism::bellmermin
