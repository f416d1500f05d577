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

// Data-parallel inner loops. Every kernel exists twice: `serial::` is the
// plain reference used by the tests, `parallel::` is the OpenMP version used
// by the library. Parallel reductions are split into fixed-size chunks and
// combined in chunk order, so results never depend on the thread count.

#ifndef WREALISM_KERNELS_HPP
#define WREALISM_KERNELS_HPP

#include <algorithm>
#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace wrealism::kernels {

using Complex = std::complex<double>;

inline constexpr std::uint64_t kChunk = std::uint64_t{1} << 12;

inline constexpr double kInvSqrt2 = 0.70710678118654752440084436210484903928;

/// <o|b> for one X-measured site: 1/sqrt2 except <-|0> = -1/sqrt2. Z sites
/// contribute a Kronecker delta. Returns the product over all sites.
inline double bra_coefficient(std::uint64_t basis_index, std::uint64_t x_mask, std::uint64_t code, double x_scale) {
    if (((basis_index ^ code) & ~x_mask) != 0) return 0.0;
    const auto flips = std::popcount(x_mask & code & ~basis_index);
    return (flips & 1) ? -x_scale : x_scale;
}

inline double x_scale_for(std::uint64_t x_mask) { return std::pow(kInvSqrt2, std::popcount(x_mask)); }

namespace serial {

/// Rotates every site in `x_mask` from the (|0>,|1>) basis to the (|+>,|->)
/// basis in place. Afterwards index bit 0 means + and bit 1 means - on those
/// sites.
inline void x_basis_transform(std::span<Complex> amps, std::uint64_t x_mask) {
    const std::uint64_t dim = amps.size();
    for (std::uint64_t bit = 1; bit < dim; bit <<= 1) {
        if (!(x_mask & bit)) continue;
        for (std::uint64_t i = 0; i < dim; ++i) {
            if (i & bit) continue;
            const Complex a0 = amps[i];
            const Complex a1 = amps[i | bit];
            amps[i] = (a1 + a0) * kInvSqrt2;
            amps[i | bit] = (a1 - a0) * kInvSqrt2;
        }
    }
}

inline void squared_magnitudes(std::span<const Complex> amps, std::span<double> out) {
    for (std::size_t i = 0; i < amps.size(); ++i) out[i] = std::norm(amps[i]);
}

inline Complex mixed_basis_overlap(std::span<const Complex> amps, std::uint64_t x_mask, std::uint64_t code) {
    const double scale = x_scale_for(x_mask);
    Complex acc{};
    for (std::uint64_t b = 0; b < amps.size(); ++b) acc += bra_coefficient(b, x_mask, code, scale) * amps[b];
    return acc;
}

template <class Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t count, Pred &&keep) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t i = 0; i < count; ++i)
        if (keep(i)) out.push_back(i);
    return out;
}

template <class R, class BlockFn>
std::vector<R> map_blocks(std::uint64_t blocks, BlockFn &&fn) {
    std::vector<R> out(blocks);
    for (std::uint64_t b = 0; b < blocks; ++b) out[b] = fn(b);
    return out;
}

}  // namespace serial

namespace parallel {

inline void x_basis_transform(std::span<Complex> amps, std::uint64_t x_mask) {
    const auto dim = static_cast<std::int64_t>(amps.size());
    for (std::int64_t bit = 1; bit < dim; bit <<= 1) {
        if (!(x_mask & static_cast<std::uint64_t>(bit))) continue;
        const std::int64_t half = dim / 2;
#pragma omp parallel for schedule(static)
        for (std::int64_t k = 0; k < half; ++k) {
            // k with a zero inserted at `bit`.
            const std::int64_t i = ((k & ~(bit - 1)) << 1) | (k & (bit - 1));
            const Complex a0 = amps[i];
            const Complex a1 = amps[i | bit];
            amps[i] = (a1 + a0) * kInvSqrt2;
            amps[i | bit] = (a1 - a0) * kInvSqrt2;
        }
    }
}

inline void squared_magnitudes(std::span<const Complex> amps, std::span<double> out) {
    const auto dim = static_cast<std::int64_t>(amps.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < dim; ++i) out[i] = std::norm(amps[i]);
}

inline Complex mixed_basis_overlap(std::span<const Complex> amps, std::uint64_t x_mask, std::uint64_t code) {
    const double scale = x_scale_for(x_mask);
    const std::uint64_t dim = amps.size();
    const auto chunks = static_cast<std::int64_t>((dim + kChunk - 1) / kChunk);
    std::vector<Complex> partial(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t hi = std::min(dim, lo + kChunk);
        Complex acc{};
        for (std::uint64_t b = lo; b < hi; ++b) acc += bra_coefficient(b, x_mask, code, scale) * amps[b];
        partial[static_cast<std::size_t>(c)] = acc;
    }
    Complex total{};
    for (const auto &p : partial) total += p;
    return total;
}

/// Order-preserving parallel filter over [0, count).
template <class Pred>
std::vector<std::uint64_t> filter_indices(std::uint64_t count, Pred &&keep) {
    const auto chunks = static_cast<std::int64_t>((count + kChunk - 1) / kChunk);
    std::vector<std::vector<std::uint64_t>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 4)
    for (std::int64_t c = 0; c < chunks; ++c) {
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunk;
        const std::uint64_t hi = std::min(count, lo + kChunk);
        auto &part = parts[static_cast<std::size_t>(c)];
        for (std::uint64_t i = lo; i < hi; ++i)
            if (keep(i)) part.push_back(i);
    }
    std::vector<std::uint64_t> out;
    std::size_t total = 0;
    for (const auto &p : parts) total += p.size();
    out.reserve(total);
    for (const auto &p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

/// Evaluates `fn(block)` for every block; output order is block order.
template <class R, class BlockFn>
std::vector<R> map_blocks(std::uint64_t blocks, BlockFn &&fn) {
    std::vector<R> out(blocks);
    const auto nblocks = static_cast<std::int64_t>(blocks);
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t b = 0; b < nblocks; ++b) out[static_cast<std::size_t>(b)] = fn(static_cast<std::uint64_t>(b));
    return out;
}

}  // namespace parallel

}  // namespace wrealism::kernels

#endif  // WREALISM_KERNELS_HPP
