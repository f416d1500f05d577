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

// Reproducible random streams. Generator: std::mt19937_64, whose output
// sequence is fixed by the C++ standard. Stream k of master seed s is seeded
// with splitmix64(s + (k+1) * golden_gamma). Doubles are formed directly from
// the top 53 bits; std::uniform_real_distribution is avoided because its
// output differs between standard library implementations.
//
// Changing anything here changes every seeded result. Version: 1.

#ifndef WREALISM_RNG_HPP
#define WREALISM_RNG_HPP

#include <cstdint>
#include <random>

namespace wrealism::rng {

inline constexpr int kStreamVersion = 1;

using Engine = std::mt19937_64;

constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

constexpr std::uint64_t stream_seed(std::uint64_t master_seed, std::uint64_t stream) {
    return splitmix64(master_seed + (stream + 1) * 0x9E3779B97F4A7C15ull);
}

inline Engine make_stream(std::uint64_t master_seed, std::uint64_t stream) {
    return Engine(stream_seed(master_seed, stream));
}

/// Uniform on [0, 1).
inline double uniform01(Engine &engine) { return static_cast<double>(engine() >> 11) * 0x1.0p-53; }

}  // namespace wrealism::rng

#endif  // WREALISM_RNG_HPP
