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

#ifndef WREALISM_BASIS_HPP
#define WREALISM_BASIS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wrealism {

/// Thrown for malformed settings/outcome strings. `position` is the offending
/// character index (0-based), or npos when the problem is the overall length.
class ParseError : public std::invalid_argument {
   public:
    ParseError(const std::string &what, std::size_t position)
        : std::invalid_argument(what), position_(position) {}
    std::size_t position() const { return position_; }

   private:
    std::size_t position_;
};

enum class Basis : std::uint8_t { Z, X };

/// Single-site measurement result. Z sites report the ket label (0 or 1),
/// X sites report + or -.
///
/// Eigenvalue map: sigma_z has |1> -> +1 and |0> -> -1; sigma_x has |+> -> +1
/// and |-> -> -1.
enum class Result : std::uint8_t { Zero, One, Plus, Minus };

constexpr Basis basis_of(Result r) { return (r == Result::Zero || r == Result::One) ? Basis::Z : Basis::X; }

constexpr int eigenvalue(Result r) { return (r == Result::One || r == Result::Plus) ? +1 : -1; }

/// Packed bit used in outcome codes: 1 for `1` and for `-`, 0 for `0` and `+`.
constexpr unsigned result_bit(Result r) { return (r == Result::One || r == Result::Minus) ? 1u : 0u; }

constexpr Result result_from_bit(Basis b, unsigned bit) {
    if (b == Basis::Z) return bit ? Result::One : Result::Zero;
    return bit ? Result::Minus : Result::Plus;
}

char to_char(Basis b);
char to_char(Result r);

/// Bit position of `site` in an N-site code. Site 0 is the leftmost ket label
/// and therefore the most significant bit, so codes print like kets.
constexpr unsigned site_shift(int num_sites, int site) { return static_cast<unsigned>(num_sites - 1 - site); }

constexpr std::uint64_t site_mask(int num_sites, int site) { return std::uint64_t{1} << site_shift(num_sites, site); }

struct MeasurementSettings {
    std::vector<Basis> bases;

    static MeasurementSettings parse(std::string_view text);
    static MeasurementSettings all(int n, Basis b);
    /// Z on `z_site`, X everywhere else.
    static MeasurementSettings one_z_rest_x(int n, int z_site);

    int size() const { return static_cast<int>(bases.size()); }
    int count(Basis b) const;
    /// Bitmask of the X sites, in site_mask convention.
    std::uint64_t x_mask() const;
    std::string str() const;

    friend bool operator==(const MeasurementSettings &, const MeasurementSettings &) = default;
    friend auto operator<=>(const MeasurementSettings &, const MeasurementSettings &) = default;
};

struct Outcome {
    std::vector<Result> results;

    /// Parses one character per site: 0, 1, + or -.
    static Outcome parse(std::string_view text);
    /// Parses and checks the kind of each site against `settings`.
    static Outcome parse(std::string_view text, const MeasurementSettings &settings);
    /// Inverse of code().
    static Outcome from_code(const MeasurementSettings &settings, std::uint64_t code);

    int size() const { return static_cast<int>(results.size()); }
    /// Packed result bits in site_mask convention.
    std::uint64_t code() const;
    std::string str() const;

    friend bool operator==(const Outcome &, const Outcome &) = default;
    friend auto operator<=>(const Outcome &, const Outcome &) = default;
};

/// Throws std::invalid_argument unless `outcome` has the same length as
/// `settings` and every result kind matches its basis.
void check_compatible(const MeasurementSettings &settings, const Outcome &outcome);

}  // namespace wrealism

#endif  // WREALISM_BASIS_HPP
