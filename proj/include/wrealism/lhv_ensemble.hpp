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

// Local-realistic ensembles. Every qubit carries two elements of reality, a
// sigma_z label (0/1) and a sigma_x label (+/-); an ensemble is a set of such
// per-site assignments. The filters below remove assignments that contradict
// what quantum mechanics predicts with certainty.

#ifndef WREALISM_LHV_ENSEMBLE_HPP
#define WREALISM_LHV_ENSEMBLE_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrealism/basis.hpp"
#include "wrealism/rational.hpp"
#include "wrealism/statevector.hpp"

namespace wrealism::lhv {

inline constexpr int kMaxEnumerationSites = 12;

/// Elements of reality for N sites, packed in site_mask() convention: a set
/// bit in `z_bits` means z = 1, a set bit in `x_bits` means x = -.
struct LhvAssignment {
    int num_sites = 0;
    std::uint32_t z_bits = 0;
    std::uint32_t x_bits = 0;

    Result z(int site) const;
    Result x(int site) const;

    /// What this member shows under `settings`: its z label on Z sites and
    /// its x label on X sites.
    Outcome reading(const MeasurementSettings &settings) const;
    std::uint64_t reading_code(std::uint64_t x_mask) const { return (z_bits & ~x_mask) | (x_bits & x_mask); }

    /// "1+|0+|0+" form, one z/x pair per site.
    std::string str() const;
    static LhvAssignment parse(std::string_view text);

    friend bool operator==(const LhvAssignment &, const LhvAssignment &) = default;
    friend auto operator<=>(const LhvAssignment &, const LhvAssignment &) = default;
};

/// A set of assignments in canonical (z_bits, x_bits) order, optionally
/// weighted. Unweighted ensembles are uniform.
class Ensemble {
   public:
    Ensemble(int num_sites, std::vector<LhvAssignment> members);
    Ensemble(int num_sites, std::vector<LhvAssignment> members, std::vector<Rational> weights);

    int num_sites() const { return num_sites_; }
    std::size_t size() const { return members_.size(); }
    bool empty() const { return members_.empty(); }
    const std::vector<LhvAssignment> &members() const { return members_; }
    const std::optional<std::vector<Rational>> &weights() const { return weights_; }
    bool contains(const LhvAssignment &a) const;

   private:
    int num_sites_;
    std::vector<LhvAssignment> members_;
    std::optional<std::vector<Rational>> weights_;
};

/// The N settings with Z on one site and X on the others.
std::vector<MeasurementSettings> one_z_rest_x_family(int n);

/// Exact-zero lookup for every outcome of a list of settings, built from
/// exact_zero_test(). Throws std::invalid_argument if the state has no
/// integer form, since a floating near-zero must not decide anything here.
class ForbiddenTable {
   public:
    ForbiddenTable(const Statevector &state, std::vector<MeasurementSettings> family);

    int num_sites() const { return num_sites_; }
    const std::vector<MeasurementSettings> &family() const { return family_; }
    bool is_forbidden(std::size_t settings_index, std::uint64_t code) const;
    /// True if any reading of `a` under the family is forbidden.
    bool forbids(const LhvAssignment &a) const;
    std::size_t forbidden_count(std::size_t settings_index) const;

   private:
    int num_sites_;
    std::vector<MeasurementSettings> family_;
    std::vector<std::uint64_t> x_masks_;
    std::vector<std::vector<char>> forbidden_;
};

/// All 4^n assignments. Throws std::invalid_argument for n outside
/// [1, kMaxEnumerationSites].
Ensemble enumerate_all(int n);

/// Keeps assignments with exactly one z = 1.
Ensemble rule_single_excitation(const Ensemble &e);

/// Removes assignments that show an exactly-forbidden W_n outcome under some
/// one-Z-rest-X setting, i.e. a z = 0 site whose other N-1 x labels are
/// balanced. The forbidden set comes from exact_zero_test() on w_state(n).
Ensemble rule_forbidden_patterns(const Ensemble &e, int n);

/// rule_forbidden_patterns(rule_single_excitation(enumerate_all(n)), n)
/// without materializing the 4^n stage.
Ensemble single_excitation_survivors(int n);

struct WeightAccounting {
    Ensemble weighted;
    Rational total;
};

/// Weights every survivor with the W_n probability of the one-Z-rest-X
/// outcome that defines it (Z on its z = 1 site). Throws
/// std::invalid_argument for a member that is not a pipeline survivor.
WeightAccounting quantum_weight_accounting(const Ensemble &survivors);

/// Weighted fraction of members whose reading under `settings` equals
/// `outcome`. Zero for an empty ensemble.
Rational lhv_outcome_probability(const Ensemble &e, const MeasurementSettings &settings, const Outcome &outcome);

}  // namespace wrealism::lhv

#endif  // WREALISM_LHV_ENSEMBLE_HPP
