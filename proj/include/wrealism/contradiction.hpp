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

// The no-go argument end to end: outcomes that a local-realistic ensemble
// must produce with positive probability while the quantum state gives them
// exactly zero amplitude.

#ifndef WREALISM_CONTRADICTION_HPP
#define WREALISM_CONTRADICTION_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "wrealism/basis.hpp"
#include "wrealism/lhv_ensemble.hpp"
#include "wrealism/rational.hpp"
#include "wrealism/statevector.hpp"

namespace wrealism::contradiction {

inline constexpr int kMaxScanSites = lhv::kMaxEnumerationSites;
inline constexpr int kMaxClosedFormScan = 24;
inline constexpr int kMaxBruteForceScan = 12;

/// Bell is the two-site W state.
enum class Family { W, GHZ, Bell };

std::string_view to_string(Family f);
Family parse_family(std::string_view text);
Statevector family_state(Family f, int n);

struct Witness {
    MeasurementSettings settings;
    Outcome outcome;
    Rational lhv_probability;
    Rational quantum_probability;
};

enum class Verdict { ContradictionFound, NoContradiction };
std::string_view to_string(Verdict v);

/// One (Z, X, ..., X) result class of the completion argument.
struct CompletionClass {
    MeasurementSettings settings;
    Outcome measured;
    Rational quantum_probability;
    /// The member after filling in z = 0 elsewhere and the chosen x label on
    /// the Z site.
    lhv::LhvAssignment completed;
    /// Forbidden readings of `completed`.
    std::vector<Witness> witnesses;
    bool refuted_under_choice = false;
    /// No x label on the Z site avoids a forbidden reading.
    bool refuted_under_all_choices = false;
};

struct EnsembleCounts {
    std::size_t z_consistent = 0;  // members whose z string is in the all-Z support
    std::size_t filtered = 0;      // after dropping members with a forbidden reading
    std::size_t completed = 0;     // filtered plus completions of outcomes it cannot produce
};

struct ContradictionReport {
    Family family = Family::W;
    int n = 0;
    std::vector<Witness> witnesses;
    /// Quantum probability of the one-Z-rest-X outcomes (Z on site 0) that no
    /// consistent member can produce.
    Rational inconsistency_fraction{0};
    /// Same quantity averaged over the position of the Z site.
    Rational inconsistency_fraction_permutation_average{0};
    Verdict verdict = Verdict::NoContradiction;
    std::optional<Result> x_choice;
    std::vector<CompletionClass> classes;
    std::optional<EnsembleCounts> counts;
    std::vector<std::string> notes;
};

/// The completion chain for W_n with the Z site at `z_site` reading 1: each
/// X-result class is completed with z = 0 on the other sites and `x_choice`
/// on the Z site, and the forbidden readings it then shows are listed. The
/// inconsistency fraction counts the classes refuted under both choices.
ContradictionReport counterfactual_completion(int n, Result x_choice, int z_site = 0);

/// Exhaustive scan over the settings family {all-Z, all-X, one-Z-rest-X}.
///
/// The ensemble is built in three steps:
///   1. z-consistent: every (z, x) whose z string has nonzero all-Z amplitude;
///   2. filtered: step 1 minus members showing an exactly-forbidden outcome
///      under any setting of the family;
///   3. completed: step 2 plus, for every allowed outcome that no filtered
///      member shows, all step-1 members that show it.
/// A witness is a forbidden outcome shown by a positive share of step 3.
///
/// Throws std::invalid_argument for n above kMaxScanSites or a Bell request
/// with n != 2.
ContradictionReport forbidden_witnesses(Family family, int n);

struct TraceTerm {
    std::string ket;         // e.g. "010"
    Result site0_label;      // which site-0 ket the term feeds
    int sign = 0;            // contribution = sign / (2 sqrt 3)
    double contribution = 0.0;
};

struct InterferenceTrace {
    std::array<Result, 2> x_results;
    std::array<TraceTerm, 3> terms;
    double amplitude_one = 0.0;
    double amplitude_zero = 0.0;
    /// P(site 0 reads 0 | sites 1, 2 gave x_results).
    double conditional_p_zero = 0.0;
    bool zero_component_cancels = false;
};

/// Contributions of |100>, |010>, |001> of W_3 to the site-0 amplitude after
/// sites 1 and 2 are found in the given X results.
InterferenceTrace interference_trace(std::array<Result, 2> x_results);

/// Closed form n / 2^(n-1): the W_n probability that an all-X measurement
/// gives identical results on every site.
Rational all_equal_x_probability(int n);

/// Same quantity by summing exact probabilities over all 2^n X outcomes.
Rational all_equal_x_probability_brute_force(int n);

/// Share of the W_n pipeline survivors whose x labels are all equal.
Rational lhv_all_equal_x_probability(int n);

struct ScanRow {
    int n;
    Rational closed_form;
    std::optional<Rational> brute_force;
    std::optional<Rational> lhv;
};

/// Rows for n = 1..n_max. Brute force and LHV columns for n <= 12.
std::vector<ScanRow> quantum_wins_scan(int n_max);

}  // namespace wrealism::contradiction

#endif  // WREALISM_CONTRADICTION_HPP
