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

#include "wrealism/contradiction.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <stdexcept>

#include <fmt/core.h>

#include "wrealism/kernels.hpp"

namespace wrealism::contradiction {

namespace {

using lhv::Ensemble;
using lhv::ForbiddenTable;
using lhv::LhvAssignment;

std::vector<MeasurementSettings> scanned_family(int n) {
    std::vector<MeasurementSettings> family;
    family.push_back(MeasurementSettings::all(n, Basis::Z));
    family.push_back(MeasurementSettings::all(n, Basis::X));
    for (auto &s : lhv::one_z_rest_x_family(n)) family.push_back(std::move(s));
    return family;
}

constexpr std::size_t kFirstOneZ = 2;

Rational exact_probability(const Statevector &state, const MeasurementSettings &settings, std::uint64_t code) {
    return exact_amplitude(state, settings, Outcome::from_code(settings, code))->probability();
}

// Classes (Z on z_site reading 1, any X results elsewhere) that every choice
// of the z_site x label sends to a forbidden reading.
Rational refuted_mass(const Statevector &state, const ForbiddenTable &table, int n, int z_site) {
    const auto settings = MeasurementSettings::one_z_rest_x(n, z_site);
    const std::uint64_t z_bit = site_mask(n, z_site);
    Rational mass(0);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        if (!(code & z_bit)) continue;
        bool all_refuted = true;
        for (std::uint32_t choice : {0u, 1u}) {
            const LhvAssignment completed{n, static_cast<std::uint32_t>(z_bit),
                                          static_cast<std::uint32_t>((code & ~z_bit) | (choice ? z_bit : 0))};
            all_refuted = all_refuted && table.forbids(completed);
        }
        if (all_refuted) mass += exact_probability(state, settings, code);
    }
    return mass;
}

}  // namespace

std::string_view to_string(Family f) {
    switch (f) {
        case Family::W:
            return "w";
        case Family::GHZ:
            return "ghz";
        case Family::Bell:
            return "bell";
    }
    return "?";
}

Family parse_family(std::string_view text) {
    if (text == "w" || text == "W") return Family::W;
    if (text == "ghz" || text == "GHZ") return Family::GHZ;
    if (text == "bell" || text == "Bell") return Family::Bell;
    throw std::invalid_argument(fmt::format("unknown state family '{}' (expected w, ghz or bell)", text));
}

Statevector family_state(Family f, int n) {
    switch (f) {
        case Family::W:
            return w_state(n);
        case Family::GHZ:
            return ghz_state(n);
        case Family::Bell:
            if (n != 2) throw std::invalid_argument(fmt::format("the Bell family has n = 2, got {}", n));
            return w_state(2);
    }
    throw std::invalid_argument("unknown family");
}

std::string_view to_string(Verdict v) {
    return v == Verdict::ContradictionFound ? "contradiction found" : "no contradiction";
}

ContradictionReport counterfactual_completion(int n, Result x_choice, int z_site) {
    if (basis_of(x_choice) != Basis::X) throw std::invalid_argument("x_choice must be + or -");
    if (n < 2 || n > kMaxScanSites)
        throw std::invalid_argument(fmt::format("completion argument needs 2 <= n <= {}, got {}", kMaxScanSites, n));
    if (z_site < 0 || z_site >= n) throw std::out_of_range(fmt::format("z_site {} out of range", z_site));

    const auto state = w_state(n);
    const ForbiddenTable table(state, lhv::one_z_rest_x_family(n));
    const auto settings = MeasurementSettings::one_z_rest_x(n, z_site);
    const std::uint64_t z_bit = site_mask(n, z_site);
    const std::uint32_t choice_bit = x_choice == Result::Minus ? static_cast<std::uint32_t>(z_bit) : 0u;

    ContradictionReport report;
    report.family = Family::W;
    report.n = n;
    report.x_choice = x_choice;

    std::map<std::pair<std::size_t, std::uint64_t>, Rational> entailed;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n); ++code) {
        if (!(code & z_bit)) continue;
        CompletionClass cls;
        cls.settings = settings;
        cls.measured = Outcome::from_code(settings, code);
        cls.quantum_probability = exact_probability(state, settings, code);
        cls.completed = LhvAssignment{n, static_cast<std::uint32_t>(z_bit),
                                      static_cast<std::uint32_t>(code & ~z_bit) | choice_bit};
        const LhvAssignment other{n, cls.completed.z_bits, cls.completed.x_bits ^ static_cast<std::uint32_t>(z_bit)};
        for (std::size_t s = 0; s < table.family().size(); ++s) {
            const auto reading = cls.completed.reading_code(table.family()[s].x_mask());
            if (!table.is_forbidden(s, reading)) continue;
            cls.witnesses.push_back(Witness{table.family()[s], Outcome::from_code(table.family()[s], reading),
                                            cls.quantum_probability, Rational(0)});
            entailed[{s, reading}] += cls.quantum_probability;
        }
        cls.refuted_under_choice = !cls.witnesses.empty();
        cls.refuted_under_all_choices = cls.refuted_under_choice && table.forbids(other);
        if (cls.refuted_under_all_choices) report.inconsistency_fraction += cls.quantum_probability;
        report.classes.push_back(std::move(cls));
    }
    for (const auto &[where, lhv_p] : entailed) {
        const auto &s = table.family()[where.first];
        report.witnesses.push_back(Witness{s, Outcome::from_code(s, where.second), lhv_p, Rational(0)});
    }

    Rational sum(0);
    for (int k = 0; k < n; ++k) sum += refuted_mass(state, table, n, k);
    report.inconsistency_fraction_permutation_average = sum / Rational(n);
    report.verdict = report.inconsistency_fraction > Rational(0) ? Verdict::ContradictionFound : Verdict::NoContradiction;
    return report;
}

ContradictionReport forbidden_witnesses(Family family, int n) {
    if (n < 1 || n > kMaxScanSites)
        throw std::invalid_argument(fmt::format("n = {} outside the exhaustive scan limit [1, {}]", n, kMaxScanSites));
    const auto state = family_state(family, n);
    const ForbiddenTable table(state, scanned_family(n));
    const auto &settings_list = table.family();
    const std::uint64_t outcomes = std::uint64_t{1} << n;

    // Step 1: z strings with nonzero all-Z amplitude, any x labels.
    std::vector<std::uint32_t> z_support;
    for (std::uint64_t z = 0; z < outcomes; ++z)
        if (!table.is_forbidden(0, z)) z_support.push_back(static_cast<std::uint32_t>(z));
    std::vector<LhvAssignment> step1;
    step1.reserve(z_support.size() * outcomes);
    for (auto z : z_support)
        for (std::uint64_t x = 0; x < outcomes; ++x) step1.push_back(LhvAssignment{n, z, static_cast<std::uint32_t>(x)});

    // Step 2: drop members with any forbidden reading.
    const auto kept =
        kernels::parallel::filter_indices(step1.size(), [&](std::uint64_t i) { return !table.forbids(step1[i]); });
    std::vector<char> in_filtered(step1.size(), 0);
    for (auto i : kept) in_filtered[i] = 1;

    // Step 3: allowed outcomes the filtered members cannot show pull in
    // every step-1 member that shows them.
    std::vector<char> in_completed = in_filtered;
    Rational site0_mass(0), all_sites_mass(0);
    for (std::size_t s = 0; s < settings_list.size(); ++s) {
        const std::uint64_t x_mask = settings_list[s].x_mask();
        std::vector<std::vector<std::size_t>> showing(outcomes);
        std::vector<char> accommodated(outcomes, 0);
        for (std::size_t i = 0; i < step1.size(); ++i) {
            const auto code = step1[i].reading_code(x_mask);
            showing[code].push_back(i);
            if (in_filtered[i]) accommodated[code] = 1;
        }
        for (std::uint64_t code = 0; code < outcomes; ++code) {
            if (table.is_forbidden(s, code) || accommodated[code] || showing[code].empty()) continue;
            for (auto i : showing[code]) in_completed[i] = 1;
            if (s >= kFirstOneZ) {
                const auto p = exact_probability(state, settings_list[s], code);
                all_sites_mass += p;
                if (s == kFirstOneZ) site0_mass += p;
            }
        }
    }

    std::vector<std::size_t> completed;
    for (std::size_t i = 0; i < step1.size(); ++i)
        if (in_completed[i]) completed.push_back(i);

    ContradictionReport report;
    report.family = family;
    report.n = n;
    report.counts = EnsembleCounts{step1.size(), kept.size(), completed.size()};
    report.inconsistency_fraction = site0_mass;
    report.inconsistency_fraction_permutation_average = all_sites_mass / Rational(n);

    const auto total = static_cast<std::int64_t>(completed.size());
    for (std::size_t s = 0; s < settings_list.size(); ++s) {
        const std::uint64_t x_mask = settings_list[s].x_mask();
        std::vector<std::int64_t> hits(outcomes, 0);
        for (auto i : completed) ++hits[step1[i].reading_code(x_mask)];
        for (std::uint64_t code = 0; code < outcomes; ++code) {
            if (!table.is_forbidden(s, code) || hits[code] == 0) continue;
            report.witnesses.push_back(Witness{settings_list[s], Outcome::from_code(settings_list[s], code),
                                               Rational(hits[code], total), Rational(0)});
        }
    }
    report.verdict = report.witnesses.empty() ? Verdict::NoContradiction : Verdict::ContradictionFound;

    std::size_t one_z_zeros = 0;
    for (std::size_t s = kFirstOneZ; s < settings_list.size(); ++s) one_z_zeros += table.forbidden_count(s);
    report.notes.push_back(fmt::format("{} zero-probability outcomes in the one-Z-rest-X settings", one_z_zeros));
    if (table.forbidden_count(1) > 0)
        report.notes.push_back(fmt::format("{} zero-probability outcomes in the all-X setting", table.forbidden_count(1)));
    report.notes.push_back(
        "all-X is scanned as a third, less economical setting; the argument needs only all-Z and one-Z-rest-X");
    if (family == Family::W && n % 2 == 0)
        report.notes.push_back(
            "even n: an odd number of X sites can never be balanced, so the one-Z-rest-X filter removes nothing; "
            "the argument targets odd n");
    return report;
}

InterferenceTrace interference_trace(std::array<Result, 2> x_results) {
    for (auto r : x_results)
        if (basis_of(r) != Basis::X) throw std::invalid_argument("interference trace needs X results on sites 1 and 2");
    const auto sign = [](Result x, int bit) { return (x == Result::Minus && bit == 0) ? -1 : 1; };
    const double unit = 1.0 / (2.0 * std::sqrt(3.0));
    InterferenceTrace trace;
    trace.x_results = x_results;
    const std::array<std::array<int, 3>, 3> kets{{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}};
    int zero_sum = 0, one_sum = 0;
    for (std::size_t t = 0; t < kets.size(); ++t) {
        const auto &b = kets[t];
        TraceTerm term;
        term.ket = fmt::format("{}{}{}", b[0], b[1], b[2]);
        term.site0_label = b[0] ? Result::One : Result::Zero;
        term.sign = sign(x_results[0], b[1]) * sign(x_results[1], b[2]);
        term.contribution = term.sign * unit;
        (b[0] ? one_sum : zero_sum) += term.sign;
        trace.terms[t] = term;
    }
    trace.amplitude_one = one_sum * unit;
    trace.amplitude_zero = zero_sum * unit;
    trace.conditional_p_zero = static_cast<double>(zero_sum * zero_sum) / (zero_sum * zero_sum + one_sum * one_sum);
    trace.zero_component_cancels = zero_sum == 0;
    return trace;
}

Rational all_equal_x_probability(int n) {
    if (n < 1 || n > 62) throw std::invalid_argument(fmt::format("n = {} outside [1, 62]", n));
    return Rational(n, std::int64_t{1} << (n - 1));
}

Rational all_equal_x_probability_brute_force(int n) {
    const auto state = w_state(n);
    const auto settings = MeasurementSettings::all(n, Basis::X);
    const std::uint64_t all_minus = (std::uint64_t{1} << n) - 1;
    Rational total(0);
    for (std::uint64_t code = 0; code <= all_minus; ++code) {
        const bool all_equal = code == 0 || code == all_minus;
        if (all_equal) total += exact_probability(state, settings, code);
    }
    return total;
}

Rational lhv_all_equal_x_probability(int n) {
    const auto survivors = lhv::single_excitation_survivors(n);
    if (survivors.empty()) return Rational(0);
    const std::uint32_t all_minus = (1u << n) - 1;
    std::int64_t hits = 0;
    for (const auto &a : survivors.members())
        if (a.x_bits == 0 || a.x_bits == all_minus) ++hits;
    return Rational(hits, static_cast<std::int64_t>(survivors.size()));
}

std::vector<ScanRow> quantum_wins_scan(int n_max) {
    if (n_max < 1 || n_max > kMaxClosedFormScan)
        throw std::invalid_argument(fmt::format("max n = {} outside [1, {}]", n_max, kMaxClosedFormScan));
    std::vector<ScanRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        ScanRow row{n, all_equal_x_probability(n), std::nullopt, std::nullopt};
        if (n <= kMaxBruteForceScan) {
            row.brute_force = all_equal_x_probability_brute_force(n);
            row.lhv = lhv_all_equal_x_probability(n);
        }
        rows.push_back(row);
    }
    return rows;
}

}  // namespace wrealism::contradiction
