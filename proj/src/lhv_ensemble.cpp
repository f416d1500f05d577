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

#include "wrealism/lhv_ensemble.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include <fmt/core.h>

#include "wrealism/kernels.hpp"

namespace wrealism::lhv {

namespace {

void check_sites(int n) {
    if (n < 1 || n > kMaxEnumerationSites)
        throw std::invalid_argument(
            fmt::format("n = {} outside the exhaustive enumeration limit [1, {}]", n, kMaxEnumerationSites));
}

Ensemble filter(const Ensemble &e, auto &&keep) {
    const auto &members = e.members();
    const auto kept = kernels::parallel::filter_indices(members.size(), [&](std::uint64_t i) { return keep(members[i]); });
    std::vector<LhvAssignment> out;
    out.reserve(kept.size());
    for (auto i : kept) out.push_back(members[i]);
    if (e.weights()) {
        std::vector<Rational> w;
        w.reserve(kept.size());
        for (auto i : kept) w.push_back((*e.weights())[i]);
        return Ensemble(e.num_sites(), std::move(out), std::move(w));
    }
    return Ensemble(e.num_sites(), std::move(out));
}

}  // namespace

Result LhvAssignment::z(int site) const {
    return ((z_bits >> site_shift(num_sites, site)) & 1u) ? Result::One : Result::Zero;
}

Result LhvAssignment::x(int site) const {
    return ((x_bits >> site_shift(num_sites, site)) & 1u) ? Result::Minus : Result::Plus;
}

Outcome LhvAssignment::reading(const MeasurementSettings &settings) const {
    if (settings.size() != num_sites)
        throw std::invalid_argument(
            fmt::format("settings have {} sites but the assignment has {}", settings.size(), num_sites));
    return Outcome::from_code(settings, reading_code(settings.x_mask()));
}

std::string LhvAssignment::str() const {
    std::string out;
    for (int i = 0; i < num_sites; ++i) {
        if (i) out.push_back('|');
        out.push_back(to_char(z(i)));
        out.push_back(to_char(x(i)));
    }
    return out;
}

LhvAssignment LhvAssignment::parse(std::string_view text) {
    LhvAssignment a;
    std::size_t pos = 0;
    std::vector<std::pair<char, char>> sites;
    while (pos < text.size()) {
        if (pos + 2 > text.size()) throw ParseError(fmt::format("assignment: truncated site at position {}", pos), pos);
        sites.emplace_back(text[pos], text[pos + 1]);
        if (text[pos] != '0' && text[pos] != '1')
            throw ParseError(fmt::format("assignment: expected 0 or 1 at position {}", pos), pos);
        if (text[pos + 1] != '+' && text[pos + 1] != '-')
            throw ParseError(fmt::format("assignment: expected + or - at position {}", pos + 1), pos + 1);
        pos += 2;
        if (pos < text.size()) {
            if (text[pos] != '|') throw ParseError(fmt::format("assignment: expected '|' at position {}", pos), pos);
            ++pos;
            if (pos == text.size()) throw ParseError("assignment: trailing '|'", pos - 1);
        }
    }
    if (sites.empty()) throw ParseError("assignment string is empty", std::string::npos);
    a.num_sites = static_cast<int>(sites.size());
    for (int i = 0; i < a.num_sites; ++i) {
        if (sites[i].first == '1') a.z_bits |= static_cast<std::uint32_t>(site_mask(a.num_sites, i));
        if (sites[i].second == '-') a.x_bits |= static_cast<std::uint32_t>(site_mask(a.num_sites, i));
    }
    return a;
}

Ensemble::Ensemble(int num_sites, std::vector<LhvAssignment> members) : num_sites_(num_sites) {
    for (const auto &m : members)
        if (m.num_sites != num_sites) throw std::invalid_argument("ensemble member has the wrong number of sites");
    std::sort(members.begin(), members.end());
    if (std::adjacent_find(members.begin(), members.end()) != members.end())
        throw std::invalid_argument("ensemble members must be distinct");
    members_ = std::move(members);
}

Ensemble::Ensemble(int num_sites, std::vector<LhvAssignment> members, std::vector<Rational> weights)
    : num_sites_(num_sites) {
    if (weights.size() != members.size()) throw std::invalid_argument("one weight per member required");
    for (const auto &w : weights)
        if (w < Rational(0) || w > Rational(1)) throw std::invalid_argument("weights must lie in [0, 1]");
    std::vector<std::size_t> order(members.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto i, auto j) { return members[i] < members[j]; });
    std::vector<LhvAssignment> sorted_members;
    std::vector<Rational> sorted_weights;
    for (auto i : order) {
        if (members[i].num_sites != num_sites)
            throw std::invalid_argument("ensemble member has the wrong number of sites");
        sorted_members.push_back(members[i]);
        sorted_weights.push_back(weights[i]);
    }
    if (std::adjacent_find(sorted_members.begin(), sorted_members.end()) != sorted_members.end())
        throw std::invalid_argument("ensemble members must be distinct");
    members_ = std::move(sorted_members);
    weights_ = std::move(sorted_weights);
}

bool Ensemble::contains(const LhvAssignment &a) const {
    return std::binary_search(members_.begin(), members_.end(), a);
}

std::vector<MeasurementSettings> one_z_rest_x_family(int n) {
    std::vector<MeasurementSettings> family;
    for (int k = 0; k < n; ++k) family.push_back(MeasurementSettings::one_z_rest_x(n, k));
    return family;
}

ForbiddenTable::ForbiddenTable(const Statevector &state, std::vector<MeasurementSettings> family)
    : num_sites_(state.num_qubits()), family_(std::move(family)) {
    if (!state.integer_form())
        throw std::invalid_argument("forbidden-outcome table needs a state with an exact integer form");
    const std::uint64_t outcomes = std::uint64_t{1} << num_sites_;
    for (const auto &settings : family_) {
        if (settings.size() != num_sites_) throw std::invalid_argument("settings size does not match the state");
        x_masks_.push_back(settings.x_mask());
        std::vector<char> table(outcomes, 0);
        const auto zeros = kernels::parallel::filter_indices(outcomes, [&](std::uint64_t code) {
            const auto verdict = exact_zero_test(state, settings, Outcome::from_code(settings, code));
            return verdict.exact && verdict.is_zero;
        });
        for (auto code : zeros) table[code] = 1;
        forbidden_.push_back(std::move(table));
    }
}

bool ForbiddenTable::is_forbidden(std::size_t settings_index, std::uint64_t code) const {
    return forbidden_.at(settings_index).at(code) != 0;
}

bool ForbiddenTable::forbids(const LhvAssignment &a) const {
    for (std::size_t s = 0; s < family_.size(); ++s)
        if (forbidden_[s][a.reading_code(x_masks_[s])]) return true;
    return false;
}

std::size_t ForbiddenTable::forbidden_count(std::size_t settings_index) const {
    const auto &t = forbidden_.at(settings_index);
    return static_cast<std::size_t>(std::count(t.begin(), t.end(), 1));
}

Ensemble enumerate_all(int n) {
    check_sites(n);
    const std::uint64_t per_side = std::uint64_t{1} << n;
    std::vector<LhvAssignment> members(per_side * per_side);
    const auto total = static_cast<std::int64_t>(members.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < total; ++i) {
        const auto idx = static_cast<std::uint64_t>(i);
        members[idx] = LhvAssignment{n, static_cast<std::uint32_t>(idx >> n), static_cast<std::uint32_t>(idx & (per_side - 1))};
    }
    return Ensemble(n, std::move(members));
}

Ensemble rule_single_excitation(const Ensemble &e) {
    return filter(e, [](const LhvAssignment &a) { return std::popcount(a.z_bits) == 1; });
}

Ensemble rule_forbidden_patterns(const Ensemble &e, int n) {
    check_sites(n);
    if (e.num_sites() != n) throw std::invalid_argument("ensemble size does not match n");
    const ForbiddenTable table(w_state(n), one_z_rest_x_family(n));
    return filter(e, [&](const LhvAssignment &a) { return !table.forbids(a); });
}

Ensemble single_excitation_survivors(int n) {
    check_sites(n);
    std::vector<LhvAssignment> stage;
    const std::uint32_t per_side = 1u << n;
    for (int site = 0; site < n; ++site)
        for (std::uint32_t x = 0; x < per_side; ++x)
            stage.push_back(LhvAssignment{n, static_cast<std::uint32_t>(site_mask(n, site)), x});
    return rule_forbidden_patterns(Ensemble(n, std::move(stage)), n);
}

WeightAccounting quantum_weight_accounting(const Ensemble &survivors) {
    if (survivors.empty()) return WeightAccounting{survivors, Rational(0)};
    const int n = survivors.num_sites();
    check_sites(n);
    const ForbiddenTable table(w_state(n), one_z_rest_x_family(n));
    const auto state = w_state(n);
    std::vector<Rational> weights;
    Rational total(0);
    for (const auto &a : survivors.members()) {
        if (std::popcount(a.z_bits) != 1 || table.forbids(a))
            throw std::invalid_argument(fmt::format("no quantum weight for non-survivor {}", a.str()));
        const int site = n - 1 - std::countr_zero(a.z_bits);
        const auto settings = MeasurementSettings::one_z_rest_x(n, site);
        const auto exact = exact_amplitude(state, settings, a.reading(settings));
        weights.push_back(exact->probability());
        total += weights.back();
    }
    return WeightAccounting{Ensemble(n, survivors.members(), std::move(weights)), total};
}

Rational lhv_outcome_probability(const Ensemble &e, const MeasurementSettings &settings, const Outcome &outcome) {
    check_compatible(settings, outcome);
    if (settings.size() != e.num_sites())
        throw std::invalid_argument("settings size does not match the ensemble");
    if (e.empty()) return Rational(0);
    const std::uint64_t x_mask = settings.x_mask();
    const std::uint64_t code = outcome.code();
    const auto &members = e.members();
    if (!e.weights()) {
        std::int64_t hits = 0;
        for (const auto &a : members)
            if (a.reading_code(x_mask) == code) ++hits;
        return Rational(hits, static_cast<std::int64_t>(members.size()));
    }
    Rational hit(0), total(0);
    for (std::size_t i = 0; i < members.size(); ++i) {
        total += (*e.weights())[i];
        if (members[i].reading_code(x_mask) == code) hit += (*e.weights())[i];
    }
    if (total == Rational(0)) return Rational(0);
    return hit / total;
}

}  // namespace wrealism::lhv
