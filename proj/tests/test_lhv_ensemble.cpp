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


#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "wrealism/lhv_ensemble.hpp"

namespace wrealism::lhv {
namespace {

LhvAssignment a(std::string_view text) { return LhvAssignment::parse(text); }

Rational p(const Ensemble &e, std::string_view settings, std::string_view outcome) {
    const auto s = MeasurementSettings::parse(settings);
    return lhv_outcome_probability(e, s, Outcome::parse(outcome, s));
}

TEST(LhvAssignment, ParseAndReadings) {
    const auto x = a("1+|0-|0+");
    EXPECT_EQ(x.num_sites, 3);
    EXPECT_EQ(x.z(0), Result::One);
    EXPECT_EQ(x.x(1), Result::Minus);
    EXPECT_EQ(x.str(), "1+|0-|0+");
    EXPECT_EQ(x.reading(MeasurementSettings::parse("ZXX")).str(), "1-+");
    EXPECT_EQ(x.reading(MeasurementSettings::parse("XZZ")).str(), "+00");
    EXPECT_THROW((void)a("1+|0"), ParseError);
    EXPECT_THROW((void)a("1+|2-"), ParseError);
}

TEST(Enumeration, Counts) {
    EXPECT_EQ(enumerate_all(1).size(), 4u);
    EXPECT_EQ(enumerate_all(2).size(), 16u);
    EXPECT_EQ(enumerate_all(3).size(), 64u);
    EXPECT_EQ(rule_single_excitation(enumerate_all(2)).size(), 8u);
    EXPECT_EQ(rule_single_excitation(enumerate_all(3)).size(), 24u);
    EXPECT_THROW((void)enumerate_all(kMaxEnumerationSites + 1), std::invalid_argument);
}

TEST(Enumeration, SingleExcitationRule) {
    const auto e = rule_single_excitation(enumerate_all(3));
    EXPECT_FALSE(e.contains(a("1+|1+|0-")));
    EXPECT_TRUE(e.contains(a("1+|0+|0-")));
}

TEST(Enumeration, ForbiddenPatternRuleAtThreeSites) {
    const auto e = rule_forbidden_patterns(rule_single_excitation(enumerate_all(3)), 3);
    ASSERT_EQ(e.size(), 6u);
    std::set<std::string> got;
    for (const auto &m : e.members()) got.insert(m.str());
    const std::set<std::string> want{"1+|0+|0+", "0+|1+|0+", "0+|0+|1+", "1-|0-|0-", "0-|1-|0-", "0-|0-|1-"};
    EXPECT_EQ(got, want);
    EXPECT_FALSE(e.contains(a("1+|0+|0-")));
    EXPECT_EQ(single_excitation_survivors(3).members(), e.members());
}

TEST(Enumeration, EvenSitesRemoveNothingBeyondRuleOne) {
    for (int n : {2, 4}) {
        const auto one = rule_single_excitation(enumerate_all(n));
        EXPECT_EQ(rule_forbidden_patterns(one, n).size(), one.size()) << n;
    }
}

TEST(Enumeration, PairReproducesAllowedOutcomes) {
    // Two sites: the surviving ensemble shows every quantum-allowed reading.
    const auto e = rule_forbidden_patterns(rule_single_excitation(enumerate_all(2)), 2);
    const auto w2 = w_state(2);
    for (const auto *settings : {"ZX", "XZ"}) {
        const auto s = MeasurementSettings::parse(settings);
        for (std::uint64_t c = 0; c < 4; ++c) {
            const auto o = Outcome::from_code(s, c);
            if (probability(w2, s, o) > 1e-12) EXPECT_GT(lhv_outcome_probability(e, s, o), Rational(0)) << o.str();
        }
    }
}

TEST(ForbiddenTable, W3OneZFamily) {
    const ForbiddenTable t(w_state(3), one_z_rest_x_family(3));
    ASSERT_EQ(t.family().size(), 3u);
    for (std::size_t k = 0; k < 3; ++k) EXPECT_EQ(t.forbidden_count(k), 2u);
    EXPECT_TRUE(t.forbids(a("1+|0+|0-")));
    EXPECT_FALSE(t.forbids(a("1+|0+|0+")));
    EXPECT_THROW((ForbiddenTable(Statevector::normalized(1, {Complex{1, 0}, Complex{1, 0}}),
                                 one_z_rest_x_family(1))),
                 std::invalid_argument);
}

TEST(WeightAccounting, HalfInsteadOfOne) {
    const auto acc = quantum_weight_accounting(single_excitation_survivors(3));
    ASSERT_TRUE(acc.weighted.weights().has_value());
    for (const auto &w : *acc.weighted.weights()) EXPECT_EQ(w, Rational(1, 12));
    EXPECT_EQ(acc.total, Rational(1, 2));

    const Ensemble empty(3, {});
    EXPECT_EQ(quantum_weight_accounting(empty).total, Rational(0));
    EXPECT_THROW((void)quantum_weight_accounting(rule_single_excitation(enumerate_all(3))), std::invalid_argument);
}

TEST(LhvOutcomeProbability, Examples) {
    const auto six = single_excitation_survivors(3);
    EXPECT_EQ(p(six, "XXX", "+++"), Rational(1, 2));
    EXPECT_EQ(p(six, "ZXX", "1+-"), Rational(0));
    const auto twenty_four = rule_single_excitation(enumerate_all(3));
    EXPECT_EQ(p(twenty_four, "ZZZ", "100"), Rational(1, 3));
    // Weighted ensembles normalize by the total weight.
    const auto acc = quantum_weight_accounting(six);
    EXPECT_EQ(p(acc.weighted, "ZXX", "1++"), Rational(1, 6));
}

TEST(Ensemble, Invariants) {
    EXPECT_THROW((Ensemble(3, {a("1+|0+|0+"), a("1+|0+|0+")})), std::invalid_argument);
    EXPECT_THROW((Ensemble(3, {a("1+|0+|0+")}, {Rational(3, 2)})), std::invalid_argument);
    EXPECT_THROW((Ensemble(2, {a("1+|0+|0+")})), std::invalid_argument);
}

}  // namespace
}  // namespace wrealism::lhv
