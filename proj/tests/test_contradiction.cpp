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

#include <gtest/gtest.h>

#include "wrealism/contradiction.hpp"

namespace wrealism::contradiction {
namespace {

bool has_witness(const std::vector<Witness> &ws, std::string_view settings, std::string_view outcome) {
    return std::any_of(ws.begin(), ws.end(), [&](const Witness &w) {
        return w.settings.str() == settings && w.outcome.str() == outcome;
    });
}

const CompletionClass &find_class(const ContradictionReport &r, std::string_view measured) {
    const auto it = std::find_if(r.classes.begin(), r.classes.end(),
                                 [&](const CompletionClass &c) { return c.measured.str() == measured; });
    if (it == r.classes.end()) throw std::runtime_error("class not found");
    return *it;
}

TEST(Completion, ChoicePlusAndMinus) {
    const auto plus = counterfactual_completion(3, Result::Plus);
    const auto &cp = find_class(plus, "1+-");
    EXPECT_TRUE(has_witness(cp.witnesses, "XZX", "+0-"));
    EXPECT_EQ(cp.quantum_probability, Rational(1, 12));
    for (const auto &w : cp.witnesses) EXPECT_EQ(w.quantum_probability, Rational(0));

    const auto minus = counterfactual_completion(3, Result::Minus);
    EXPECT_TRUE(has_witness(find_class(minus, "1+-").witnesses, "XXZ", "-+0"));
}

TEST(Completion, InconsistencyFractionIsOneSixth) {
    for (auto choice : {Result::Plus, Result::Minus}) {
        const auto r = counterfactual_completion(3, choice);
        EXPECT_EQ(r.inconsistency_fraction, Rational(1, 6));
        EXPECT_EQ(r.inconsistency_fraction_permutation_average, Rational(1, 6));
        EXPECT_EQ(r.verdict, Verdict::ContradictionFound);
        int refuted = 0;
        for (const auto &c : r.classes) refuted += c.refuted_under_all_choices;
        EXPECT_EQ(refuted, 2);
    }
    EXPECT_THROW((void)counterfactual_completion(3, Result::Zero), std::invalid_argument);
}

TEST(ForbiddenWitnesses, WOddHasWitnesses) {
    const auto r = forbidden_witnesses(Family::W, 3);
    EXPECT_EQ(r.verdict, Verdict::ContradictionFound);
    EXPECT_TRUE(has_witness(r.witnesses, "XZX", "+0-"));
    for (const auto &w : r.witnesses) {
        EXPECT_EQ(w.quantum_probability, Rational(0));
        EXPECT_GT(w.lhv_probability, Rational(0));
    }
    const auto r5 = forbidden_witnesses(Family::W, 5);
    EXPECT_TRUE(has_witness(r5.witnesses, "XZXXX", "+0-+-"));
}

TEST(ForbiddenWitnesses, GhzAndBellHaveNone) {
    const auto g = forbidden_witnesses(Family::GHZ, 3);
    EXPECT_EQ(g.verdict, Verdict::NoContradiction);
    EXPECT_TRUE(g.witnesses.empty());
    const auto ghz = ghz_state(3);
    const auto s = MeasurementSettings::one_z_rest_x(3, 0);
    for (std::uint64_t c = 0; c < 8; ++c)
        EXPECT_NEAR(probability(ghz, s, Outcome::from_code(s, c)), 0.125, 1e-15);

    const auto b = forbidden_witnesses(Family::Bell, 2);
    EXPECT_EQ(b.verdict, Verdict::NoContradiction);
    EXPECT_THROW((void)forbidden_witnesses(Family::Bell, 3), std::invalid_argument);
    EXPECT_THROW((void)forbidden_witnesses(Family::W, kMaxScanSites + 1), std::invalid_argument);
}

TEST(ForbiddenWitnesses, EvenWIsFlagged) {
    const auto r = forbidden_witnesses(Family::W, 4);
    EXPECT_TRUE(r.witnesses.empty());
    EXPECT_TRUE(std::any_of(r.notes.begin(), r.notes.end(),
                            [](const std::string &n) { return n.find("odd") != std::string::npos; }));
}

TEST(Trace, Examples) {
    const auto pm = interference_trace({Result::Plus, Result::Minus});
    EXPECT_TRUE(pm.zero_component_cancels);
    EXPECT_NEAR(pm.amplitude_zero, 0.0, 1e-15);
    const double unit = 1.0 / (2.0 * std::sqrt(3.0));
    int zero_terms = 0;
    double zero_sum = 0.0;
    for (const auto &t : pm.terms)
        if (t.site0_label == Result::Zero) {
            ++zero_terms;
            zero_sum += t.contribution;
            EXPECT_NEAR(std::abs(t.contribution), unit, 1e-15);
        }
    EXPECT_EQ(zero_terms, 2);
    EXPECT_NEAR(zero_sum, 0.0, 1e-15);
    EXPECT_NEAR(pm.conditional_p_zero, 0.0, 1e-15);

    const auto pp = interference_trace({Result::Plus, Result::Plus});
    EXPECT_FALSE(pp.zero_component_cancels);
    EXPECT_NEAR(pp.amplitude_zero, 2 * unit, 1e-15);

    const auto mm = interference_trace({Result::Minus, Result::Minus});
    EXPECT_FALSE(mm.zero_component_cancels);
    EXPECT_NEAR(mm.amplitude_one, unit, 1e-15);
}

TEST(AllEqualX, ClosedFormAndBruteForce) {
    EXPECT_EQ(all_equal_x_probability(1), Rational(1));
    EXPECT_EQ(all_equal_x_probability(3), Rational(3, 4));
    EXPECT_EQ(all_equal_x_probability(11), Rational(11, 1024));
    for (int n = 1; n <= 12; ++n) EXPECT_EQ(all_equal_x_probability_brute_force(n), all_equal_x_probability(n)) << n;
    EXPECT_EQ(lhv_all_equal_x_probability(3), Rational(1));
}

TEST(Scan, Rows) {
    const auto rows = quantum_wins_scan(14);
    ASSERT_EQ(rows.size(), 14u);
    EXPECT_EQ(rows[2].closed_form, Rational(3, 4));
    EXPECT_TRUE(rows[11].brute_force.has_value());
    EXPECT_FALSE(rows[12].brute_force.has_value());
    for (const auto &r : rows)
        if (r.n >= 9) EXPECT_LT(to_double(r.closed_form), 0.05);
    EXPECT_THROW((void)quantum_wins_scan(kMaxClosedFormScan + 1), std::invalid_argument);
}

TEST(Family, Parsing) {
    EXPECT_EQ(parse_family("w"), Family::W);
    EXPECT_EQ(parse_family("ghz"), Family::GHZ);
    EXPECT_EQ(parse_family("bell"), Family::Bell);
    EXPECT_THROW((void)parse_family("cluster"), std::invalid_argument);
}

}  // namespace
}  // namespace wrealism::contradiction
