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

#include "wrealism/report_io.hpp"

#include <fmt/core.h>

namespace wrealism::io {

std::string format_real(double x) {
    if (x == 0.0) x = 0.0;  // no "-0"
    return fmt::format("{:#.17g}", x);
}

Json rational_json(const Rational &r) {
    Json j;
    j["num"] = r.numerator();
    j["den"] = r.denominator();
    j["decimal"] = to_double(r);
    return j;
}

Json to_json(const contradiction::Witness &w) {
    Json j;
    j["settings"] = w.settings.str();
    j["outcome"] = w.outcome.str();
    j["lhv_probability"] = rational_json(w.lhv_probability);
    j["quantum_probability"] = rational_json(w.quantum_probability);
    return j;
}

Json to_json(const contradiction::ContradictionReport &report) {
    Json j;
    j["schema"] = "wrealism.contradiction/1";
    j["family"] = std::string(contradiction::to_string(report.family));
    j["n"] = report.n;
    j["verdict"] = std::string(contradiction::to_string(report.verdict));
    if (report.x_choice) j["x_choice"] = std::string(1, to_char(*report.x_choice));
    j["inconsistency_fraction"] = rational_json(report.inconsistency_fraction);
    j["inconsistency_fraction_permutation_average"] =
        rational_json(report.inconsistency_fraction_permutation_average);
    if (report.counts) {
        Json c;
        c["z_consistent"] = report.counts->z_consistent;
        c["filtered"] = report.counts->filtered;
        c["completed"] = report.counts->completed;
        j["ensemble_counts"] = c;
    }
    Json witnesses = Json::array();
    for (const auto &w : report.witnesses) witnesses.push_back(to_json(w));
    j["witnesses"] = witnesses;
    if (!report.classes.empty()) {
        Json classes = Json::array();
        for (const auto &cls : report.classes) {
            Json c;
            c["settings"] = cls.settings.str();
            c["measured"] = cls.measured.str();
            c["quantum_probability"] = rational_json(cls.quantum_probability);
            c["completed"] = cls.completed.str();
            Json cw = Json::array();
            for (const auto &w : cls.witnesses) cw.push_back(to_json(w));
            c["witnesses"] = cw;
            c["refuted_under_choice"] = cls.refuted_under_choice;
            c["refuted_under_all_choices"] = cls.refuted_under_all_choices;
            classes.push_back(c);
        }
        j["classes"] = classes;
    }
    j["notes"] = report.notes;
    return j;
}

Json to_json(const contradiction::InterferenceTrace &trace) {
    Json j;
    j["schema"] = "wrealism.trace/1";
    j["x_results"] = std::string{to_char(trace.x_results[0]), to_char(trace.x_results[1])};
    Json terms = Json::array();
    for (const auto &t : trace.terms) {
        Json term;
        term["ket"] = t.ket;
        term["site0"] = std::string(1, to_char(t.site0_label));
        term["sign"] = t.sign;
        term["contribution"] = t.contribution;
        terms.push_back(term);
    }
    j["terms"] = terms;
    j["amplitude_one"] = trace.amplitude_one;
    j["amplitude_zero"] = trace.amplitude_zero;
    j["conditional_p_zero"] = trace.conditional_p_zero;
    j["zero_component_cancels"] = trace.zero_component_cancels;
    return j;
}

Json to_json(const bellmermin::SampleStats &stats, const bellmermin::Observable &a,
             const bellmermin::PreparedDirection &n) {
    Json j;
    j["schema"] = "wrealism.bellmermin/1";
    j["observable"] = {{"a0", a.a0}, {"a1", {a.a1.x(), a.a1.y(), a.a1.z()}}};
    j["direction"] = {n.vec().x(), n.vec().y(), n.vec().z()};
    j["samples"] = stats.samples;
    j["seed"] = stats.seed;
    j["rng"] = fmt::format("mt19937_64/splitmix64-streams v{}", rng::kStreamVersion);
    j["mean"] = stats.mean;
    j["stderr"] = stats.standard_error;
    j["closed_form"] = bellmermin::closed_form_mean(a, n);
    j["boundary_hits"] = stats.boundary_hits;
    return j;
}

Json curve_json(const preparation::PreparationConfig &config, const std::vector<preparation::CurvePoint> &curve) {
    Json j;
    j["schema"] = "wrealism.preparation/1";
    j["n"] = config.n;
    j["coupling"] = config.coupling;
    j["tau_pi_half"] = preparation::tau_pi_half(config);
    Json points = Json::array();
    for (const auto &p : curve) points.push_back({{"time", p.time}, {"fidelity", p.fidelity}});
    j["points"] = points;
    return j;
}

Json scan_json(const std::vector<contradiction::ScanRow> &rows) {
    Json j;
    j["schema"] = "wrealism.scan/1";
    Json out = Json::array();
    for (const auto &r : rows) {
        Json row;
        row["n"] = r.n;
        row["closed_form"] = rational_json(r.closed_form);
        row["brute_force"] = r.brute_force ? rational_json(*r.brute_force) : Json(nullptr);
        row["lhv"] = r.lhv ? rational_json(*r.lhv) : Json(nullptr);
        out.push_back(row);
    }
    j["rows"] = out;
    return j;
}

}  // namespace wrealism::io
