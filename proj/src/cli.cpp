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

#include "wrealism/cli.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/core.h>

#include "wrealism/bellmermin.hpp"
#include "wrealism/contradiction.hpp"
#include "wrealism/lhv_ensemble.hpp"
#include "wrealism/preparation.hpp"
#include "wrealism/report_io.hpp"
#include "wrealism/statevector.hpp"

namespace wrealism::cli {

namespace {

using io::format_real;
using io::Json;

enum class Format { Json, Csv, Text };

struct ExpectationViolated : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Format parse_format(const std::string &s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    if (s == "text") return Format::Text;
    throw std::invalid_argument(fmt::format("unknown format '{}' (expected json, csv or text)", s));
}

std::vector<double> parse_reals(const std::string &text, std::size_t expected, const std::string &what) {
    std::vector<double> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = std::min(text.find(',', start), text.size());
        const std::string_view field(text.data() + start, comma - start);
        double v = 0.0;
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), v);
        if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
            throw std::invalid_argument(
                fmt::format("{}: cannot parse '{}' as a number (component {})", what, field, out.size()));
        out.push_back(v);
        start = comma + 1;
    }
    if (out.size() != expected)
        throw std::invalid_argument(fmt::format("{}: expected {} comma-separated numbers, got {}", what, expected,
                                                out.size()));
    return out;
}

std::string rational_text(const Rational &r) { return fmt::format("{} ({})", to_string(r), format_real(to_double(r))); }

void write_json(std::ostream &os, const Json &j) { os << j.dump(2) << '\n'; }

// --- amplitude --------------------------------------------------------------

struct AmplitudeArgs {
    int n = 3;
    std::string settings;
    std::string outcome;
    std::string family = "w";
    std::string format = "text";
};

void cmd_amplitude(const AmplitudeArgs &a, std::ostream &os) {
    const auto family = contradiction::parse_family(a.family);
    const auto settings = MeasurementSettings::parse(a.settings);
    if (settings.size() != a.n)
        throw ParseError(fmt::format("settings '{}' have {} sites but --n is {}", a.settings, settings.size(), a.n),
                         std::string::npos);
    const auto outcome = Outcome::parse(a.outcome, settings);
    const auto state = family == contradiction::Family::W ? w_state(a.n) : contradiction::family_state(family, a.n);
    const Complex amp = amplitude(state, settings, outcome);
    const double prob = std::norm(amp);
    const auto verdict = exact_zero_test(state, settings, outcome);
    const auto exact = exact_amplitude(state, settings, outcome);

    switch (parse_format(a.format)) {
        case Format::Json: {
            Json j;
            j["schema"] = "wrealism.amplitude/1";
            j["family"] = a.family;
            j["n"] = a.n;
            j["settings"] = settings.str();
            j["outcome"] = outcome.str();
            j["amplitude"] = {{"re", amp.real()}, {"im", amp.imag()}};
            j["probability"] = prob;
            j["exact_zero"] = verdict.is_zero;
            j["exact"] = verdict.exact;
            j["exact_probability"] = exact ? io::rational_json(exact->probability()) : Json(nullptr);
            write_json(os, j);
            break;
        }
        case Format::Csv:
            os << "n,settings,outcome,amplitude_re,amplitude_im,probability,exact_zero,exact,probability_num,"
                  "probability_den\n";
            os << a.n << ',' << settings.str() << ',' << outcome.str() << ',' << format_real(amp.real()) << ','
               << format_real(amp.imag()) << ',' << format_real(prob) << ',' << (verdict.is_zero ? "true" : "false")
               << ',' << (verdict.exact ? "true" : "false") << ',';
            if (exact) os << exact->probability().numerator() << ',' << exact->probability().denominator();
            else os << ',';
            os << '\n';
            break;
        case Format::Text:
            os << "state        " << a.family << '_' << a.n << '\n';
            os << "settings     " << settings.str() << '\n';
            os << "outcome      " << outcome.str() << '\n';
            os << "amplitude    " << format_real(amp.real()) << " + " << format_real(amp.imag()) << "i\n";
            os << "probability  " << format_real(prob);
            if (exact) os << " = " << to_string(exact->probability());
            os << '\n';
            os << "exact-zero=" << (verdict.is_zero ? "true" : "false")
               << (verdict.exact ? "" : " (floating tolerance, no exact form)") << '\n';
            break;
    }
}

// --- contradiction ----------------------------------------------------------

struct ContradictionArgs {
    int n = 3;
    std::string family = "w";
    std::string expect;
    bool completion = false;
    std::string format = "json";
};

void cmd_contradiction(const ContradictionArgs &a, std::ostream &os) {
    const auto family = contradiction::parse_family(a.family);
    const auto report = contradiction::forbidden_witnesses(family, a.n);
    const bool with_completion = family == contradiction::Family::W && a.n >= 2 &&
                                 (a.completion || a.n == 3);
    switch (parse_format(a.format)) {
        case Format::Json: {
            Json j = io::to_json(report);
            if (with_completion) {
                Json c;
                c["+"] = io::to_json(contradiction::counterfactual_completion(a.n, Result::Plus));
                c["-"] = io::to_json(contradiction::counterfactual_completion(a.n, Result::Minus));
                j["counterfactual_completion"] = c;
            }
            write_json(os, j);
            break;
        }
        case Format::Csv:
            os << "settings,outcome,lhv_num,lhv_den,lhv_probability,quantum_num,quantum_den,quantum_probability\n";
            for (const auto &w : report.witnesses)
                os << w.settings.str() << ',' << w.outcome.str() << ',' << w.lhv_probability.numerator() << ','
                   << w.lhv_probability.denominator() << ',' << format_real(to_double(w.lhv_probability)) << ','
                   << w.quantum_probability.numerator() << ',' << w.quantum_probability.denominator() << ','
                   << format_real(to_double(w.quantum_probability)) << '\n';
            break;
        case Format::Text:
            os << "family                 " << contradiction::to_string(family) << '\n';
            os << "n                      " << a.n << '\n';
            os << "verdict                " << contradiction::to_string(report.verdict) << '\n';
            os << "inconsistency fraction " << rational_text(report.inconsistency_fraction) << '\n';
            if (report.counts)
                os << "ensemble               " << report.counts->z_consistent << " z-consistent, "
                   << report.counts->filtered << " filtered, " << report.counts->completed << " completed\n";
            os << "witnesses              " << report.witnesses.size() << '\n';
            for (const auto &w : report.witnesses)
                os << "  " << w.settings.str() << ' ' << w.outcome.str() << "  lhv " << to_string(w.lhv_probability)
                   << "  quantum " << to_string(w.quantum_probability) << '\n';
            for (const auto &note : report.notes) os << "note: " << note << '\n';
            break;
    }
    if (!a.expect.empty()) {
        const bool found = report.verdict == contradiction::Verdict::ContradictionFound;
        const bool want = a.expect == "contradiction";
        if (found != want)
            throw ExpectationViolated(fmt::format("expected {} for {}_{}, got {}",
                                                  want ? "a contradiction" : "no contradiction", a.family, a.n,
                                                  contradiction::to_string(report.verdict)));
    }
}

// --- enumerate --------------------------------------------------------------

struct EnumerateArgs {
    int n = 3;
    std::string format = "json";
};

void cmd_enumerate(const EnumerateArgs &a, std::ostream &os) {
    if (a.n < 1 || a.n > lhv::kMaxEnumerationSites)
        throw std::invalid_argument(
            fmt::format("n = {} outside the exhaustive enumeration limit [1, {}]", a.n, lhv::kMaxEnumerationSites));
    const std::uint64_t all = std::uint64_t{1} << (2 * a.n);
    const std::uint64_t single = static_cast<std::uint64_t>(a.n) << a.n;
    const auto survivors = lhv::single_excitation_survivors(a.n);
    std::optional<lhv::WeightAccounting> accounting;
    if (a.n == 3) accounting = lhv::quantum_weight_accounting(survivors);
    std::vector<std::string> notes;
    if (a.n % 2 == 0)
        notes.push_back("even n: the forbidden-pattern rule removes nothing; the argument targets odd n");

    switch (parse_format(a.format)) {
        case Format::Json: {
            Json j;
            j["schema"] = "wrealism.ensemble/1";
            j["n"] = a.n;
            j["stages"] = {{"all", all}, {"single_excitation", single}, {"forbidden_filtered", survivors.size()}};
            Json members = Json::array();
            for (const auto &m : survivors.members()) members.push_back(m.str());
            j["survivors"] = members;
            if (accounting) {
                Json w = Json::array();
                for (const auto &x : *accounting->weighted.weights()) w.push_back(io::rational_json(x));
                j["weights"] = w;
                j["weight_total"] = io::rational_json(accounting->total);
            }
            j["notes"] = notes;
            write_json(os, j);
            break;
        }
        case Format::Csv: {
            os << "assignment,weight_num,weight_den\n";
            for (std::size_t i = 0; i < survivors.size(); ++i) {
                os << survivors.members()[i].str() << ',';
                if (accounting) {
                    const auto &w = (*accounting->weighted.weights())[i];
                    os << w.numerator() << ',' << w.denominator();
                } else {
                    os << ',';
                }
                os << '\n';
            }
            break;
        }
        case Format::Text:
            os << "stages  " << all << " -> " << single << " -> " << survivors.size() << '\n';
            for (const auto &m : survivors.members()) os << "  " << m.str() << '\n';
            if (accounting) os << "weight total " << rational_text(accounting->total) << '\n';
            for (const auto &note : notes) os << "note: " << note << '\n';
            break;
    }
}

// --- prepare ----------------------------------------------------------------

struct PrepareArgs {
    int n = 3;
    double coupling = 1.0;
    std::optional<double> tmax;
    int points = 101;
    std::string format = "csv";
};

void cmd_prepare(const PrepareArgs &a, std::ostream &os) {
    preparation::PreparationConfig config{a.n, a.coupling, 0.0, a.points};
    config.duration = a.tmax ? *a.tmax : 2.0 * preparation::tau_pi_half(config);
    const auto curve = preparation::fidelity_curve(config);
    switch (parse_format(a.format)) {
        case Format::Json:
            write_json(os, io::curve_json(config, curve));
            break;
        case Format::Csv:
            os << "time,fidelity\n";
            for (const auto &p : curve) os << format_real(p.time) << ',' << format_real(p.fidelity) << '\n';
            break;
        case Format::Text:
            os << "tau_pi_half " << format_real(preparation::tau_pi_half(config)) << '\n';
            for (const auto &p : curve) os << format_real(p.time) << "  " << format_real(p.fidelity) << '\n';
            break;
    }
}

// --- bellmermin -------------------------------------------------------------

struct BellMerminArgs {
    std::string observable;
    std::string direction;
    std::uint64_t samples = 1000000;
    std::optional<std::uint64_t> seed;
    std::string format = "json";
};

void cmd_bellmermin(const BellMerminArgs &a, std::ostream &os) {
    if (!a.seed) throw std::invalid_argument("bellmermin is stochastic: --seed is required");
    const auto obs = parse_reals(a.observable, 4, "--observable a0,ax,ay,az");
    const auto dir = parse_reals(a.direction, 3, "--direction nx,ny,nz");
    const bellmermin::Observable observable{obs[0], bellmermin::Vec3(obs[1], obs[2], obs[3])};
    const auto n = bellmermin::PreparedDirection::normalized(bellmermin::Vec3(dir[0], dir[1], dir[2]));
    const auto stats = bellmermin::sample_mean(observable, n, a.samples, *a.seed);
    switch (parse_format(a.format)) {
        case Format::Json:
            write_json(os, io::to_json(stats, observable, n));
            break;
        case Format::Csv:
            os << "samples,seed,mean,stderr,closed_form,boundary_hits\n";
            os << stats.samples << ',' << stats.seed << ',' << format_real(stats.mean) << ','
               << format_real(stats.standard_error) << ',' << format_real(bellmermin::closed_form_mean(observable, n))
               << ',' << stats.boundary_hits << '\n';
            break;
        case Format::Text:
            os << "mean         " << format_real(stats.mean) << '\n';
            os << "stderr       " << format_real(stats.standard_error) << '\n';
            os << "closed form  " << format_real(bellmermin::closed_form_mean(observable, n)) << '\n';
            os << "samples      " << stats.samples << " (seed " << stats.seed << ")\n";
            break;
    }
}

// --- scan -------------------------------------------------------------------

struct ScanArgs {
    int max_n = 12;
    std::string format = "csv";
};

void cmd_scan(const ScanArgs &a, std::ostream &os) {
    const auto rows = contradiction::quantum_wins_scan(a.max_n);
    switch (parse_format(a.format)) {
        case Format::Json:
            write_json(os, io::scan_json(rows));
            break;
        case Format::Csv:
        case Format::Text:
            os << "n,quantum_all_equal_x,closed_form_num,closed_form_den,brute_force,lhv_all_equal_x,lhv_num,lhv_den\n";
            for (const auto &r : rows) {
                os << r.n << ',' << format_real(to_double(r.closed_form)) << ',' << r.closed_form.numerator() << ','
                   << r.closed_form.denominator() << ',';
                if (r.brute_force) os << format_real(to_double(*r.brute_force));
                os << ',';
                if (r.lhv) os << format_real(to_double(*r.lhv)) << ',' << r.lhv->numerator() << ',' << r.lhv->denominator();
                else os << ",,";
                os << '\n';
            }
            break;
    }
}

// --- trace ------------------------------------------------------------------

struct TraceArgs {
    std::string x_results = "+-";
    std::string format = "json";
};

void cmd_trace(const TraceArgs &a, std::ostream &os) {
    const auto parsed = Outcome::parse(a.x_results, MeasurementSettings::all(2, Basis::X));
    const auto trace = contradiction::interference_trace({parsed.results[0], parsed.results[1]});
    switch (parse_format(a.format)) {
        case Format::Json:
            write_json(os, io::to_json(trace));
            break;
        case Format::Csv:
            os << "ket,site0,sign,contribution\n";
            for (const auto &t : trace.terms)
                os << t.ket << ',' << to_char(t.site0_label) << ',' << t.sign << ',' << format_real(t.contribution)
                   << '\n';
            break;
        case Format::Text:
            for (const auto &t : trace.terms)
                os << '|' << t.ket << ">  -> site0 |" << to_char(t.site0_label) << ">  " << format_real(t.contribution)
                   << '\n';
            os << "amplitude |1>  " << format_real(trace.amplitude_one) << '\n';
            os << "amplitude |0>  " << format_real(trace.amplitude_zero)
               << (trace.zero_component_cancels ? "  (cancels)" : "") << '\n';
            break;
    }
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local realism versus W states: exact predictions, LHV ensembles and contradiction witnesses", "wrealism"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string output_path;
    app.add_option("-o,--output", output_path, "Write the result to this file instead of stdout");

    std::function<void(std::ostream &)> action;

    AmplitudeArgs amp;
    auto *amp_cmd = app.add_subcommand("amplitude", "Mixed-basis amplitude, probability and exact-zero verdict");
    amp_cmd->add_option("--n", amp.n, "Number of qubits")->required();
    amp_cmd->add_option("--settings", amp.settings, "Bases per site, e.g. ZXX")->required();
    amp_cmd->add_option("--outcome", amp.outcome, "Results per site, e.g. 1+-")->required();
    amp_cmd->add_option("--family", amp.family, "w, ghz or bell")->capture_default_str();
    amp_cmd->add_option("--format", amp.format, "text, json or csv")->capture_default_str();
    amp_cmd->callback([&] { action = [&](std::ostream &os) { cmd_amplitude(amp, os); }; });

    ContradictionArgs con;
    auto *con_cmd = app.add_subcommand("contradiction", "Exhaustive search for contradiction witnesses");
    con_cmd->add_option("--n", con.n, "Number of qubits")->required();
    con_cmd->add_option("--family", con.family, "w, ghz or bell")->capture_default_str();
    con_cmd->add_option("--expect", con.expect, "Exit 2 unless the verdict matches")
        ->check(CLI::IsMember({"contradiction", "none"}));
    con_cmd->add_flag("--completion", con.completion, "Include the counterfactual-completion chain (always on for W_3)");
    con_cmd->add_option("--format", con.format, "json, csv or text")->capture_default_str();
    con_cmd->callback([&] { action = [&](std::ostream &os) { cmd_contradiction(con, os); }; });

    EnumerateArgs en;
    auto *en_cmd = app.add_subcommand("enumerate", "LHV assignment pipeline with stage counts");
    en_cmd->add_option("--n", en.n, "Number of qubits")->required();
    en_cmd->add_option("--format", en.format, "json, csv or text")->capture_default_str();
    en_cmd->callback([&] { action = [&](std::ostream &os) { cmd_enumerate(en, os); }; });

    PrepareArgs prep;
    auto *prep_cmd = app.add_subcommand("prepare", "Fidelity to the W state during exchange-coupled preparation");
    prep_cmd->add_option("--n", prep.n, "Number of target qubits")->required();
    prep_cmd->add_option("--coupling", prep.coupling, "Coupling g")->capture_default_str();
    prep_cmd->add_option("--tmax", prep.tmax, "Curve end time (default: one Rabi period)");
    prep_cmd->add_option("--points", prep.points, "Number of samples")->capture_default_str();
    prep_cmd->add_option("--format", prep.format, "csv, json or text")->capture_default_str();
    prep_cmd->callback([&] { action = [&](std::ostream &os) { cmd_prepare(prep, os); }; });

    BellMerminArgs bm;
    auto *bm_cmd = app.add_subcommand("bellmermin", "Monte Carlo mean of the single-qubit hidden-variable model");
    bm_cmd->add_option("--observable", bm.observable, "a0,ax,ay,az")->required();
    bm_cmd->add_option("--direction", bm.direction, "nx,ny,nz (normalized on input)")->required();
    bm_cmd->add_option("--samples", bm.samples, "Number of hidden vectors")->capture_default_str();
    bm_cmd->add_option("--seed", bm.seed, "Master seed (required)");
    bm_cmd->add_option("--format", bm.format, "json, csv or text")->capture_default_str();
    bm_cmd->callback([&] { action = [&](std::ostream &os) { cmd_bellmermin(bm, os); }; });

    ScanArgs sc;
    auto *sc_cmd = app.add_subcommand("scan", "All-equal-X probabilities of W_n, quantum versus LHV");
    sc_cmd->add_option("--max-n", sc.max_n, "Largest n (<= 24)")->capture_default_str();
    sc_cmd->add_option("--format", sc.format, "csv or json")->capture_default_str();
    sc_cmd->callback([&] { action = [&](std::ostream &os) { cmd_scan(sc, os); }; });

    TraceArgs tr;
    auto *tr_cmd = app.add_subcommand("trace", "Per-term interference on site 0 of W_3 after X results on sites 1, 2");
    tr_cmd->add_option("--x", tr.x_results, "Two X results, e.g. +-")->capture_default_str();
    tr_cmd->add_option("--format", tr.format, "json, csv or text")->capture_default_str();
    tr_cmd->callback([&] { action = [&](std::ostream &os) { cmd_trace(tr, os); }; });

    try {
        std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    std::ostringstream buffer;
    try {
        action(buffer);
    } catch (const ExpectationViolated &e) {
        out << buffer.str();
        err << "error: " << e.what() << '\n';
        return kExpectationViolated;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }

    if (output_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(output_path, std::ios::binary | std::ios::trunc);
        if (!file) {
            err << "error: cannot open " << output_path << " for writing\n";
            return kUsageError;
        }
        file << buffer.str();
    }
    return kSuccess;
}

}  // namespace wrealism::cli
