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

#include "wrealism/basis.hpp"

#include <algorithm>

#include <fmt/core.h>

namespace wrealism {

char to_char(Basis b) { return b == Basis::Z ? 'Z' : 'X'; }

char to_char(Result r) {
    switch (r) {
        case Result::Zero:
            return '0';
        case Result::One:
            return '1';
        case Result::Plus:
            return '+';
        case Result::Minus:
            return '-';
    }
    return '?';
}

MeasurementSettings MeasurementSettings::parse(std::string_view text) {
    if (text.empty()) throw ParseError("settings string is empty", std::string::npos);
    MeasurementSettings s;
    s.bases.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case 'Z':
            case 'z':
                s.bases.push_back(Basis::Z);
                break;
            case 'X':
            case 'x':
                s.bases.push_back(Basis::X);
                break;
            default:
                throw ParseError(fmt::format("settings: unexpected character '{}' at position {} (expected Z or X)",
                                             text[i], i),
                                 i);
        }
    }
    return s;
}

MeasurementSettings MeasurementSettings::all(int n, Basis b) {
    return MeasurementSettings{std::vector<Basis>(static_cast<std::size_t>(n), b)};
}

MeasurementSettings MeasurementSettings::one_z_rest_x(int n, int z_site) {
    auto s = all(n, Basis::X);
    s.bases.at(static_cast<std::size_t>(z_site)) = Basis::Z;
    return s;
}

int MeasurementSettings::count(Basis b) const {
    return static_cast<int>(std::count(bases.begin(), bases.end(), b));
}

std::uint64_t MeasurementSettings::x_mask() const {
    std::uint64_t mask = 0;
    for (int i = 0; i < size(); ++i)
        if (bases[i] == Basis::X) mask |= site_mask(size(), i);
    return mask;
}

std::string MeasurementSettings::str() const {
    std::string out;
    for (auto b : bases) out.push_back(to_char(b));
    return out;
}

Outcome Outcome::parse(std::string_view text) {
    if (text.empty()) throw ParseError("outcome string is empty", std::string::npos);
    Outcome o;
    o.results.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        switch (text[i]) {
            case '0':
                o.results.push_back(Result::Zero);
                break;
            case '1':
                o.results.push_back(Result::One);
                break;
            case '+':
                o.results.push_back(Result::Plus);
                break;
            case '-':
                o.results.push_back(Result::Minus);
                break;
            default:
                throw ParseError(fmt::format("outcome: unexpected character '{}' at position {} (expected 0, 1, + or -)",
                                             text[i], i),
                                 i);
        }
    }
    return o;
}

Outcome Outcome::parse(std::string_view text, const MeasurementSettings &settings) {
    Outcome o = parse(text);
    if (o.size() != settings.size())
        throw ParseError(fmt::format("outcome has {} sites but settings have {}", o.size(), settings.size()),
                         std::string::npos);
    for (int i = 0; i < o.size(); ++i) {
        if (basis_of(o.results[i]) != settings.bases[i])
            throw ParseError(fmt::format("outcome: '{}' at position {} does not match basis {}", text[i], i,
                                         to_char(settings.bases[i])),
                             static_cast<std::size_t>(i));
    }
    return o;
}

Outcome Outcome::from_code(const MeasurementSettings &settings, std::uint64_t code) {
    const int n = settings.size();
    Outcome o;
    o.results.reserve(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        o.results.push_back(result_from_bit(settings.bases[i], (code >> site_shift(n, i)) & 1u));
    return o;
}

std::uint64_t Outcome::code() const {
    std::uint64_t c = 0;
    for (int i = 0; i < size(); ++i)
        if (result_bit(results[i])) c |= site_mask(size(), i);
    return c;
}

std::string Outcome::str() const {
    std::string out;
    for (auto r : results) out.push_back(to_char(r));
    return out;
}

void check_compatible(const MeasurementSettings &settings, const Outcome &outcome) {
    if (outcome.size() != settings.size())
        throw std::invalid_argument(
            fmt::format("outcome has {} sites but settings have {}", outcome.size(), settings.size()));
    for (int i = 0; i < outcome.size(); ++i)
        if (basis_of(outcome.results[i]) != settings.bases[i])
            throw std::invalid_argument(fmt::format("outcome site {} is '{}' but the basis is {}", i,
                                                    to_char(outcome.results[i]), to_char(settings.bases[i])));
}

}  // namespace wrealism
