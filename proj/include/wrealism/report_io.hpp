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

// Machine-readable output. JSON objects keep insertion order so identical
// inputs serialize to identical bytes. Schemas are in docs/schemas.

#ifndef WREALISM_REPORT_IO_HPP
#define WREALISM_REPORT_IO_HPP

#include <string>

#include <json.hpp>

#include "wrealism/bellmermin.hpp"
#include "wrealism/contradiction.hpp"
#include "wrealism/lhv_ensemble.hpp"
#include "wrealism/preparation.hpp"
#include "wrealism/rational.hpp"

namespace wrealism::io {

using Json = nlohmann::ordered_json;

/// 17 significant digits, trailing zeros kept, locale independent.
std::string format_real(double x);

/// {"num": p, "den": q, "decimal": p/q}
Json rational_json(const Rational &r);

Json to_json(const contradiction::Witness &w);
Json to_json(const contradiction::ContradictionReport &report);
Json to_json(const contradiction::InterferenceTrace &trace);
Json to_json(const bellmermin::SampleStats &stats, const bellmermin::Observable &a,
             const bellmermin::PreparedDirection &n);
Json curve_json(const preparation::PreparationConfig &config, const std::vector<preparation::CurvePoint> &curve);
Json scan_json(const std::vector<contradiction::ScanRow> &rows);

}  // namespace wrealism::io

#endif  // WREALISM_REPORT_IO_HPP
