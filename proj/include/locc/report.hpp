// Copyright 2026 The locc Authors
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

#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "locc/copies.hpp"
#include "locc/search.hpp"

namespace locc {

inline constexpr std::string_view kReportSchemaVersion = "1.0";

/// Report documents. Spectrum entries are strings with 17 significant digits
/// so that doubles round-trip exactly; see docs/report_schema.md.
nlohmann::json to_json(const SearchConfig &cfg);
nlohmann::json to_json(const SearchReport &report);
nlohmann::json to_json(const CopyVerdicts &verdicts, NumericMode mode);

SearchConfig search_config_from_json(const nlohmann::json &doc);
SearchReport search_report_from_json(const nlohmann::json &doc);
CopyVerdicts copy_verdicts_from_json(const nlohmann::json &doc);

/// Header plus one summary row.
std::string to_csv(const SearchReport &report);

/// Two lines per counterexample (psi then phi) in the spectrum text format.
std::string format_counterexample_pairs(const SearchReport &report);

}  // namespace locc
