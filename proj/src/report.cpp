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

#include "locc/report.hpp"

#include <sstream>

namespace locc {

using nlohmann::json;

namespace {

json spectrum_strings(const Spectrum &s) {
    json arr = json::array();
    for (double x : s.values()) {
        arr.push_back(format_double(x));
    }
    return arr;
}

Spectrum spectrum_from_strings(const json &arr) {
    std::vector<double> values;
    for (const auto &item : arr) {
        values.push_back(parse_double(item.get<std::string>()));
    }
    // Validate, but keep the stored (already normalized) bits rather than renormalizing.
    Spectrum::from_raw(values);
    return Spectrum::assume_valid(std::move(values));
}

void require_schema(const json &doc, std::string_view kind) {
    if (doc.value("schema_version", "") != kReportSchemaVersion) {
        throw Error(ErrorKind::ParseError, "unsupported report schema_version");
    }
    if (doc.value("kind", "") != kind) {
        throw Error(ErrorKind::ParseError, "expected a '" + std::string(kind) + "' document");
    }
}

}  // namespace

json to_json(const SearchConfig &cfg) {
    return {
        {"d", cfg.d},
        {"samples", cfg.samples},
        {"k_success", cfg.k_success},
        {"k_fail", cfg.k_fail},
        {"seed", cfg.seed},
        {"mode", mode_name(cfg.mode)},
        {"measure", measure_name(cfg.measure)},
        {"max_counterexamples_stored", cfg.max_counterexamples_stored},
        {"max_tensor_entries", cfg.max_tensor_entries},
    };
}

SearchConfig search_config_from_json(const json &doc) {
    SearchConfig cfg;
    cfg.d = doc.at("d").get<std::size_t>();
    cfg.samples = doc.at("samples").get<std::uint64_t>();
    cfg.k_success = doc.at("k_success").get<unsigned>();
    cfg.k_fail = doc.at("k_fail").get<unsigned>();
    cfg.seed = doc.at("seed").get<std::uint64_t>();
    cfg.mode = parse_search_mode(doc.at("mode").get<std::string>());
    cfg.measure = parse_measure(doc.at("measure").get<std::string>());
    cfg.max_counterexamples_stored = doc.at("max_counterexamples_stored").get<std::size_t>();
    cfg.max_tensor_entries = doc.value("max_tensor_entries", kDefaultMaxTensorEntries);
    return cfg;
}

json to_json(const SearchReport &report) {
    json ces = json::array();
    for (const auto &ce : report.counterexamples) {
        ces.push_back({
            {"sample_index", ce.sample_index},
            {"psi", spectrum_strings(ce.pair.psi)},
            {"phi", spectrum_strings(ce.pair.phi)},
        });
    }
    return {
        {"schema_version", kReportSchemaVersion},
        {"kind", "search_report"},
        {"config", to_json(report.config)},
        {"n_sampled", report.n_sampled},
        {"n_event_I", report.n_event_I},
        {"n_event_II_given_I", report.n_event_II_given_I},
        {"n_confirm_rejected", report.n_confirm_rejected},
        {"fraction_I", report.fraction_I},
        {"fraction_I_stderr", report.fraction_I_stderr},
        {"fraction_II_given_I", report.fraction_II_given_I},
        {"fraction_II_given_I_stderr", report.fraction_II_given_I_stderr},
        {"counterexamples", ces},
        {"duration_seconds", report.duration_seconds},
    };
}

SearchReport search_report_from_json(const json &doc) {
    require_schema(doc, "search_report");
    SearchReport r;
    r.config = search_config_from_json(doc.at("config"));
    r.n_sampled = doc.at("n_sampled").get<std::uint64_t>();
    r.n_event_I = doc.at("n_event_I").get<std::uint64_t>();
    r.n_event_II_given_I = doc.at("n_event_II_given_I").get<std::uint64_t>();
    r.n_confirm_rejected = doc.at("n_confirm_rejected").get<std::uint64_t>();
    r.fraction_I = doc.at("fraction_I").get<double>();
    r.fraction_I_stderr = doc.at("fraction_I_stderr").get<double>();
    r.fraction_II_given_I = doc.at("fraction_II_given_I").get<double>();
    r.fraction_II_given_I_stderr = doc.at("fraction_II_given_I_stderr").get<double>();
    for (const auto &item : doc.at("counterexamples")) {
        r.counterexamples.push_back({
            item.at("sample_index").get<std::uint64_t>(),
            make_state_pair(spectrum_from_strings(item.at("psi")), spectrum_from_strings(item.at("phi")), true),
        });
    }
    r.duration_seconds = doc.at("duration_seconds").get<double>();
    return r;
}

json to_json(const CopyVerdicts &verdicts, NumericMode mode) {
    json arr = json::array();
    for (const auto &[k, v] : verdicts.per_k) {
        arr.push_back({
            {"k", k},
            {"holds", v.holds},
            {"first_violation", v.first_violation ? json(*v.first_violation) : json(nullptr)},
        });
    }
    return {
        {"schema_version", kReportSchemaVersion},
        {"kind", "copy_verdicts"},
        {"mode", mode == NumericMode::Float ? "float" : "rational"},
        {"all_hold", verdicts.all_hold()},
        {"verdicts", arr},
    };
}

CopyVerdicts copy_verdicts_from_json(const json &doc) {
    require_schema(doc, "copy_verdicts");
    CopyVerdicts out;
    for (const auto &item : doc.at("verdicts")) {
        MajorizationVerdict v;
        v.holds = item.at("holds").get<bool>();
        if (!item.at("first_violation").is_null()) {
            v.first_violation = item.at("first_violation").get<std::size_t>();
        }
        out.per_k.emplace(item.at("k").get<unsigned>(), v);
    }
    return out;
}

std::string to_csv(const SearchReport &report) {
    std::ostringstream out;
    out << "d,samples,k_success,k_fail,seed,mode,measure,n_sampled,n_event_I,n_event_II_given_I,"
           "n_confirm_rejected,fraction_I,fraction_I_stderr,fraction_II_given_I,fraction_II_given_I_stderr,"
           "n_counterexamples_stored,duration_seconds\n";
    const auto &c = report.config;
    out << c.d << ',' << c.samples << ',' << c.k_success << ',' << c.k_fail << ',' << c.seed << ','
        << mode_name(c.mode) << ',' << measure_name(c.measure) << ',' << report.n_sampled << ','
        << report.n_event_I << ',' << report.n_event_II_given_I << ',' << report.n_confirm_rejected << ','
        << format_double(report.fraction_I) << ',' << format_double(report.fraction_I_stderr) << ','
        << format_double(report.fraction_II_given_I) << ',' << format_double(report.fraction_II_given_I_stderr)
        << ',' << report.counterexamples.size() << ',' << format_double(report.duration_seconds) << '\n';
    return out.str();
}

std::string format_counterexample_pairs(const SearchReport &report) {
    std::ostringstream out;
    out << "# " << report.counterexamples.size() << " counterexample pairs, d=" << report.config.d
        << ", seed=" << report.config.seed << "; psi line then phi line\n";
    for (const auto &ce : report.counterexamples) {
        out << "# sample " << ce.sample_index << '\n';
        out << format_spectrum(ce.pair.psi) << '\n';
        out << format_spectrum(ce.pair.phi) << '\n';
    }
    return out.str();
}

}  // namespace locc
