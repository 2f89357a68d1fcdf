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

#include "gtest/gtest.h"

using namespace locc;

namespace {

SearchReport sample_report() {
    SearchConfig cfg;
    cfg.d = 6;
    cfg.samples = 150'000;
    cfg.seed = 42;
    return run_search(cfg, 2);
}

}  // namespace

TEST(report, json_round_trip_is_lossless) {
    auto report = sample_report();
    ASSERT_GT(report.counterexamples.size(), 0u);
    auto bytes = to_json(report).dump();
    auto back = search_report_from_json(nlohmann::json::parse(bytes));
    EXPECT_EQ(back.config, report.config);
    EXPECT_EQ(back.n_sampled, report.n_sampled);
    EXPECT_EQ(back.n_event_I, report.n_event_I);
    EXPECT_EQ(back.n_event_II_given_I, report.n_event_II_given_I);
    EXPECT_EQ(back.n_confirm_rejected, report.n_confirm_rejected);
    EXPECT_EQ(back.fraction_I, report.fraction_I);
    EXPECT_EQ(back.fraction_I_stderr, report.fraction_I_stderr);
    EXPECT_EQ(back.fraction_II_given_I, report.fraction_II_given_I);
    EXPECT_EQ(back.fraction_II_given_I_stderr, report.fraction_II_given_I_stderr);
    EXPECT_EQ(back.counterexamples, report.counterexamples);
    EXPECT_EQ(back.duration_seconds, report.duration_seconds);
    EXPECT_EQ(to_json(back).dump(), bytes);
}

TEST(report, counterexamples_use_17_digit_strings) {
    auto doc = to_json(sample_report());
    const auto &first = doc.at("counterexamples").at(0).at("psi").at(0);
    ASSERT_TRUE(first.is_string());
    auto text = first.get<std::string>();
    EXPECT_EQ(parse_double(text), parse_double(format_double(parse_double(text))));
    EXPECT_EQ(doc.at("schema_version"), "1.0");
    EXPECT_EQ(doc.at("kind"), "search_report");
}

TEST(report, csv_matches_json) {
    auto report = sample_report();
    auto csv = to_csv(report);
    std::istringstream in(csv);
    std::string header, row;
    std::getline(in, header);
    std::getline(in, row);
    auto split = [](const std::string &s) {
        std::vector<std::string> out;
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) {
            out.push_back(item);
        }
        return out;
    };
    auto names = split(header);
    auto values = split(row);
    ASSERT_EQ(names.size(), values.size());
    auto doc = to_json(report);
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (names[i] == "n_event_I" || names[i] == "n_event_II_given_I" || names[i] == "n_sampled") {
            EXPECT_EQ(std::stoull(values[i]), doc.at(names[i]).get<std::uint64_t>()) << names[i];
        }
        if (names[i].rfind("fraction", 0) == 0) {
            EXPECT_EQ(parse_double(values[i]), doc.at(names[i]).get<double>()) << names[i];
        }
    }
}

TEST(report, rejects_wrong_schema) {
    auto doc = to_json(sample_report());
    doc["schema_version"] = "0.9";
    EXPECT_THROW(search_report_from_json(doc), Error);
    auto verdicts = to_json(CopyVerdicts{}, NumericMode::Float);
    EXPECT_THROW(search_report_from_json(verdicts), Error);
}

TEST(report, copy_verdicts_round_trip) {
    CopyVerdicts v;
    v.per_k[1] = MajorizationVerdict::violated_at(2);
    v.per_k[2] = MajorizationVerdict::success();
    v.per_k[3] = MajorizationVerdict::violated_at(22);
    auto doc = to_json(v, NumericMode::Rational);
    EXPECT_EQ(doc.at("mode"), "rational");
    EXPECT_FALSE(doc.at("all_hold").get<bool>());
    auto back = copy_verdicts_from_json(nlohmann::json::parse(doc.dump()));
    EXPECT_EQ(back.per_k, v.per_k);
}

TEST(report, pair_file_reparses) {
    auto report = sample_report();
    std::istringstream in(format_counterexample_pairs(report));
    auto spectra = read_spectra<double>(in);
    ASSERT_EQ(spectra.size(), 2 * report.counterexamples.size());
    // Reading renormalizes, so compare through classification rather than bits.
    for (std::size_t i = 0; i < report.counterexamples.size(); ++i) {
        auto pair = make_state_pair(spectra[2 * i], spectra[2 * i + 1]);
        auto c = classify_pair(to_exact(pair), report.config);
        EXPECT_TRUE(c.event_I && c.event_II);
    }
}
