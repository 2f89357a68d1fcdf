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

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "locc/copies.hpp"
#include "locc/sampler.hpp"

namespace locc {

enum class SearchMode {
    /// Float classification only.
    Float,
    /// Float classification; every event-II pair is re-decided in exact arithmetic.
    RationalConfirm,
};

std::string_view mode_name(SearchMode m);
SearchMode parse_search_mode(std::string_view name);

struct SearchConfig {
    std::size_t d = 6;
    std::uint64_t samples = 1'000'000;
    /// Event I: not transformable with one copy, transformable with k_success copies.
    unsigned k_success = 2;
    /// Event II (given I): not transformable with k_fail copies.
    unsigned k_fail = 3;
    std::uint64_t seed = 0;
    SearchMode mode = SearchMode::RationalConfirm;
    SamplingMeasure measure = SamplingMeasure::UniformEntries;
    std::size_t max_counterexamples_stored = 1000;
    std::size_t max_tensor_entries = kDefaultMaxTensorEntries;

    /// Throws Error(InvalidArgument / SizeCapExceeded) describing the first violated invariant.
    void validate() const;

    bool operator==(const SearchConfig &) const = default;
};

struct PairClassification {
    bool event_I = false;
    /// Only ever true together with event_I.
    bool event_II = false;

    bool operator==(const PairClassification &) const = default;
};

/// Classifies one oriented pair. With `fast_path`, pairs failing the
/// necessary condition are rejected before any tensor power is built.
PairClassification classify_pair(const StatePair &pair, const SearchConfig &cfg, bool fast_path = true);
PairClassification classify_pair(const ExactStatePair &pair, const SearchConfig &cfg, bool fast_path = true);

struct Counterexample {
    std::uint64_t sample_index = 0;
    StatePair pair;

    bool operator==(const Counterexample &) const = default;
};

struct SearchReport {
    SearchConfig config;
    std::uint64_t n_sampled = 0;
    std::uint64_t n_event_I = 0;
    std::uint64_t n_event_II_given_I = 0;
    /// Float event-II pairs that exact re-classification overturned.
    std::uint64_t n_confirm_rejected = 0;
    double fraction_I = 0;
    double fraction_I_stderr = 0;
    double fraction_II_given_I = 0;
    double fraction_II_given_I_stderr = 0;
    /// First `max_counterexamples_stored` event-II pairs by sample index.
    std::vector<Counterexample> counterexamples;
    double duration_seconds = 0;
};

/// sqrt(p (1 - p) / trials) with p = successes / trials.
double binomial_stderr(std::uint64_t successes, std::uint64_t trials);

/// Classifies samples 0 .. cfg.samples-1, sample i drawn from stream (cfg.seed, i).
/// Counts and counterexamples do not depend on `workers`.
SearchReport run_search(const SearchConfig &cfg, unsigned workers = 1);

}  // namespace locc
