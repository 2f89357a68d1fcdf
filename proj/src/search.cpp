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

#include "locc/search.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <memory>
#include <string>
#include <thread>

namespace locc {

std::string_view mode_name(SearchMode m) {
    return m == SearchMode::Float ? "float" : "rational-confirm";
}

SearchMode parse_search_mode(std::string_view name) {
    if (name == "float") {
        return SearchMode::Float;
    }
    if (name == "rational-confirm") {
        return SearchMode::RationalConfirm;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown search mode '" + std::string(name) + "'");
}

void SearchConfig::validate() const {
    if (d < 2) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be at least 2");
    }
    if (samples < 1) {
        throw Error(ErrorKind::InvalidArgument, "sample count must be at least 1");
    }
    if (k_success < 2) {
        throw Error(ErrorKind::InvalidArgument, "k_success must be at least 2");
    }
    if (k_fail <= k_success) {
        throw Error(ErrorKind::InvalidArgument, "k_fail must exceed k_success");
    }
    tensor_power_length(d, k_fail, {max_tensor_entries});
}

namespace {

/// Reusable buffers so the sample loop does not allocate per tensor power.
template <SpectrumScalar T>
class PairClassifier {
   public:
    explicit PairClassifier(const SearchConfig &cfg) : cfg_(cfg) {
    }

    PairClassification classify(const BasicStatePair<T> &pair, bool fast_path) {
        if (pair.dimension() != cfg_.d) {
            throw Error(
                ErrorKind::LengthMismatch,
                "pair dimension " + std::to_string(pair.dimension()) + " does not match configured " +
                    std::to_string(cfg_.d));
        }
        PairClassification out;
        if (majorizes(pair.phi, pair.psi).holds) {
            return out;
        }
        if (fast_path && !necessary_condition(pair)) {
            return out;
        }
        if (!holds_at(pair, cfg_.k_success)) {
            return out;
        }
        out.event_I = true;
        out.event_II = !holds_at(pair, cfg_.k_fail);
        return out;
    }

   private:
    bool holds_at(const BasicStatePair<T> &pair, unsigned k) {
        tensor_power_into<T>(pair.psi.values(), k, source_, scratch_);
        tensor_power_into<T>(pair.phi.values(), k, target_, scratch_);
        return majorization_scan<T>(target_, source_).holds;
    }

    const SearchConfig &cfg_;
    std::vector<T> source_;
    std::vector<T> target_;
    std::vector<T> scratch_;
};

struct Partial {
    std::uint64_t n_sampled = 0;
    std::uint64_t n_event_I = 0;
    std::uint64_t n_event_II = 0;
    std::uint64_t n_confirm_rejected = 0;
    std::vector<Counterexample> counterexamples;
};

Partial search_range(const SearchConfig &cfg, std::uint64_t begin, std::uint64_t end) {
    Partial part;
    PairClassifier<double> classifier(cfg);
    std::unique_ptr<PairClassifier<Rational>> exact;
    for (std::uint64_t i = begin; i < end; ++i) {
        StatePair pair = sample_oriented_pair(cfg.d, {cfg.seed, i}, cfg.measure);
        PairClassification c = classifier.classify(pair, true);
        if (c.event_II && cfg.mode == SearchMode::RationalConfirm) {
            if (!exact) {
                exact = std::make_unique<PairClassifier<Rational>>(cfg);
            }
            PairClassification confirmed = exact->classify(to_exact(pair), true);
            if (!confirmed.event_II) {
                ++part.n_confirm_rejected;
            }
            c = confirmed;
        }
        ++part.n_sampled;
        part.n_event_I += c.event_I;
        if (c.event_II) {
            ++part.n_event_II;
            if (part.counterexamples.size() < cfg.max_counterexamples_stored) {
                part.counterexamples.push_back({i, std::move(pair)});
            }
        }
    }
    return part;
}

}  // namespace

PairClassification classify_pair(const StatePair &pair, const SearchConfig &cfg, bool fast_path) {
    return PairClassifier<double>(cfg).classify(pair, fast_path);
}

PairClassification classify_pair(const ExactStatePair &pair, const SearchConfig &cfg, bool fast_path) {
    return PairClassifier<Rational>(cfg).classify(pair, fast_path);
}

double binomial_stderr(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) {
        throw Error(ErrorKind::InvalidArgument, "binomial standard error needs at least one trial");
    }
    if (successes > trials) {
        throw Error(ErrorKind::InvalidArgument, "successes exceed trials");
    }
    double p = static_cast<double>(successes) / static_cast<double>(trials);
    return std::sqrt(p * (1.0 - p) / static_cast<double>(trials));
}

SearchReport run_search(const SearchConfig &cfg, unsigned workers) {
    cfg.validate();
    auto start = std::chrono::steady_clock::now();

    workers = std::max(1u, workers);
    if (workers > cfg.samples) {
        workers = static_cast<unsigned>(cfg.samples);
    }
    std::vector<Partial> parts(workers);
    std::uint64_t chunk = cfg.samples / workers;
    std::uint64_t extra = cfg.samples % workers;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    std::uint64_t next = 0;
    for (unsigned w = 0; w < workers; ++w) {
        std::uint64_t len = chunk + (w < extra ? 1 : 0);
        ranges.emplace_back(next, next + len);
        next += len;
    }
    if (workers == 1) {
        parts[0] = search_range(cfg, 0, cfg.samples);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&, w] { parts[w] = search_range(cfg, ranges[w].first, ranges[w].second); });
        }
        for (auto &t : threads) {
            t.join();
        }
    }

    // Ranges are contiguous and ascending, so concatenation keeps sample-index order.
    SearchReport report;
    report.config = cfg;
    for (auto &part : parts) {
        report.n_sampled += part.n_sampled;
        report.n_event_I += part.n_event_I;
        report.n_event_II_given_I += part.n_event_II;
        report.n_confirm_rejected += part.n_confirm_rejected;
        for (auto &ce : part.counterexamples) {
            if (report.counterexamples.size() < cfg.max_counterexamples_stored) {
                report.counterexamples.push_back(std::move(ce));
            }
        }
    }
    report.fraction_I = static_cast<double>(report.n_event_I) / static_cast<double>(report.n_sampled);
    report.fraction_I_stderr = binomial_stderr(report.n_event_I, report.n_sampled);
    if (report.n_event_I > 0) {
        report.fraction_II_given_I =
            static_cast<double>(report.n_event_II_given_I) / static_cast<double>(report.n_event_I);
        report.fraction_II_given_I_stderr = binomial_stderr(report.n_event_II_given_I, report.n_event_I);
    }
    report.duration_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

}  // namespace locc
