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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "locc/copies.hpp"

namespace locc {

/// A pair claimed to be a counterexample: one copy fails, two copies work, three copies fail.
struct CounterexampleFixture {
    std::string name;
    std::vector<std::string> psi;
    std::vector<std::string> phi;
};

/// The published d=5 and d=6 counterexamples.
std::vector<CounterexampleFixture> published_counterexamples();

struct CertificationCheck {
    std::string fixture;
    std::string property;
    bool passed = false;
    /// For transformability checks: the exact verdict.
    std::optional<MajorizationVerdict> verdict;
    /// For failing k: exact prefix gap prefix_target[m] - prefix_source[m] at the first violation.
    std::optional<Rational> violation_gap;
    /// Whether the float-mode verdict has the same `holds` value.
    std::optional<bool> float_agrees;
};

struct Certification {
    std::vector<CertificationCheck> checks;

    bool all_passed() const {
        for (const auto &c : checks) {
            if (!c.passed) {
                return false;
            }
        }
        return !checks.empty();
    }
};

/// Decides every fixture in exact arithmetic: k=1 fails, k=2 holds, k=3 fails,
/// and the necessary condition holds. Four checks per fixture.
Certification certify(std::span<const CounterexampleFixture> fixtures);

/// Reads fixtures from the spectrum text format: consecutive psi/phi lines.
std::vector<CounterexampleFixture> read_fixtures_file(const std::string &path);

/// Exact prefix_target[m] - prefix_source[m] (1-based m).
Rational prefix_gap(const ExactSpectrum &target, const ExactSpectrum &source, std::size_t m);

}  // namespace locc
