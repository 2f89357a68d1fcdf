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

#include "locc/certify.hpp"

#include <fstream>

namespace locc {

std::vector<CounterexampleFixture> published_counterexamples() {
    return {
        {"d=5", {"0.493", "0.284", "0.158", "0.035", "0.030"}, {"0.598", "0.145", "0.129", "0.125", "0.003"}},
        {"d=6", {"0.24", "0.22", "0.22", "0.19", "0.10", "0.03"}, {"0.27", "0.25", "0.16", "0.16", "0.15", "0.01"}},
    };
}

Rational prefix_gap(const ExactSpectrum &target, const ExactSpectrum &source, std::size_t m) {
    if (target.dimension() != source.dimension() || m == 0 || m > target.dimension()) {
        throw Error(ErrorKind::InvalidArgument, "prefix index out of range");
    }
    Rational gap = 0;
    for (std::size_t i = 0; i < m; ++i) {
        gap += target[i] - source[i];
    }
    return gap;
}

namespace {

struct Expectation {
    unsigned k;
    bool holds;
};

constexpr Expectation kExpected[] = {{1, false}, {2, true}, {3, false}};

}  // namespace

Certification certify(std::span<const CounterexampleFixture> fixtures) {
    Certification out;
    for (const auto &fx : fixtures) {
        ExactStatePair exact = make_state_pair(
            make_spectrum<Rational>(std::span<const std::string>(fx.psi)),
            make_spectrum<Rational>(std::span<const std::string>(fx.phi)));
        StatePair approx = make_state_pair(
            make_spectrum<double>(std::span<const std::string>(fx.psi)),
            make_spectrum<double>(std::span<const std::string>(fx.phi)));

        for (const auto &[k, expected] : kExpected) {
            CertificationCheck check;
            check.fixture = fx.name;
            check.property = "k=" + std::to_string(k) + (expected ? " holds" : " fails");
            MajorizationVerdict v = transformable_k(exact, k);
            check.verdict = v;
            check.passed = v.holds == expected;
            if (!v.holds) {
                check.violation_gap =
                    prefix_gap(tensor_power(exact.phi, k), tensor_power(exact.psi, k), *v.first_violation);
            }
            check.float_agrees = transformable_k(approx, k).holds == v.holds;
            out.checks.push_back(std::move(check));
        }

        CertificationCheck nc;
        nc.fixture = fx.name;
        nc.property = "necessary condition";
        nc.passed = necessary_condition(exact);
        nc.float_agrees = necessary_condition(approx) == nc.passed;
        out.checks.push_back(std::move(nc));
    }
    return out;
}

std::vector<CounterexampleFixture> read_fixtures_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        auto literals = split_spectrum_line(line);
        if (!literals.empty()) {
            lines.push_back(std::move(literals));
        }
    }
    if (lines.empty() || lines.size() % 2 != 0) {
        throw Error(ErrorKind::ParseError, "fixture file needs psi/phi line pairs");
    }
    std::vector<CounterexampleFixture> out;
    for (std::size_t i = 0; i < lines.size(); i += 2) {
        out.push_back({path + "#" + std::to_string(i / 2 + 1), lines[i], lines[i + 1]});
    }
    return out;
}

}  // namespace locc
