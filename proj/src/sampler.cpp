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

#include "locc/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <utility>

namespace locc {

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

StreamEngine::StreamEngine(RngStream stream)
    : state_(mix64(stream.seed ^ mix64(stream.stream_index + 0x632BE59BD9B4E019ULL))) {
}

StreamEngine::result_type StreamEngine::operator()() {
    state_ += kGolden;
    return mix64(state_);
}

double StreamEngine::uniform_open() {
    return (static_cast<double>((*this)() >> 11) + 0.5) * 0x1.0p-53;
}

double StreamEngine::unit_exponential() {
    return -std::log(uniform_open());
}

std::string_view measure_name(SamplingMeasure m) {
    switch (m) {
        case SamplingMeasure::UniformEntries:
            return "uniform-entries";
        case SamplingMeasure::FlatDirichlet:
            return "flat-dirichlet";
    }
    return "unknown";
}

SamplingMeasure parse_measure(std::string_view name) {
    if (name == "uniform-entries") {
        return SamplingMeasure::UniformEntries;
    }
    if (name == "flat-dirichlet") {
        return SamplingMeasure::FlatDirichlet;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown sampling measure '" + std::string(name) + "'");
}

Spectrum spectrum_from_draws(std::span<const double> draws) {
    return Spectrum::from_raw(std::vector<double>(draws.begin(), draws.end()));
}

std::vector<double> sample_simplex_point(std::size_t d, StreamEngine &engine, SamplingMeasure measure) {
    std::vector<double> point(d);
    double total = 0;
    for (double &x : point) {
        x = measure == SamplingMeasure::FlatDirichlet ? engine.unit_exponential() : engine.uniform_open();
        total += x;
    }
    for (double &x : point) {
        x /= total;
    }
    return point;
}

Spectrum sample_spectrum(std::size_t d, StreamEngine &engine, SamplingMeasure measure) {
    if (d == 0) {
        throw Error(ErrorKind::InvalidArgument, "dimension must be at least 1");
    }
    auto point = sample_simplex_point(d, engine, measure);
    std::sort(point.begin(), point.end(), std::greater<>());
    return Spectrum::assume_valid(std::move(point));
}

Spectrum sample_spectrum(std::size_t d, RngStream stream, SamplingMeasure measure) {
    StreamEngine engine(stream);
    return sample_spectrum(d, engine, measure);
}

StatePair orient(Spectrum first, Spectrum second) {
    if (first.dimension() != second.dimension()) {
        throw Error(ErrorKind::LengthMismatch, "state pair dimensions differ");
    }
    if (first.largest() > second.largest()) {
        std::swap(first, second);
    }
    return {std::move(first), std::move(second), true};
}

StatePair sample_oriented_pair(std::size_t d, RngStream stream, SamplingMeasure measure) {
    StreamEngine engine(stream);
    Spectrum first = sample_spectrum(d, engine, measure);
    Spectrum second = sample_spectrum(d, engine, measure);
    return orient(std::move(first), std::move(second));
}

}  // namespace locc
