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
#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locc/copies.hpp"
#include "locc/spectrum.hpp"

namespace locc {

/// Identifies one independent random stream. The search uses one stream per sample index.
struct RngStream {
    std::uint64_t seed = 0;
    std::uint64_t stream_index = 0;
};

/// SplitMix64 keyed by (seed, stream_index). Draw j of a stream depends only
/// on the key and j, so any stream can be replayed alone.
class StreamEngine {
   public:
    using result_type = std::uint64_t;

    explicit StreamEngine(RngStream stream);

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()();

    /// Uniform on the open interval (0, 1), 53-bit resolution.
    double uniform_open();

    /// -log(U) with U = uniform_open().
    double unit_exponential();

   private:
    std::uint64_t state_;
};

/// How raw simplex points are produced before sorting.
enum class SamplingMeasure {
    /// d i.i.d. U(0,1) entries, normalized. Reproduces the published event-I rates.
    UniformEntries,
    /// Normalized unit exponentials, i.e. the uniform distribution on the simplex.
    FlatDirichlet,
};

std::string_view measure_name(SamplingMeasure m);
SamplingMeasure parse_measure(std::string_view name);

/// Normalizes nonnegative raw draws and sorts them into a Spectrum.
Spectrum spectrum_from_draws(std::span<const double> draws);

/// A normalized but unsorted point of the simplex; consumes exactly d draws.
std::vector<double> sample_simplex_point(std::size_t d, StreamEngine &engine, SamplingMeasure measure);

Spectrum sample_spectrum(std::size_t d, StreamEngine &engine, SamplingMeasure measure = SamplingMeasure::UniformEntries);
Spectrum sample_spectrum(std::size_t d, RngStream stream, SamplingMeasure measure = SamplingMeasure::UniformEntries);

/// Swaps so that psi^(1) <= phi^(1); ties keep the given order.
StatePair orient(Spectrum first, Spectrum second);

/// Two independent spectra from the same stream (first d draws, then the next d), oriented.
StatePair sample_oriented_pair(
    std::size_t d, RngStream stream, SamplingMeasure measure = SamplingMeasure::UniformEntries);

}  // namespace locc
