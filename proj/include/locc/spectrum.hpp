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
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "locc/error.hpp"
#include "locc/rational.hpp"

namespace locc {

enum class NumericMode { Float, Rational };

template <typename T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
    static constexpr NumericMode mode = NumericMode::Float;
    static double to_double(double x) {
        return x;
    }
};

template <>
struct ScalarTraits<Rational> {
    static constexpr NumericMode mode = NumericMode::Rational;
    static double to_double(const Rational &x) {
        return x.get_d();
    }
};

template <typename T>
concept SpectrumScalar = requires { ScalarTraits<T>::mode; };

/// Schmidt spectrum of a bipartite pure state: a probability vector kept in
/// non-increasing order. Float spectra sum to 1 within rounding, exact spectra
/// sum to exactly 1.
template <SpectrumScalar T>
class BasicSpectrum {
   public:
    using value_type = T;
    static constexpr NumericMode mode = ScalarTraits<T>::mode;

    /// Validates, sorts descending and normalizes to unit mass.
    static BasicSpectrum from_raw(std::vector<T> raw);

    /// Adopts values the caller guarantees are already sorted, nonnegative and normalized.
    static BasicSpectrum assume_valid(std::vector<T> values) {
        return BasicSpectrum(std::move(values));
    }

    std::span<const T> values() const noexcept {
        return values_;
    }
    std::size_t dimension() const noexcept {
        return values_.size();
    }
    const T &operator[](std::size_t i) const {
        return values_[i];
    }
    const T &largest() const {
        return values_.front();
    }
    const T &smallest() const {
        return values_.back();
    }

    bool operator==(const BasicSpectrum &other) const = default;

   private:
    explicit BasicSpectrum(std::vector<T> values) : values_(std::move(values)) {
    }
    std::vector<T> values_;
};

using Spectrum = BasicSpectrum<double>;
using ExactSpectrum = BasicSpectrum<Rational>;

template <SpectrumScalar T>
BasicSpectrum<T> make_spectrum(std::vector<T> raw) {
    return BasicSpectrum<T>::from_raw(std::move(raw));
}

/// Parses literals in the requested mode. Exact mode never rounds: "0.493" is 493/1000.
template <SpectrumScalar T>
BasicSpectrum<T> make_spectrum(std::span<const std::string> literals);

/// Exact rational image of the binary values, renormalized exactly.
ExactSpectrum to_exact(const Spectrum &s);
Spectrum to_float(const ExactSpectrum &s);

template <SpectrumScalar T>
struct PrefixSums {
    /// partial[m - 1] is the sum of the m largest entries.
    std::vector<T> partial;
};

template <SpectrumScalar T>
PrefixSums<T> prefix_sums(const BasicSpectrum<T> &s);

struct MajorizationVerdict {
    bool holds = true;
    /// 1-based prefix length at which the first inequality fails.
    std::optional<std::size_t> first_violation;

    static MajorizationVerdict success() {
        return {};
    }
    static MajorizationVerdict violated_at(std::size_t m) {
        return {false, m};
    }
    bool operator==(const MajorizationVerdict &) const = default;
};

/// Early-exit prefix comparison on raw sorted value ranges of equal length:
/// holds iff every prefix sum of `source` is <= the matching prefix sum of `target`.
///
/// Gaps are accumulated as sum(target_i - source_i) and compared with plain
/// `< 0`. The trailing run where both ranges are zero, and the final index,
/// carry the total-mass identity and are not tested.
template <SpectrumScalar T>
MajorizationVerdict majorization_scan(std::span<const T> target, std::span<const T> source);

/// Nielsen's criterion: |source> can be converted to |target> by LOCC iff the verdict holds.
template <SpectrumScalar T>
MajorizationVerdict majorizes(const BasicSpectrum<T> &target, const BasicSpectrum<T> &source) {
    return majorization_scan<T>(target.values(), source.values());
}

/// Shannon entropy in bits; exact spectra are evaluated in double precision.
template <SpectrumScalar T>
double entropy(const BasicSpectrum<T> &s);

/// Splits one line of the spectrum text format into literals (whitespace or
/// comma separated). Blank lines and lines starting with '#' yield nothing.
std::vector<std::string> split_spectrum_line(std::string_view line);

/// Reads every spectrum in the text format from `in`.
template <SpectrumScalar T>
std::vector<BasicSpectrum<T>> read_spectra(std::istream &in);

template <SpectrumScalar T>
std::vector<BasicSpectrum<T>> read_spectra_file(const std::string &path);

/// One line of the text format; doubles use 17 significant digits.
template <SpectrumScalar T>
std::string format_spectrum(const BasicSpectrum<T> &s);

std::string format_double(double value);
double parse_double(std::string_view text);

}  // namespace locc
