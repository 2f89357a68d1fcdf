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

#include "locc/spectrum.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <numeric>

namespace locc {

template <SpectrumScalar T>
BasicSpectrum<T> BasicSpectrum<T>::from_raw(std::vector<T> raw) {
    if (raw.empty()) {
        throw Error(ErrorKind::EmptyInput, "spectrum needs at least one entry");
    }
    T total = 0;
    for (const T &x : raw) {
        if constexpr (mode == NumericMode::Float) {
            if (!std::isfinite(x)) {
                throw Error(ErrorKind::InvalidArgument, "spectrum entries must be finite");
            }
        }
        if (x < 0) {
            throw Error(ErrorKind::NegativeEntry, "spectrum entries must be nonnegative");
        }
        total += x;
    }
    if (total == 0) {
        throw Error(ErrorKind::ZeroMass, "spectrum entries sum to zero");
    }
    if (total != 1) {
        for (T &x : raw) {
            x /= total;
        }
    }
    std::sort(raw.begin(), raw.end(), std::greater<>());
    return BasicSpectrum(std::move(raw));
}

template <>
Spectrum make_spectrum<double>(std::span<const std::string> literals) {
    std::vector<double> raw;
    raw.reserve(literals.size());
    for (const auto &lit : literals) {
        raw.push_back(parse_double(lit));
    }
    return Spectrum::from_raw(std::move(raw));
}

template <>
ExactSpectrum make_spectrum<Rational>(std::span<const std::string> literals) {
    std::vector<Rational> raw;
    raw.reserve(literals.size());
    for (const auto &lit : literals) {
        raw.push_back(parse_rational(lit));
    }
    return ExactSpectrum::from_raw(std::move(raw));
}

ExactSpectrum to_exact(const Spectrum &s) {
    std::vector<Rational> raw;
    raw.reserve(s.dimension());
    for (double x : s.values()) {
        raw.push_back(rational_from_double(x));
    }
    return ExactSpectrum::from_raw(std::move(raw));
}

Spectrum to_float(const ExactSpectrum &s) {
    std::vector<double> raw;
    raw.reserve(s.dimension());
    for (const auto &x : s.values()) {
        raw.push_back(x.get_d());
    }
    return Spectrum::from_raw(std::move(raw));
}

template <SpectrumScalar T>
PrefixSums<T> prefix_sums(const BasicSpectrum<T> &s) {
    PrefixSums<T> out;
    out.partial.reserve(s.dimension());
    T running = 0;
    for (const T &x : s.values()) {
        running += x;
        out.partial.push_back(running);
    }
    return out;
}

template <SpectrumScalar T>
MajorizationVerdict majorization_scan(std::span<const T> target, std::span<const T> source) {
    if (target.size() != source.size()) {
        throw Error(
            ErrorKind::LengthMismatch,
            "majorization needs equal dimensions (" + std::to_string(target.size()) + " vs " +
                std::to_string(source.size()) + "); embed the shorter spectrum first");
    }
    std::size_t active = target.size();
    while (active > 0 && target[active - 1] == 0 && source[active - 1] == 0) {
        --active;
    }
    T gap = 0;
    for (std::size_t m = 0; m + 1 < active; ++m) {
        gap += target[m] - source[m];
        if (gap < 0) {
            return MajorizationVerdict::violated_at(m + 1);
        }
    }
    return MajorizationVerdict::success();
}

template <SpectrumScalar T>
double entropy(const BasicSpectrum<T> &s) {
    double h = 0;
    for (const T &x : s.values()) {
        double p = ScalarTraits<T>::to_double(x);
        if (p > 0) {
            h -= p * std::log2(p);
        }
    }
    return h;
}

std::vector<std::string> split_spectrum_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') {
        return out;
    }
    std::string current;
    for (char c : line) {
        if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
            if (!current.empty()) {
                out.push_back(std::move(current));
                current.clear();
            }
        } else {
            current.push_back(c);
        }
    }
    if (!current.empty()) {
        out.push_back(std::move(current));
    }
    return out;
}

template <SpectrumScalar T>
std::vector<BasicSpectrum<T>> read_spectra(std::istream &in) {
    std::vector<BasicSpectrum<T>> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        auto literals = split_spectrum_line(line);
        if (literals.empty()) {
            continue;
        }
        try {
            out.push_back(make_spectrum<T>(std::span<const std::string>(literals)));
        } catch (const Error &e) {
            throw Error(e.kind(), "line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return out;
}

template <SpectrumScalar T>
std::vector<BasicSpectrum<T>> read_spectra_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    return read_spectra<T>(in);
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", value);
    return buf;
}

double parse_double(std::string_view text) {
    double value = 0;
    const char *begin = text.data();
    const char *end = text.data() + text.size();
    if (begin != end && *begin == '+') {
        ++begin;
    }
    auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec != std::errc() || ptr != end) {
        if (text.find('/') != std::string_view::npos) {
            // Fractions are accepted in float mode too.
            return parse_rational(text).get_d();
        }
        throw Error(ErrorKind::ParseError, "not a numeric literal: '" + std::string(text) + "'");
    }
    return value;
}

template <SpectrumScalar T>
std::string format_spectrum(const BasicSpectrum<T> &s) {
    std::string out;
    for (std::size_t i = 0; i < s.dimension(); ++i) {
        if (i) {
            out += ' ';
        }
        if constexpr (BasicSpectrum<T>::mode == NumericMode::Float) {
            out += format_double(s[i]);
        } else {
            out += to_string(s[i]);
        }
    }
    return out;
}

#define LOCC_INSTANTIATE(T)                                                                   \
    template class BasicSpectrum<T>;                                                          \
    template PrefixSums<T> prefix_sums<T>(const BasicSpectrum<T> &);                          \
    template MajorizationVerdict majorization_scan<T>(std::span<const T>, std::span<const T>); \
    template double entropy<T>(const BasicSpectrum<T> &);                                     \
    template std::vector<BasicSpectrum<T>> read_spectra<T>(std::istream &);                   \
    template std::vector<BasicSpectrum<T>> read_spectra_file<T>(const std::string &);         \
    template std::string format_spectrum<T>(const BasicSpectrum<T> &);

LOCC_INSTANTIATE(double)
LOCC_INSTANTIATE(Rational)

#undef LOCC_INSTANTIATE

}  // namespace locc
