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

#include "locc/copies.hpp"

#include <algorithm>
#include <functional>
#include <string>

namespace locc {

std::size_t tensor_power_length(std::size_t d, unsigned k, TensorPowerLimits limits) {
    if (k == 0) {
        throw Error(ErrorKind::InvalidArgument, "copy count must be at least 1");
    }
    std::size_t length = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (d != 0 && length > limits.max_entries / d) {
            throw Error(
                ErrorKind::SizeCapExceeded,
                std::to_string(d) + "^" + std::to_string(k) + " entries exceeds the cap of " +
                    std::to_string(limits.max_entries));
        }
        length *= d;
    }
    if (length > limits.max_entries) {
        throw Error(
            ErrorKind::SizeCapExceeded,
            std::to_string(d) + "^" + std::to_string(k) + " entries exceeds the cap of " +
                std::to_string(limits.max_entries));
    }
    return length;
}

template <SpectrumScalar T>
void tensor_power_into(std::span<const T> s, unsigned k, std::vector<T> &out, std::vector<T> &scratch) {
    out.assign(s.begin(), s.end());
    for (unsigned copy = 1; copy < k; ++copy) {
        scratch.clear();
        scratch.reserve(out.size() * s.size());
        for (const T &a : out) {
            for (const T &b : s) {
                scratch.push_back(a * b);
            }
        }
        out.swap(scratch);
    }
    if (k > 1) {
        std::sort(out.begin(), out.end(), std::greater<>());
    }
}

template <SpectrumScalar T>
BasicSpectrum<T> tensor_power(const BasicSpectrum<T> &s, unsigned k, TensorPowerLimits limits) {
    tensor_power_length(s.dimension(), k, limits);
    std::vector<T> out;
    std::vector<T> scratch;
    tensor_power_into<T>(s.values(), k, out, scratch);
    return BasicSpectrum<T>::assume_valid(std::move(out));
}

template <SpectrumScalar T>
BasicStatePair<T> make_state_pair(BasicSpectrum<T> psi, BasicSpectrum<T> phi, bool oriented) {
    if (psi.dimension() != phi.dimension()) {
        throw Error(
            ErrorKind::LengthMismatch,
            "state pair needs equal dimensions (" + std::to_string(psi.dimension()) + " vs " +
                std::to_string(phi.dimension()) + ")");
    }
    if (oriented && psi.largest() > phi.largest()) {
        throw Error(ErrorKind::InvalidArgument, "oriented pair requires psi^(1) <= phi^(1)");
    }
    return {std::move(psi), std::move(phi), oriented};
}

ExactStatePair to_exact(const StatePair &pair) {
    return {to_exact(pair.psi), to_exact(pair.phi), pair.oriented};
}

template <SpectrumScalar T>
MajorizationVerdict transformable_k(const BasicStatePair<T> &pair, unsigned k, TensorPowerLimits limits) {
    if (pair.psi.dimension() != pair.phi.dimension()) {
        throw Error(ErrorKind::LengthMismatch, "state pair dimensions differ");
    }
    if (k == 1) {
        return majorizes(pair.phi, pair.psi);
    }
    return majorizes(tensor_power(pair.phi, k, limits), tensor_power(pair.psi, k, limits));
}

template <SpectrumScalar T>
CopyVerdicts copy_verdicts(const BasicStatePair<T> &pair, std::span<const unsigned> ks, TensorPowerLimits limits) {
    CopyVerdicts out;
    for (unsigned k : ks) {
        out.per_k.emplace(k, transformable_k(pair, k, limits));
    }
    return out;
}

template <SpectrumScalar T>
bool necessary_condition(const BasicStatePair<T> &pair) {
    if (pair.psi.dimension() != pair.phi.dimension()) {
        throw Error(ErrorKind::LengthMismatch, "state pair dimensions differ");
    }
    return pair.psi.largest() <= pair.phi.largest() && pair.psi.smallest() >= pair.phi.smallest();
}

template <SpectrumScalar T>
BasicSpectrum<T> embed(const BasicSpectrum<T> &s, std::size_t d_target) {
    if (d_target < s.dimension()) {
        throw Error(
            ErrorKind::InvalidArgument,
            "cannot embed a " + std::to_string(s.dimension()) + "-dimensional spectrum into " +
                std::to_string(d_target) + " dimensions");
    }
    std::vector<T> values(s.values().begin(), s.values().end());
    values.resize(d_target, T(0));
    return BasicSpectrum<T>::assume_valid(std::move(values));
}

#define LOCC_INSTANTIATE(T)                                                                                   \
    template void tensor_power_into<T>(std::span<const T>, unsigned, std::vector<T> &, std::vector<T> &);     \
    template BasicSpectrum<T> tensor_power<T>(const BasicSpectrum<T> &, unsigned, TensorPowerLimits);         \
    template BasicStatePair<T> make_state_pair<T>(BasicSpectrum<T>, BasicSpectrum<T>, bool);                  \
    template MajorizationVerdict transformable_k<T>(const BasicStatePair<T> &, unsigned, TensorPowerLimits);  \
    template CopyVerdicts copy_verdicts<T>(const BasicStatePair<T> &, std::span<const unsigned>,              \
                                           TensorPowerLimits);                                                \
    template bool necessary_condition<T>(const BasicStatePair<T> &);                                          \
    template BasicSpectrum<T> embed<T>(const BasicSpectrum<T> &, std::size_t);

LOCC_INSTANTIATE(double)
LOCC_INSTANTIATE(Rational)

#undef LOCC_INSTANTIATE

}  // namespace locc
