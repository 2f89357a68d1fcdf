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
#include <map>
#include <span>
#include <vector>

#include "locc/spectrum.hpp"

namespace locc {

inline constexpr std::size_t kDefaultMaxTensorEntries = 1'000'000;

struct TensorPowerLimits {
    std::size_t max_entries = kDefaultMaxTensorEntries;
};

/// d^k, or throws SizeCapExceeded if it is above `limits.max_entries`.
std::size_t tensor_power_length(std::size_t d, unsigned k, TensorPowerLimits limits = {});

/// Spectrum of the k-copy reduced state: every k-fold product, sorted descending.
template <SpectrumScalar T>
BasicSpectrum<T> tensor_power(const BasicSpectrum<T> &s, unsigned k, TensorPowerLimits limits = {});

/// Buffer-reusing form of tensor_power for hot loops. `out` receives the
/// sorted products, `scratch` is clobbered. No size-cap check.
template <SpectrumScalar T>
void tensor_power_into(std::span<const T> s, unsigned k, std::vector<T> &out, std::vector<T> &scratch);

template <SpectrumScalar T>
struct BasicStatePair {
    BasicSpectrum<T> psi;
    BasicSpectrum<T> phi;
    /// Set when psi.largest() <= phi.largest() has been arranged by swapping.
    bool oriented = false;

    std::size_t dimension() const {
        return psi.dimension();
    }
    bool operator==(const BasicStatePair &) const = default;
};

using StatePair = BasicStatePair<double>;
using ExactStatePair = BasicStatePair<Rational>;

/// Checks equal dimensions (and orientation when `oriented`).
template <SpectrumScalar T>
BasicStatePair<T> make_state_pair(BasicSpectrum<T> psi, BasicSpectrum<T> phi, bool oriented = false);

ExactStatePair to_exact(const StatePair &pair);

/// Verdict per requested copy count.
struct CopyVerdicts {
    std::map<unsigned, MajorizationVerdict> per_k;

    bool all_hold() const {
        for (const auto &[k, v] : per_k) {
            if (!v.holds) {
                return false;
            }
        }
        return true;
    }
};

/// Decides |psi>^{(x)k} -> |phi>^{(x)k}.
template <SpectrumScalar T>
MajorizationVerdict transformable_k(const BasicStatePair<T> &pair, unsigned k, TensorPowerLimits limits = {});

template <SpectrumScalar T>
CopyVerdicts copy_verdicts(const BasicStatePair<T> &pair, std::span<const unsigned> ks, TensorPowerLimits limits = {});

/// psi^(1) <= phi^(1) and psi^(d) >= phi^(d). Failing it rules out every k.
template <SpectrumScalar T>
bool necessary_condition(const BasicStatePair<T> &pair);

/// Zero-pads to `d_target` entries.
template <SpectrumScalar T>
BasicSpectrum<T> embed(const BasicSpectrum<T> &s, std::size_t d_target);

template <SpectrumScalar T>
BasicStatePair<T> embed(const BasicStatePair<T> &pair, std::size_t d_target) {
    return {embed(pair.psi, d_target), embed(pair.phi, d_target), pair.oriented};
}

}  // namespace locc
