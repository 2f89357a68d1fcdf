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

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace locc {

using Rational = mpq_class;

/// Parses "0.493", "1e-3", "-2.5E+1", "3/7" or "12" into an exact rational.
/// Throws Error(ParseError) on malformed input.
Rational parse_rational(std::string_view text);

/// Exact value of a finite double.
Rational rational_from_double(double value);

/// "p/q" in lowest terms, or "p" when q = 1.
std::string to_string(const Rational &value);

}  // namespace locc
