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

#include "locc/rational.hpp"

#include <cctype>
#include <cmath>
#include <string>

#include "locc/error.hpp"

namespace locc {

const char *error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::EmptyInput:
            return "empty input";
        case ErrorKind::NegativeEntry:
            return "negative entry";
        case ErrorKind::ZeroMass:
            return "zero total mass";
        case ErrorKind::LengthMismatch:
            return "length mismatch";
        case ErrorKind::SizeCapExceeded:
            return "size cap exceeded";
        case ErrorKind::InvalidArgument:
            return "invalid argument";
        case ErrorKind::ParseError:
            return "parse error";
    }
    return "error";
}

namespace {

[[noreturn]] void bad_literal(std::string_view text) {
    throw Error(ErrorKind::ParseError, "not a numeric literal: '" + std::string(text) + "'");
}

bool all_digits(std::string_view s) {
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class pow10(unsigned long exponent) {
    mpz_class result;
    mpz_ui_pow_ui(result.get_mpz_t(), 10, exponent);
    return result;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    if (text.empty()) {
        bad_literal(text);
    }

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::string_view num = text.substr(0, slash);
        std::string_view den = text.substr(slash + 1);
        bool negative = !num.empty() && (num[0] == '-' || num[0] == '+');
        std::string_view num_digits = negative ? num.substr(1) : num;
        if (!all_digits(num_digits) || !all_digits(den)) {
            bad_literal(text);
        }
        mpz_class d(std::string(den), 10);
        if (d == 0) {
            bad_literal(text);
        }
        mpz_class n(std::string(num_digits), 10);
        if (num[0] == '-') {
            n = -n;
        }
        Rational r(n, d);
        r.canonicalize();
        return r;
    }

    std::string_view rest = text;
    bool negative = false;
    if (rest[0] == '+' || rest[0] == '-') {
        negative = rest[0] == '-';
        rest.remove_prefix(1);
    }

    long exponent = 0;
    if (auto e = rest.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view exp_text = rest.substr(e + 1);
        rest = rest.substr(0, e);
        bool exp_negative = false;
        if (!exp_text.empty() && (exp_text[0] == '+' || exp_text[0] == '-')) {
            exp_negative = exp_text[0] == '-';
            exp_text.remove_prefix(1);
        }
        if (!all_digits(exp_text) || exp_text.size() > 6) {
            bad_literal(text);
        }
        exponent = std::stol(std::string(exp_text));
        if (exp_negative) {
            exponent = -exponent;
        }
    }

    std::string_view int_part = rest;
    std::string_view frac_part;
    if (auto dot = rest.find('.'); dot != std::string_view::npos) {
        int_part = rest.substr(0, dot);
        frac_part = rest.substr(dot + 1);
    }
    if ((int_part.empty() && frac_part.empty()) || (!int_part.empty() && !all_digits(int_part)) ||
        (!frac_part.empty() && !all_digits(frac_part))) {
        bad_literal(text);
    }

    std::string digits = std::string(int_part) + std::string(frac_part);
    mpz_class numerator(digits, 10);
    if (negative) {
        numerator = -numerator;
    }
    exponent -= static_cast<long>(frac_part.size());

    Rational r;
    if (exponent >= 0) {
        r = Rational(numerator * pow10(static_cast<unsigned long>(exponent)));
    } else {
        r = Rational(numerator, pow10(static_cast<unsigned long>(-exponent)));
        r.canonicalize();
    }
    return r;
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) {
        throw Error(ErrorKind::InvalidArgument, "non-finite value cannot be made exact");
    }
    return Rational(value);
}

std::string to_string(const Rational &value) {
    return value.get_str();
}

}  // namespace locc
