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

#include <sstream>

#include "gtest/gtest.h"
#include "properties.hpp"

using namespace locc;

namespace {

const std::vector<std::string> kPsi6{"0.24", "0.22", "0.22", "0.19", "0.10", "0.03"};
const std::vector<std::string> kPhi6{"0.27", "0.25", "0.16", "0.16", "0.15", "0.01"};

Rational q(long n, long d) {
    Rational r(n, d);
    r.canonicalize();
    return r;
}

ExactSpectrum exact(const std::vector<std::string> &v) {
    return make_spectrum<Rational>(std::span<const std::string>(v));
}

}  // namespace

TEST(spectrum, make_sorts_descending) {
    auto s = make_spectrum<double>({0.3, 0.7});
    ASSERT_EQ(s.dimension(), 2u);
    EXPECT_EQ(s[0], 0.7);
    EXPECT_EQ(s[1], 0.3);
    EXPECT_EQ(make_spectrum<double>({1.0}).values()[0], 1.0);
}

TEST(spectrum, make_normalizes) {
    auto s = make_spectrum<double>({2, 1, 1});
    EXPECT_EQ(s[0], 0.5);
    EXPECT_EQ(s[1], 0.25);
    EXPECT_EQ(s[2], 0.25);

    auto e = make_spectrum<Rational>({Rational(2), Rational(1), Rational(1)});
    EXPECT_EQ(e[0], Rational(1, 2));
    EXPECT_EQ(e[2], Rational(1, 4));
}

TEST(spectrum, make_errors_are_distinct) {
    auto kind_of = [](std::vector<double> raw) {
        try {
            make_spectrum(std::move(raw));
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::InvalidArgument;
    };
    EXPECT_EQ(kind_of({}), ErrorKind::EmptyInput);
    EXPECT_EQ(kind_of({0.5, -0.1}), ErrorKind::NegativeEntry);
    EXPECT_EQ(kind_of({0.0, 0.0}), ErrorKind::ZeroMass);
    EXPECT_THROW(make_spectrum<Rational>({Rational(-1, 2), Rational(1)}), Error);
}

TEST(spectrum, rational_mode_keeps_decimal_values) {
    auto e = exact(kPsi6);
    EXPECT_EQ(e[0], q(24, 100));
    EXPECT_EQ(e[5], q(3, 100));
    Rational total = 0;
    for (const auto &x : e.values()) {
        total += x;
    }
    EXPECT_EQ(total, 1);
}

TEST(spectrum, prefix_sums) {
    auto p = prefix_sums(make_spectrum<double>({0.5, 0.3, 0.2})).partial;
    ASSERT_EQ(p.size(), 3u);
    EXPECT_DOUBLE_EQ(p[0], 0.5);
    EXPECT_DOUBLE_EQ(p[1], 0.8);
    EXPECT_DOUBLE_EQ(p[2], 1.0);
    EXPECT_EQ(prefix_sums(make_spectrum<double>({1.0})).partial, std::vector<double>{1.0});

    auto exact_p = prefix_sums(exact(kPsi6)).partial;
    std::vector<Rational> expected{
        q(24, 100), q(46, 100), q(68, 100), Rational(87, 100), Rational(97, 100), Rational(1)};
    EXPECT_EQ(exact_p, expected);
}

TEST(spectrum, prefix_sums_monotone_and_end_at_one) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto s = sample_spectrum(1 + i % 9, RngStream{11, i});
        auto p = prefix_sums(s).partial;
        for (std::size_t m = 1; m < p.size(); ++m) {
            ASSERT_LE(p[m - 1], p[m]);
        }
        EXPECT_NEAR(p.back(), 1.0, 1e-12);
        EXPECT_EQ(prefix_sums(to_exact(s)).partial.back(), 1);
    }
}

TEST(spectrum, uniform_is_majorized_by_everything) {
    for (std::uint64_t i = 0; i < 100; ++i) {
        std::size_t d = 2 + i % 8;
        auto target = sample_spectrum(d, RngStream{3, i});
        auto uniform = make_spectrum(std::vector<double>(d, 1.0));
        EXPECT_TRUE(majorizes(target, uniform).holds);
        EXPECT_TRUE(majorizes(to_exact(target), to_exact(uniform)).holds);
    }
}

TEST(spectrum, paper_d6_single_copy_fails_at_four) {
    auto v = majorizes(exact(kPhi6), exact(kPsi6));
    EXPECT_FALSE(v.holds);
    EXPECT_EQ(v.first_violation, 4u);
    // In float mode the exact tie at m=3 (0.68 = 0.68) may round either way.
    auto fv = majorizes(
        make_spectrum<double>(std::span<const std::string>(kPhi6)),
        make_spectrum<double>(std::span<const std::string>(kPsi6)));
    EXPECT_FALSE(fv.holds);
    EXPECT_GE(*fv.first_violation, 3u);
    EXPECT_LE(*fv.first_violation, 4u);
}

TEST(spectrum, majorizes_rejects_length_mismatch) {
    EXPECT_THROW(majorizes(make_spectrum<double>({1.0}), make_spectrum<double>({0.5, 0.5})), Error);
}

TEST(spectrum, verdict_invariant) {
    for (std::uint64_t i = 0; i < 500; ++i) {
        auto a = sample_spectrum(4, RngStream{5, i});
        auto b = sample_spectrum(4, RngStream{6, i});
        auto v = majorizes(a, b);
        EXPECT_EQ(v.holds, !v.first_violation.has_value());
    }
}

TEST(spectrum, zero_tail_is_not_a_violation) {
    // Dyadic values keep the ties exact in binary.
    auto a = make_spectrum<double>({0.5, 0.5, 0.0, 0.0});
    auto b = make_spectrum<double>({0.5, 0.5, 0.0, 0.0});
    EXPECT_TRUE(majorizes(a, b).holds);
    auto c = make_spectrum<double>({0.5, 0.25, 0.25, 0.0});
    EXPECT_TRUE(majorizes(a, c).holds);
    EXPECT_FALSE(majorizes(c, a).holds);
    EXPECT_EQ(majorizes(c, a).first_violation, 2u);
}

TEST(spectrum, entropy) {
    EXPECT_EQ(entropy(make_spectrum<double>({1.0})), 0.0);
    EXPECT_DOUBLE_EQ(entropy(make_spectrum<double>({0.5, 0.5})), 1.0);
    EXPECT_DOUBLE_EQ(entropy(make_spectrum(std::vector<double>(8, 0.125))), 3.0);
    EXPECT_DOUBLE_EQ(entropy(make_spectrum<double>({0.5, 0.5, 0.0})), 1.0);
    EXPECT_DOUBLE_EQ(entropy(make_spectrum<Rational>({Rational(1, 2), Rational(1, 2)})), 1.0);
}

TEST(spectrum, text_format) {
    std::istringstream in("# comment\n0.3, 0.7\n\n  1 2 1\n# 5 5\n3/4 1/4\n");
    auto spectra = read_spectra<Rational>(in);
    ASSERT_EQ(spectra.size(), 3u);
    EXPECT_EQ(spectra[0][0], Rational(7, 10));
    EXPECT_EQ(spectra[1][0], Rational(1, 2));
    EXPECT_EQ(spectra[2][1], Rational(1, 4));

    std::istringstream bad("0.5 x\n");
    EXPECT_THROW(read_spectra<double>(bad), Error);
}

TEST(spectrum, float_format_round_trips) {
    for (std::uint64_t i = 0; i < 200; ++i) {
        auto s = sample_spectrum(6, RngStream{9, i});
        std::istringstream in(format_spectrum(s));
        auto back = read_spectra<double>(in);
        ASSERT_EQ(back.size(), 1u);
        for (std::size_t j = 0; j < s.dimension(); ++j) {
            // Reparsing renormalizes, which may move the last bit.
            EXPECT_NEAR(back[0][j], s[j], 4e-16);
            EXPECT_EQ(parse_double(format_double(s[j])), s[j]);
        }
    }
}

TEST(spectrum_properties, reflexivity) {
    auto r = locc_test::majorization_reflexivity(10'000, 101);
    EXPECT_EQ(r.failures, 0u);
}

TEST(spectrum_properties, transitivity) {
    auto r = locc_test::majorization_transitivity(10'000, 102);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_GT(r.exercised, 1000u);
}

TEST(spectrum_properties, antisymmetry) {
    auto r = locc_test::majorization_antisymmetry(10'000, 103);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_GT(r.exercised, 1000u);
}

TEST(spectrum_properties, schur_concavity) {
    auto r = locc_test::schur_concavity(10'000, 104);
    EXPECT_EQ(r.failures, 0u);
    EXPECT_GT(r.exercised, 1000u);
}

TEST(spectrum_properties, float_and_exact_agree_on_paper_grid) {
    // Multiples of 1e-3, like the published spectra; exact mode is authoritative
    // whenever a prefix gap is below 1e-9.
    for (std::uint64_t i = 0; i < 2000; ++i) {
        StreamEngine rng({107, i});
        std::size_t d = 2 + rng() % 6;
        auto grid = [&] {
            std::vector<std::string> lits;
            for (std::size_t j = 0; j < d; ++j) {
                lits.push_back(std::to_string(1 + rng() % 300) + "e-3");
            }
            return lits;
        };
        auto t = grid(), s = grid();
        auto et = make_spectrum<Rational>(std::span<const std::string>(t));
        auto es = make_spectrum<Rational>(std::span<const std::string>(s));
        auto ft = make_spectrum<double>(std::span<const std::string>(t));
        auto fs = make_spectrum<double>(std::span<const std::string>(s));
        bool tiny_gap = false;
        Rational gap = 0;
        for (std::size_t m = 0; m + 1 < d; ++m) {
            gap += et[m] - es[m];
            tiny_gap = tiny_gap || abs(gap) < Rational(1, 1'000'000'000);
        }
        if (!tiny_gap) {
            EXPECT_EQ(majorizes(ft, fs).holds, majorizes(et, es).holds);
        }
    }
}
