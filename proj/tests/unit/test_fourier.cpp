/*
 * Copyright (c) 2026, The sphbraket Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "doctest.h"
#include "sphbraket/fourier_driver.hpp"

using namespace sphbraket;

TEST_CASE("TrigTerm normalization") {
    CHECK(TrigTerm::normalized(TrigKind::Cos, -3, 2) == std::pair{TrigTerm{TrigKind::Cos, 3, 2}, 1});
    CHECK(TrigTerm::normalized(TrigKind::Sin, -3, 2) == std::pair{TrigTerm{TrigKind::Sin, 3, 2}, -1});
    CHECK(TrigTerm{TrigKind::Sin, 0, 1}.is_zero_operator());
    CHECK(parse_trig_kind("sin") == TrigKind::Sin);
    CHECK_THROWS_AS(parse_trig_kind("tan"), std::invalid_argument);
}

TEST_CASE("FourierSeries keeps its invariants") {
    FourierSeries f;
    f.add(TrigKind::Sin, 0, 1, 3.0);
    f.add(TrigKind::Cos, 2, 0, 0.0);
    CHECK(f.empty());
    f.add(TrigKind::Sin, -2, 1, 1.5);
    CHECK(f.coefficient(TrigKind::Sin, 2, 1) == -1.5);
    f.add(TrigKind::Sin, 2, 1, 1.5);
    CHECK(f.empty());
    f.add(TrigKind::Cos, 1, 2, 2.0);
    const auto [re, im] = f.evaluate(0.3, 0.7);
    CHECK(re == doctest::Approx(2.0 * std::cos(0.3) * std::cos(1.4)));
    CHECK(im == doctest::Approx(2.0 * std::cos(0.3) * std::sin(1.4)));
}

TEST_CASE("sin_power_expand") {
    const auto q1 = sin_power_expand(1);
    CHECK(q1.size() == 2);
    CHECK(q1.coefficient(TrigKind::Cos, 0, 0) == 0.5);
    CHECK(q1.coefficient(TrigKind::Cos, 2, 0) == -0.5);
    const auto q2 = sin_power_expand(2);
    CHECK(q2.size() == 3);
    CHECK(q2.coefficient(TrigKind::Cos, 0, 0) == 0.375);
    CHECK(q2.coefficient(TrigKind::Cos, 2, 0) == -0.5);
    CHECK(q2.coefficient(TrigKind::Cos, 4, 0) == 0.125);
    for (int q = 1; q <= 8; ++q) {
        const auto f = sin_power_expand(q);
        for (const auto& [term, c] : f.terms()) {
            CHECK(term.k == 0);
        }
        for (int i = 0; i < 100; ++i) {
            const double t = 2 * std::numbers::pi * i / 100;
            CHECK(std::abs(f.evaluate(t, 0.0).first - std::pow(std::sin(t), 2 * q)) < 1e-13);
        }
    }
    CHECK_THROWS_AS(sin_power_expand(0), std::invalid_argument);
}

TEST_CASE("effective_mass_coupling examples") {
    CHECK(effective_mass_coupling({1, 0.0, 1.0}, 2) == CouplingMatrix::identity(2));

    const auto m = effective_mass_coupling({1, 1.0, 0.0}, 3);
    const auto f = [](double t, double) { return std::complex<double>(std::sin(t) * std::sin(t), 0.0); };
    for (int r = 0; r < m.dimension(); ++r) {
        for (int c = 0; c < m.dimension(); ++c) {
            const auto ref = oracle::quadrature_function_overlap(CouplingMatrix::harmonic(r),
                                                                 CouplingMatrix::harmonic(c), f);
            CHECK(std::abs(m(r, c) - ref.real()) < 1e-10);
        }
    }

    auto expect = effective_mass_coupling({2, 1.0, 0.0}, 4);
    expect *= 2.0;
    expect.add_scaled(0.5, CouplingMatrix::identity(4));
    CHECK(effective_mass_coupling({2, 2.0, 0.5}, 4) == expect);

    CHECK_THROWS_AS(effective_mass_coupling({0, 1.0, 0.0}, 2), std::invalid_argument);
    CHECK_THROWS_AS(effective_mass_coupling({1, NAN, 0.0}, 2), std::invalid_argument);
}

TEST_CASE("effective mass matrices are symmetric, m-diagonal and banded") {
    for (int q = 1; q <= 3; ++q) {
        const auto m = effective_mass_coupling({q, 1.3, 0.2}, 7);
        for (int r = 0; r < m.dimension(); ++r) {
            for (int c = 0; c < m.dimension(); ++c) {
                const auto a = CouplingMatrix::harmonic(r);
                const auto b = CouplingMatrix::harmonic(c);
                CHECK(std::abs(m(r, c) - m(c, r)) < 1e-12);
                if (a.m != b.m) {
                    CHECK(m(r, c) == 0.0);
                }
                if (std::abs(a.l - b.l) > 2 * q) {
                    CHECK(std::abs(m(r, c)) < 1e-12);
                }
            }
        }
    }
}

TEST_CASE("series_from_samples") {
    const auto cos3 = [](double t, double) { return std::complex<double>(std::cos(3 * t), 0.0); };
    const auto a = series_from_samples(cos3, 5, 1);
    CHECK(a.series.size() == 1);
    CHECK(a.series.coefficient(TrigKind::Cos, 3, 0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(a.residual < 1e-12);

    const auto sin4 = [](double t, double) { return std::complex<double>(std::pow(std::sin(t), 4), 0.0); };
    const auto b = series_from_samples(sin4, 6, 0);
    const auto ref = sin_power_expand(2);
    for (const auto& [term, c] : ref.terms()) {
        CHECK(std::abs(b.series.coefficient(term.kind, term.n, term.k) - c) < 1e-10);
    }
    CHECK(b.series.size() == ref.size());

    const auto high = [](double t, double) { return std::complex<double>(std::cos(9 * t), 0.0); };
    CHECK(series_from_samples(high, 4, 0).residual > 0.1);
}
