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
#include "oracles.hpp"
#include "sphbraket/special_functions.hpp"

using namespace sphbraket;

namespace {

double sample_x(int i, int count) {
    return -1.0 + 2.0 * i / (count - 1);
}

double factorial_d(int n) {
    return std::tgamma(n + 1.0);
}

}  // namespace

TEST_CASE("legendre_p small values") {
    CHECK(legendre_p(0, 0.3) == 1.0);
    for (double x : {-0.9, -0.2, 0.0, 0.4, 0.77}) {
        CHECK(legendre_p(1, x) == doctest::Approx(x).epsilon(1e-15));
    }
    CHECK(legendre_p(2, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
    for (int l = 0; l <= 20; ++l) {
        CHECK(legendre_p(l, 1.0) == 1.0);
        CHECK(legendre_p(l, -1.0) == (l % 2 == 0 ? 1.0 : -1.0));
    }
}

TEST_CASE("recurrences match monomial polynomials") {
    for (int l = 0; l <= 6; ++l) {
        const auto pl = oracles::legendre_poly(l);
        const auto tl = oracles::chebyshev_poly(l);
        for (int i = 0; i < 100; ++i) {
            const double x = sample_x(i, 100);
            CHECK(std::abs(legendre_p(l, x) - oracles::poly_eval(pl, x)) < 1e-13);
            CHECK(std::abs(chebyshev_t(l, x) - oracles::poly_eval(tl, x)) < 1e-13);
        }
    }
}

TEST_CASE("chebyshev_t") {
    CHECK(chebyshev_t(0, 0.123) == 1.0);
    CHECK(chebyshev_t(2, 0.5) == doctest::Approx(-0.5).epsilon(1e-15));
    CHECK(chebyshev_t(5, std::cos(0.3)) == doctest::Approx(std::cos(1.5)).epsilon(1e-14));
    for (int n = 0; n <= 40; ++n) {
        for (double t : {0.1, 0.9, 2.0, 3.1}) {
            CHECK(std::abs(chebyshev_t(n, std::cos(t)) - std::cos(n * t)) < 1e-12);
        }
    }
}

TEST_CASE("assoc_legendre_p values and Condon-Shortley phase") {
    CHECK(assoc_legendre_p(1, 1, 0.0) == doctest::Approx(-1.0));
    CHECK(assoc_legendre_p(1, -1, 0.0) == doctest::Approx(0.5));
    for (double x : {-0.8, -0.1, 0.3, 0.95}) {
        const double s = std::sqrt(1 - x * x);
        CHECK(assoc_legendre_p(2, 1, x) == doctest::Approx(-3 * x * s).epsilon(1e-14));
        CHECK(assoc_legendre_p(2, 2, x) == doctest::Approx(3 * (1 - x * x)).epsilon(1e-14));
        CHECK(assoc_legendre_p(3, 3, x) == doctest::Approx(-15 * s * s * s).epsilon(1e-14));
        for (int l = 0; l <= 8; ++l) {
            CHECK(assoc_legendre_p(l, 0, x) == doctest::Approx(legendre_p(l, x)).epsilon(1e-14));
        }
    }
}

TEST_CASE("negative order relation holds for l <= 10") {
    for (int l = 0; l <= 10; ++l) {
        for (int m = 0; m <= l; ++m) {
            for (int i = 0; i < 25; ++i) {
                const double x = sample_x(i, 25);
                const double lhs = assoc_legendre_p(l, -m, x) * (m % 2 == 0 ? 1 : -1) *
                                   factorial_d(l + m) / factorial_d(l - m);
                const double rhs = assoc_legendre_p(l, m, x);
                CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
            }
        }
    }
}

TEST_CASE("domain errors") {
    CHECK_THROWS_AS(legendre_p(-1, 0.0), std::domain_error);
    CHECK_THROWS_AS(legendre_p(2, 1.5), std::domain_error);
    CHECK_THROWS_AS(assoc_legendre_p(1, 2, 0.0), std::domain_error);
    CHECK_THROWS_AS(chebyshev_t(-1, 0.0), std::domain_error);
    CHECK_THROWS_AS(half_gamma_ratio(2, 3), std::domain_error);
    CHECK_THROWS_AS(double_factorial(-4), std::domain_error);
}

TEST_CASE("half_gamma_ratio exact values") {
    CHECK(half_gamma_ratio(0, 1) == ExactRational(-1, 3));
    // 2 Gamma(-1/2) Gamma(2) / (8 Gamma(7/2)) = 2 (-2) / (8 * 15/8)
    CHECK(half_gamma_ratio(0, 2) == ExactRational(-4, 15));
}

TEST_CASE("half_gamma_ratio matches floating gamma") {
    for (int n = 1; n <= 30; ++n) {
        for (int j = 0; j <= n / 2; ++j) {
            const long double v = n * std::tgamma(j - 0.5L) * std::tgamma(static_cast<long double>(n - j)) /
                                  (8 * std::tgamma(j + 1.0L) * std::tgamma(1.5L + n - j));
            const double exact = to_double(half_gamma_ratio(j, n));
            CHECK(std::abs(exact - static_cast<double>(v)) <= 1e-12 * std::abs(exact));
        }
    }
}

TEST_CASE("half_gamma_ratio reproduces Chebyshev-in-Legendre division") {
    for (int n = 1; n <= 12; ++n) {
        const auto coeffs = oracles::divide_into_legendre(oracles::chebyshev_poly(n));
        for (int j = 0; j <= n / 2; ++j) {
            const ExactRational c = -half_gamma_ratio(j, n) * (1 + 2 * n - 4 * j);
            CHECK(c == coeffs[n - 2 * j]);
        }
    }
}

TEST_CASE("double_factorial conventions") {
    CHECK(double_factorial(5) == 15);
    CHECK(double_factorial(6) == 48);
    CHECK(double_factorial(0) == 1);
    CHECK(double_factorial(-1) == 1);
    CHECK(double_factorial(-3) == -1);
}

TEST_CASE("gegenbauer_connection") {
    for (int n = 0; n <= 6; ++n) {
        const auto c = gegenbauer_connection(0.5, 0.5, n);
        REQUIRE(c.size() == static_cast<std::size_t>(n / 2 + 1));
        CHECK(c[0] == doctest::Approx(1.0));
        for (std::size_t j = 1; j < c.size(); ++j) {
            CHECK(c[j] == doctest::Approx(0.0));
        }
    }
    const auto t1 = gegenbauer_connection(kChebyshevLimit, 0.5, 1);
    REQUIRE(t1.size() == 1);
    CHECK(t1[0] == doctest::Approx(1.0));
    // T_2 = (4/3) P_2 - (1/3) P_0
    const auto t2 = gegenbauer_connection(kChebyshevLimit, 0.5, 2);
    REQUIRE(t2.size() == 2);
    CHECK(t2[0] == doctest::Approx(4.0 / 3.0));
    CHECK(t2[1] == doctest::Approx(-1.0 / 3.0));
    for (int n = 1; n <= 12; ++n) {
        const auto c = gegenbauer_connection(kChebyshevLimit, 0.5, n);
        const auto coeffs = oracles::divide_into_legendre(oracles::chebyshev_poly(n));
        for (int j = 0; j <= n / 2; ++j) {
            const double ref = to_double(coeffs[n - 2 * j]);
            CHECK(c[j] == doctest::Approx(ref).epsilon(1e-13));
        }
    }
    CHECK_THROWS(gegenbauer_connection(0.5, -0.7, 2));
    CHECK_THROWS(gegenbauer_connection(0.5, 0.0, 2));
}
