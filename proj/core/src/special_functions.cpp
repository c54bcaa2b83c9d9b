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

#include "sphbraket/special_functions.hpp"

#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace sphbraket {

namespace {

void require_unit_interval(double x, const char* who) {
    if (!(x >= -1.0 && x <= 1.0)) {
        throw std::domain_error(std::string(who) + ": argument outside [-1, 1]");
    }
}

double pochhammer(double a, int k) {
    double r = 1.0;
    for (int i = 0; i < k; ++i) {
        r *= a + i;
    }
    return r;
}

// Gamma(k + 1/2) / sqrt(pi) for k >= -1.
ExactRational gamma_half_over_sqrt_pi(int k) {
    ExactRational r(double_factorial(2 * k - 1));
    if (k >= 0) {
        r /= ExactRational(BigInt(1) << k);
    } else {
        r *= ExactRational(BigInt(1) << -k);
    }
    return r;
}

}  // namespace

double legendre_p(int l, double x) {
    if (l < 0) {
        throw std::domain_error("legendre_p: negative degree");
    }
    require_unit_interval(x, "legendre_p");
    if (l == 0) {
        return 1.0;
    }
    double p_prev = 1.0;
    double p = x;
    for (int k = 1; k < l; ++k) {
        const double next = ((2 * k + 1) * x * p - k * p_prev) / (k + 1);
        p_prev = p;
        p = next;
    }
    return p;
}

double assoc_legendre_p(int l, int m, double x) {
    if (l < 0) {
        throw std::domain_error("assoc_legendre_p: negative degree");
    }
    if (std::abs(m) > l) {
        throw std::domain_error("assoc_legendre_p: |m| > l");
    }
    require_unit_interval(x, "assoc_legendre_p");

    const int am = std::abs(m);
    // P_m^m = (-1)^m (2m-1)!! (1-x^2)^{m/2}
    double pmm = 1.0;
    const double somx2 = std::sqrt((1.0 - x) * (1.0 + x));
    double odd = 1.0;
    for (int i = 1; i <= am; ++i) {
        pmm *= -odd * somx2;
        odd += 2.0;
    }
    double value = pmm;
    if (l > am) {
        double p_prev = pmm;
        double p = x * (2 * am + 1) * pmm;
        for (int ll = am + 2; ll <= l; ++ll) {
            const double next = (x * (2 * ll - 1) * p - (ll + am - 1) * p_prev) / (ll - am);
            p_prev = p;
            p = next;
        }
        value = p;
    }
    if (m < 0) {
        // (l-|m|)!/(l+|m|)!
        double ratio = 1.0;
        for (int i = l - am + 1; i <= l + am; ++i) {
            ratio /= i;
        }
        value *= (am % 2 == 0 ? 1.0 : -1.0) * ratio;
    }
    return value;
}

double chebyshev_t(int n, double x) {
    if (n < 0) {
        throw std::domain_error("chebyshev_t: negative degree");
    }
    require_unit_interval(x, "chebyshev_t");
    if (n == 0) {
        return 1.0;
    }
    double t_prev = 1.0;
    double t = x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * t - t_prev;
        t_prev = t;
        t = next;
    }
    return t;
}

BigInt double_factorial(int n) {
    if (n < -3) {
        throw std::domain_error("double_factorial: argument below -3");
    }
    if (n == -3) {
        return -1;
    }
    BigInt r = 1;
    for (int i = n; i > 1; i -= 2) {
        r *= i;
    }
    return r;
}

ExactRational half_gamma_ratio(int j, int n) {
    if (n < 1) {
        throw std::domain_error("half_gamma_ratio: n must be >= 1");
    }
    if (j < 0 || j > n / 2) {
        throw std::domain_error("half_gamma_ratio: j outside [0, floor(n/2)]");
    }
    // n Gamma(j-1/2) Gamma(n-j) / (8 j! Gamma(n-j+3/2))
    const ExactRational num = ExactRational(n) * gamma_half_over_sqrt_pi(j - 1) *
                              ExactRational(factorial(n - j - 1));
    const ExactRational den = ExactRational(8) * ExactRational(factorial(j)) *
                              gamma_half_over_sqrt_pi(n - j + 1);
    return num / den;
}

std::vector<double> gegenbauer_connection(double gamma, double beta, int n) {
    if (n < 0) {
        throw std::domain_error("gegenbauer_connection: negative degree");
    }
    if (!(beta > -0.5) || beta == 0.0) {
        throw std::domain_error("gegenbauer_connection: beta must satisfy beta > -1/2, beta != 0");
    }
    if (!(gamma > -0.5)) {
        throw std::domain_error("gegenbauer_connection: gamma must satisfy gamma > -1/2");
    }

    std::vector<double> coeffs;
    coeffs.reserve(n / 2 + 1);
    const bool chebyshev = (gamma == kChebyshevLimit);
    if (chebyshev && n == 0) {
        coeffs.push_back(1.0);
        return coeffs;
    }
    for (int j = 0; j <= n / 2; ++j) {
        double jfact = 1.0;
        for (int i = 2; i <= j; ++i) {
            jfact *= i;
        }
        double c = pochhammer(gamma - beta, j) / (jfact * pochhammer(beta + 1.0, n - j)) *
                   ((beta + n - 2 * j) / beta);
        if (chebyshev) {
            // (n + 2g)/(2g) * (g)_{n-j} -> (n/2) (n-j-1)!  as g -> 0, n - j >= 1
            double f = 1.0;
            for (int i = 2; i < n - j; ++i) {
                f *= i;
            }
            c *= 0.5 * n * f;
        } else {
            c *= pochhammer(gamma, n - j);
        }
        coeffs.push_back(c);
    }
    return coeffs;
}

}  // namespace sphbraket
