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

#include "sphbraket/legendre_integrals.hpp"

#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>

#include "bounded_memo.hpp"
#include "factorial_table.hpp"
#include "sphbraket/angular_momentum.hpp"
#include "sphbraket/special_functions.hpp"

namespace sphbraket {

namespace {

// Gamma(k/2) for k >= 1 as rational * sqrt(pi)^power.
struct GammaHalf {
    ExactRational value;
    int sqrt_pi_power = 0;
};

GammaHalf gamma_of_half(int k) {
    if (k % 2 == 0) {
        return {ExactRational(detail::factorial_big(k / 2 - 1)), 0};
    }
    // Gamma(s + 1/2) = (2s-1)!! sqrt(pi) / 2^s, with k = 2s + 1
    const int s = (k - 1) / 2;
    return {ExactRational(double_factorial(2 * s - 1), BigInt(1) << s), 1};
}

detail::BoundedMemo<double>& pair_memo() {
    static detail::BoundedMemo<double> memo(1u << 20);
    return memo;
}

detail::BoundedMemo<double>& i0_memo() {
    static detail::BoundedMemo<double> memo(1u << 16);
    return memo;
}

double pair_integral_uncached(int l, int m, int lp, int mp) {
    const int big_m = m + mp;
    const ExactRational prefactor = detail::factorial_ratio(l + m, l - m) *
                                    detail::factorial_ratio(lp + mp, lp - mp);
    CompensatedSum sum;
    for (int j = std::abs(l - lp); j <= l + lp; ++j) {
        if (std::abs(big_m) > j || cg_parity_zero(l, lp, j)) {
            continue;
        }
        // I0(j, M) vanishes unless j + M is even (and j = 0 when M = 0).
        if ((j + big_m) % 2 != 0 || (big_m == 0 && j != 0)) {
            continue;
        }
        const PiRational base = i0_exact(j, big_m);
        if (base.coefficient == 0) {
            continue;
        }
        SignedSqrtRational term(1, prefactor * detail::factorial_ratio(j - big_m, j + big_m));
        term *= clebsch_gordan(l, m, lp, mp, j, big_m);
        term *= clebsch_gordan(l, 0, lp, 0, j, 0);
        if (term.is_zero()) {
            continue;
        }
        term *= base.coefficient;
        sum.add(term.to_double() * (base.times_pi ? std::numbers::pi : 1.0));
    }
    return sum.value();
}

ExactRational guarded_inverse_one_minus_square(int t) {
    if (std::abs(t) == 1) {
        return 0;
    }
    return ExactRational(1) / (1 - t * t);
}

}  // namespace

double PiRational::to_double() const {
    const double c = sphbraket::to_double(coefficient);
    return times_pi ? c * std::numbers::pi : c;
}

PiRational i0_exact(int l, int m) {
    if (l < 0 || std::abs(m) > l) {
        return {0, false};
    }
    if (m == 0) {
        return {l == 0 ? 2 : 0, false};
    }
    if (m < 0) {
        PiRational r = i0_exact(l, -m);
        r.coefficient *= detail::factorial_ratio(l + m, l - m);
        if ((-m) % 2 != 0) {
            r.coefficient = -r.coefficient;
        }
        return r;
    }
    if ((l + m) % 2 != 0) {
        return {0, false};
    }
    // [(-1)^m + (-1)^l] = 2 (-1)^l when l + m is even.
    const GammaHalf g1 = gamma_of_half(l);
    const GammaHalf g2 = gamma_of_half(l + m + 1);
    const GammaHalf g3 = gamma_of_half(l + 3);
    ExactRational value = ExactRational(2 * m) * g1.value * g2.value /
                          (ExactRational(detail::factorial_big((l - m) / 2)) * g3.value);
    // 2^(m-2)
    if (m >= 2) {
        value *= ExactRational(BigInt(1) << (m - 2));
    } else {
        value /= 2;
    }
    if (l % 2 != 0) {
        value = -value;
    }
    const int sqrt_pi_power = g1.sqrt_pi_power + g2.sqrt_pi_power - g3.sqrt_pi_power;
    return {value, sqrt_pi_power == 2};
}

double i0(int l, int m) {
    const auto key = detail::pack_key<32>(l, m);
    if (!key) {
        return i0_exact(l, m).to_double();
    }
    return i0_memo().get_or_compute(*key, [&] { return i0_exact(l, m).to_double(); });
}

double legendre_pair_integral(int l, int m, int lp, int mp) {
    if (l < 0 || lp < 0 || std::abs(m) > l || std::abs(mp) > lp) {
        return 0.0;
    }
    const auto key = detail::pack_key<16>(l, m, lp, mp);
    if (!key) {
        return pair_integral_uncached(l, m, lp, mp);
    }
    return pair_memo().get_or_compute(*key, [&] { return pair_integral_uncached(l, m, lp, mp); });
}

void clear_legendre_integral_cache() {
    pair_memo().clear();
    i0_memo().clear();
}

LegendreExpansion chebyshev_in_legendre(int n) {
    if (n < 0) {
        throw std::domain_error("chebyshev_in_legendre: negative degree");
    }
    LegendreExpansion out;
    if (n == 0) {
        out.add(0, 1);
        return out;
    }
    for (int j = 0; j <= n / 2; ++j) {
        out.add(n - 2 * j, -half_gamma_ratio(j, n) * (1 + 2 * n - 4 * j));
    }
    return out;
}

LegendreExpansion sin_in_assoc_legendre(int n) {
    if (n < 1) {
        throw std::domain_error("sin_in_assoc_legendre: n must be >= 1");
    }
    LegendreExpansion out;
    const LegendreExpansion cosine = chebyshev_in_legendre(n);
    for (const auto& t : cosine.terms()) {
        if (t.index == 0) {
            continue;
        }
        out.add(t.index, -t.coefficient / n);
    }
    return out;
}

ChebyshevExpansion legendre_in_chebyshev(int l) {
    if (l < 0) {
        throw std::domain_error("legendre_in_chebyshev: negative degree");
    }
    ChebyshevExpansion out;
    for (int j = 0; j <= l / 2; ++j) {
        const int deg = l - 2 * j;
        ExactRational a(2 * double_factorial(2 * l - 2 * j - 1) * double_factorial(2 * j - 1),
                        double_factorial(2 * l - 2 * j) * double_factorial(2 * j));
        if (deg == 0) {
            a /= 2;
        }
        out.add(deg, a);
    }
    return out;
}

ExactRational chebyshev_integral(int n) {
    if (n < 0) {
        throw std::domain_error("chebyshev_integral: negative degree");
    }
    if (n % 2 != 0) {
        return 0;
    }
    return ExactRational(2) / (1 - n * n);
}

ExactRational trig_projection(int n, int l) {
    if (n < 0 || l < 0) {
        throw std::domain_error("trig_projection: negative index");
    }
    if ((n + l) % 2 != 0) {
        return 0;
    }
    ExactRational sum = 0;
    const ChebyshevExpansion chebyshev = legendre_in_chebyshev(l);
    for (const auto& t : chebyshev.terms()) {
        // t.index = l - 2j
        sum += t.coefficient * (guarded_inverse_one_minus_square(n + t.index) +
                                guarded_inverse_one_minus_square(n - t.index));
    }
    return sum;
}

LegendreExpansion chebyshev_in_legendre_by_projection(int n) {
    if (n < 0) {
        throw std::domain_error("chebyshev_in_legendre_by_projection: negative degree");
    }
    LegendreExpansion out;
    for (int j = 0; j <= n / 2; ++j) {
        const int l = n - 2 * j;
        out.add(l, ExactRational(2 * l + 1, 2) * trig_projection(n, l));
    }
    return out;
}

}  // namespace sphbraket
