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

#pragma once

#include "sphbraket/exact.hpp"

namespace sphbraket {

/// A value of the form coefficient * pi^(times_pi ? 1 : 0).
struct PiRational {
    ExactRational coefficient;
    bool times_pi = false;

    double to_double() const;
    friend bool operator==(const PiRational&, const PiRational&) = default;
};

/// Exact I0(l, m) = integral over [-1, 1] of P_l^m(x) dx (Condon-Shortley
/// phase). Zero for |m| > l or negative l.
///
/// m > 0 uses
///   [(-1)^m + (-1)^l] 2^(m-2) m Gamma(l/2) Gamma((l+m+1)/2) / (((l-m)/2)! Gamma((l+3)/2)),
/// whose half-integer gammas leave either a rational or a rational times pi.
/// l = m = 0 is dispatched before the formula (Gamma(0) pole); m < 0 uses
/// I0(l, m) = (-1)^m (l+m)!/(l-m)! I0(l, -m).
PiRational i0_exact(int l, int m);

/// Floating-point I0(l, m), memoized.
double i0(int l, int m);

/// I(l, m, lp, mp) = integral over [-1, 1] of P_l^m(x) P_lp^mp(x) dx, zero when
/// either order is out of range. Evaluated as a Clebsch-Gordan sum over
/// I0(j, m + mp); each term is formed exactly and converted once. Memoized.
double legendre_pair_integral(int l, int m, int lp, int mp);

/// cos(n t) = sum_l a_l P_l(cos t): the coefficients
/// a_{n-2j} = -half_gamma_ratio(j, n) (1 + 2n - 4j). n = 0 gives {P_0: 1}.
/// Throws std::domain_error for n < 0.
LegendreExpansion chebyshev_in_legendre(int n);

/// sin(n t) = sum_l b_l P_l^1(cos t) with b_l = -a_l / n, n >= 1. The l = 0
/// term is dropped since P_0^1 vanishes identically.
LegendreExpansion sin_in_assoc_legendre(int n);

/// P_l(cos t) = sum_j a_{l,j} T_{l-2j}(cos t) with
/// a_{l,j} = 2 (2l-2j-1)!! (2j-1)!! / ((1 + delta_{l-2j,0}) (2l-2j)!! (2j)!!).
ChebyshevExpansion legendre_in_chebyshev(int l);

/// Integral over [-1, 1] of T_n(x) dx = ((-1)^n + 1)/(1 - n^2), zero at n = 1.
ExactRational chebyshev_integral(int n);

/// I_{n,l} = integral over [0, pi] of sin t cos(n t) P_l(cos t) dt, exact,
/// via the Chebyshev expansion of P_l and the product rule
/// T_a T_b = (T_{a+b} + T_{|a-b|}) / 2.
ExactRational trig_projection(int n, int l);

/// Same coefficients as chebyshev_in_legendre(n), obtained instead by
/// Legendre orthogonality: a_l = (l + 1/2) I_{n,l}.
LegendreExpansion chebyshev_in_legendre_by_projection(int n);

/// Drops memoized pair integrals and I0 values.
void clear_legendre_integral_cache();

}  // namespace sphbraket
