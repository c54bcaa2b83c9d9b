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

#include <vector>

#include "sphbraket/exact.hpp"

namespace sphbraket {

/// Legendre polynomial P_l(x) by the three-term recurrence
/// (l+1) P_{l+1} = (2l+1) x P_l - l P_{l-1}.
///
/// Throws std::domain_error for l < 0 or |x| > 1.
double legendre_p(int l, double x);

/// Associated Legendre function P_l^m(x), Condon-Shortley phase included, so
/// P_1^1(x) = -sqrt(1 - x^2). Negative orders use
/// P_l^{-m} = (-1)^m (l-m)!/(l+m)! P_l^m.
///
/// Throws std::domain_error for l < 0, |m| > l or |x| > 1.
double assoc_legendre_p(int l, int m, double x);

/// Chebyshev polynomial of the first kind, T_n(cos t) = cos(n t).
double chebyshev_t(int n, double x);

/// Exact value of n Gamma(j - 1/2) Gamma(n - j) / (8 j! Gamma(3/2 + n - j))
/// for 0 <= j <= floor(n/2), n >= 1.
///
/// The half-integer gammas are written as Gamma(k + 1/2) = (2k-1)!! sqrt(pi) / 2^k
/// (valid down to k = -1 with (-3)!! = -1), so the sqrt(pi) factors cancel.
ExactRational half_gamma_ratio(int j, int n);

/// n!! with (-1)!! = 1, (-3)!! = -1 and 0!! = 1. Throws for n < -3.
BigInt double_factorial(int n);

/// Sentinel for the gamma -> 0 (Chebyshev) limit of gegenbauer_connection.
inline constexpr double kChebyshevLimit = 0.0;

/// Connection coefficients expressing C^gamma_n in the C^beta_{n-2j} family,
/// j = 0..floor(n/2):
///
///   c_j = (gamma-beta)_j (gamma)_{n-j} / (j! (beta+1)_{n-j}) * (beta+n-2j)/beta
///
/// For gamma == 0 the result is the limit of (n+2 gamma)/(2 gamma) * c_j, i.e.
/// the coefficients of T_n itself, so gegenbauer_connection(0, 0.5, n)
/// reproduces chebyshev_in_legendre(n).
///
/// Requires beta > -1/2, beta != 0, and gamma > -1/2 (gamma == 0 selects the
/// limit). Throws std::domain_error otherwise.
std::vector<double> gegenbauer_connection(double gamma, double beta, int n);

}  // namespace sphbraket
