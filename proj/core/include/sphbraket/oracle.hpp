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

#include <complex>
#include <functional>
#include <memory>
#include <vector>

#include "sphbraket/fourier_series.hpp"
#include "sphbraket/query.hpp"

// Brute-force quadrature of the defining sphere integrals. Nothing in here
// touches the closed forms; the only shared code is polynomial evaluation
// from special_functions.
namespace sphbraket::oracle {

struct QuadratureSpec {
    int theta_nodes = 200;
    int phi_nodes = 256;

    /// Throws std::invalid_argument when a node count is below 8.
    void validate() const;
};

/// Gauss-Legendre nodes and weights on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// n-point rule, computed once per n by Newton iteration on P_n and shared
/// read-only afterwards.
std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n);

/// Orthonormalization constant of Y_{l,m}:
/// sqrt((2l+1)/(4 pi) (l-m)!/(l+m)!).
double harmonic_norm(int l, int m);

/// Y_{l,m}(theta, phi) from the associated Legendre function.
std::complex<double> spherical_harmonic(int l, int m, double theta, double phi);

/// <bra| e^{ik phi} trig(n theta) |ket> with the phi integral done
/// analytically (2 pi delta_{m1, m2+k}) and the theta integral by
/// Gauss-Legendre on [0, pi].
double quadrature_overlap(const BraKetQuery& q, const QuadratureSpec& spec = {});

using AngularFunction = std::function<std::complex<double>(double theta, double phi)>;

/// <bra| f |ket> by tensor-product quadrature: Gauss-Legendre in theta,
/// periodic trapezoid in phi. Throws std::domain_error on a non-finite sample.
std::complex<double> quadrature_function_overlap(const HarmonicIndex& bra, const HarmonicIndex& ket,
                                                 const AngularFunction& f,
                                                 const QuadratureSpec& spec = {});

/// Uniform sampling grid used for numeric Fourier projection: theta over
/// [0, 2 pi), phi over [0, 2 pi).
struct FourierGrid {
    int theta_points = 0;
    int phi_points = 0;

    double theta(int a) const;
    double phi(int b) const;
};

/// Grid large enough to resolve |n| <= n_max and |k| <= k_max without
/// aliasing, and at least as fine as the spec's node counts.
FourierGrid fourier_grid(int n_max, int k_max, const QuadratureSpec& spec = {});

/// Discrete projection of f onto e^{ik phi} cos(n theta), e^{ik phi} sin(n theta)
/// for 0 <= n <= n_max, |k| <= k_max. f is sampled on the full theta circle so
/// that the cos and sin families separate. Only real parts of the projections
/// are kept (the reconstruction residual exposes any imaginary content);
/// projections below 1e-13 relative to the largest sample are dropped.
/// Throws std::domain_error on non-finite samples, std::invalid_argument on
/// negative cutoffs.
FourierSeries numeric_fourier_coefficients(const AngularFunction& f, int n_max, int k_max,
                                           const QuadratureSpec& spec = {});

}  // namespace sphbraket::oracle
