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

#include "sphbraket/fourier_driver.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>

#include "sphbraket/exact.hpp"

namespace sphbraket {

namespace {

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
    }
    return r;
}

}  // namespace

FourierSeries sin_power_expand(int q) {
    if (q < 1) {
        throw std::invalid_argument("sin_power_expand: q must be >= 1");
    }
    const BigInt scale = BigInt(1) << (2 * q);
    FourierSeries out;
    out.add(TrigKind::Cos, 0, 0, to_double(ExactRational(binomial(2 * q, q), scale)));
    for (int j = 0; j < q; ++j) {
        ExactRational c(2 * binomial(2 * q, j), scale);
        if ((q - j) % 2 != 0) {
            c = -c;
        }
        out.add(TrigKind::Cos, 2 * q - 2 * j, 0, to_double(c));
    }
    return out;
}

void EffectiveMassProfile::validate() const {
    if (q < 1) {
        throw std::invalid_argument("effective-mass profile: q must be >= 1");
    }
    if (!std::isfinite(mu_r_sq) || !std::isfinite(mu_0_sq)) {
        throw std::invalid_argument("effective-mass profile: coefficients must be finite");
    }
}

CouplingMatrix effective_mass_coupling(const EffectiveMassProfile& profile, int truncation,
                                       EvalMethod method, const AssemblyOptions& options) {
    profile.validate();
    CouplingMatrix result(truncation);
    if (profile.mu_r_sq != 0.0) {
        result = series_coupling_matrix(sin_power_expand(profile.q), truncation, method, options);
        result *= profile.mu_r_sq;
    }
    if (profile.mu_0_sq != 0.0) {
        result.add_scaled(profile.mu_0_sq, CouplingMatrix::identity(truncation));
    }
    return result;
}

SampledSeries series_from_samples(const oracle::AngularFunction& f, int n_max, int k_max,
                                  const oracle::QuadratureSpec& spec) {
    SampledSeries out;
    out.series = oracle::numeric_fourier_coefficients(f, n_max, k_max, spec);
    const oracle::FourierGrid grid = oracle::fourier_grid(n_max, k_max, spec);
    for (int a = 0; a < grid.theta_points; ++a) {
        for (int b = 0; b < grid.phi_points; ++b) {
            const double theta = grid.theta(a);
            const double phi = grid.phi(b);
            const auto [re, im] = out.series.evaluate(theta, phi);
            out.residual = std::max(out.residual, std::abs(f(theta, phi) - std::complex<double>(re, im)));
        }
    }
    return out;
}

}  // namespace sphbraket
