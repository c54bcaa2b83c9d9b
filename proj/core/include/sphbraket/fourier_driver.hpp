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

#include "sphbraket/braket.hpp"
#include "sphbraket/fourier_series.hpp"
#include "sphbraket/oracle.hpp"

namespace sphbraket {

/// sin^{2q}(theta) = 4^{-q} [C(2q, q) + 2 sum_{j<q} (-1)^{q-j} C(2q, j) cos((2q-2j) theta)],
/// all terms with k = 0. Throws std::invalid_argument for q < 1.
FourierSeries sin_power_expand(int q);

/// Effective mass squared mu_r^2 sin^{2q}(theta) + mu_0^2 at one radius.
struct EffectiveMassProfile {
    int q = 1;
    double mu_r_sq = 0.0;
    double mu_0_sq = 0.0;

    /// Throws std::invalid_argument for q < 1 or non-finite coefficients.
    void validate() const;
};

/// mu_r^2 * series_coupling_matrix(sin^{2q}) + mu_0^2 * identity.
CouplingMatrix effective_mass_coupling(const EffectiveMassProfile& profile, int truncation,
                                       EvalMethod method = EvalMethod::MainText,
                                       const AssemblyOptions& options = {});

struct SampledSeries {
    FourierSeries series;
    /// Largest |f - reconstruction| over the sampling grid; nonzero when f
    /// carries content beyond the cutoffs.
    double residual = 0.0;
};

/// Numeric Fourier expansion of a sampled angular function plus its
/// reconstruction residual.
SampledSeries series_from_samples(const oracle::AngularFunction& f, int n_max, int k_max,
                                  const oracle::QuadratureSpec& spec = {});

}  // namespace sphbraket
