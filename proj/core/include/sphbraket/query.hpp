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

#include "sphbraket/angular_momentum.hpp"
#include "sphbraket/fourier_series.hpp"

namespace sphbraket {

/// <bra| e^{i k phi} trig(n theta) |ket>
struct BraKetQuery {
    HarmonicIndex bra;
    TrigTerm op;
    HarmonicIndex ket;

    /// Throws std::invalid_argument when either harmonic index is invalid.
    void validate() const;

    /// The azimuthal integral vanishes unless bra.m == ket.m + op.k.
    bool azimuthally_allowed() const noexcept { return bra.m == ket.m + op.k; }
};

}  // namespace sphbraket
