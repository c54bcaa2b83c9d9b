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

#include <compare>
#include <vector>

#include "sphbraket/exact.hpp"

namespace sphbraket {

/// Spherical-harmonic label |l, m>.
struct HarmonicIndex {
    int l = 0;
    int m = 0;

    /// Throws std::invalid_argument unless l >= 0 and |m| <= l.
    static HarmonicIndex make(int l, int m);

    bool is_valid() const noexcept { return l >= 0 && m >= -l && m <= l; }

    friend auto operator<=>(const HarmonicIndex&, const HarmonicIndex&) = default;
};

/// Clebsch-Gordan coefficient <j1 m1 j2 m2 | j m> for integer angular momenta,
/// exact, from the Racah single-sum formula.
///
/// Any argument combination violating the selection rules (m != m1 + m2,
/// triangle inequality, |m_i| > j_i, negative j) yields an exact zero.
SignedSqrtRational clebsch_gordan(int j1, int m1, int j2, int m2, int j, int m);

/// Memoized floating-point value of clebsch_gordan(). The table is shared by
/// all threads and capacity-bounded.
double clebsch_gordan_value(int j1, int m1, int j2, int m2, int j, int m);

/// True when <l1 0 l2 0 | l 0> is forced to zero by parity (l1 + l2 + l odd)
/// or by the triangle rule.
bool cg_parity_zero(int l1, int l2, int l) noexcept;

/// Y_a Y_b = sum_l coefficient_l Y_{l, a.m + b.m}.
struct ProductExpansion {
    struct Term {
        int l = 0;
        double coefficient = 0.0;
    };
    int m = 0;
    std::vector<Term> terms;
};

/// Product of two spherical harmonics expanded in harmonics of order
/// a.m + b.m. Terms whose parity CG vanishes are omitted.
ProductExpansion sh_product_expand(const HarmonicIndex& a, const HarmonicIndex& b);

/// Drops all memoized Clebsch-Gordan values.
void clear_clebsch_gordan_cache();

}  // namespace sphbraket
