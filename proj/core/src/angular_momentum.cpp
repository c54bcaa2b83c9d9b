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

#include "sphbraket/angular_momentum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numbers>
#include <stdexcept>
#include <string>

#include "bounded_memo.hpp"
#include "factorial_table.hpp"

namespace sphbraket {

HarmonicIndex HarmonicIndex::make(int l, int m) {
    HarmonicIndex h{l, m};
    if (!h.is_valid()) {
        throw std::invalid_argument("invalid harmonic index (l=" + std::to_string(l) +
                                    ", m=" + std::to_string(m) + "): need l >= 0 and |m| <= l");
    }
    return h;
}

namespace {

bool cg_selection_fails(int j1, int m1, int j2, int m2, int j, int m) {
    if (j1 < 0 || j2 < 0 || j < 0) {
        return true;
    }
    if (m != m1 + m2) {
        return true;
    }
    if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m) > j) {
        return true;
    }
    return j < std::abs(j1 - j2) || j > j1 + j2;
}

detail::BoundedMemo<double>& cg_memo() {
    static detail::BoundedMemo<double> memo(1u << 21);
    return memo;
}

// Racah formula split into integers:
//   <j1 m1 j2 m2|j m> = sqrt(prefactor_num / prefactor_den) * sum_num / sum_den
struct RacahParts {
    BigInt prefactor_num;
    BigInt prefactor_den;
    BigInt sum_num;
    BigInt sum_den;
};

RacahParts racah_parts(int j1, int m1, int j2, int m2, int j, int m) {
    const auto& f = detail::factorial_big;
    RacahParts p;
    p.prefactor_num = BigInt(2 * j + 1) * f(j + j1 - j2) * f(j - j1 + j2) * f(j1 + j2 - j) *
                      f(j + m) * f(j - m) * f(j1 - m1) * f(j1 + m1) * f(j2 - m2) * f(j2 + m2);
    p.prefactor_den = f(j1 + j2 + j + 1);

    // Sum over k keeping every factorial argument non-negative. Each term
    // 1/(k!(a-k)!(b-k)!(c-k)!(d+k)!(e+k)!) is brought over the common
    // denominator k_max! a! b! c! (d+k_max)! (e+k_max)!, so the sum is a
    // single integer.
    const int a = j1 + j2 - j;
    const int b = j1 - m1;
    const int c = j2 + m2;
    const int d = j - j2 + m1;
    const int e = j - j1 - m2;
    const int k_min = std::max({0, -d, -e});
    const int k_max = std::min({a, b, c});
    p.sum_num = 0;
    for (int k = k_min; k <= k_max; ++k) {
        BigInt term = detail::falling_product(k_max, k) * detail::falling_product(a, a - k) *
                      detail::falling_product(b, b - k) * detail::falling_product(c, c - k) *
                      detail::falling_product(d + k_max, d + k) *
                      detail::falling_product(e + k_max, e + k);
        if (k % 2 == 0) {
            p.sum_num += term;
        } else {
            p.sum_num -= term;
        }
    }
    p.sum_den = f(k_max) * f(a) * f(b) * f(c) * f(d + k_max) * f(e + k_max);
    return p;
}

}  // namespace

SignedSqrtRational clebsch_gordan(int j1, int m1, int j2, int m2, int j, int m) {
    if (cg_selection_fails(j1, m1, j2, m2, j, m)) {
        return {};
    }
    const RacahParts p = racah_parts(j1, m1, j2, m2, j, m);
    if (p.sum_num == 0) {
        return {};
    }
    const int sign = p.sum_num > 0 ? 1 : -1;
    return {sign, ExactRational(BigInt(p.prefactor_num * p.sum_num * p.sum_num),
                                BigInt(p.prefactor_den * p.sum_den * p.sum_den))};
}

namespace {

double clebsch_gordan_double(int j1, int m1, int j2, int m2, int j, int m) {
    const RacahParts p = racah_parts(j1, m1, j2, m2, j, m);
    if (p.sum_num == 0) {
        return 0.0;
    }
    return sqrt_quotient_to_double(p.prefactor_num, p.prefactor_den) *
           quotient_to_double(p.sum_num, p.sum_den);
}

}  // namespace

double clebsch_gordan_value(int j1, int m1, int j2, int m2, int j, int m) {
    if (cg_selection_fails(j1, m1, j2, m2, j, m)) {
        return 0.0;
    }
    const auto key = detail::pack_key<10>(j1, m1, j2, m2, j, m);
    if (!key) {
        return clebsch_gordan_double(j1, m1, j2, m2, j, m);
    }
    return cg_memo().get_or_compute(
        *key, [&] { return clebsch_gordan_double(j1, m1, j2, m2, j, m); });
}

void clear_clebsch_gordan_cache() {
    cg_memo().clear();
}

bool cg_parity_zero(int l1, int l2, int l) noexcept {
    if (l1 < 0 || l2 < 0 || l < 0) {
        return true;
    }
    if (l < std::abs(l1 - l2) || l > l1 + l2) {
        return true;
    }
    return (l1 + l2 + l) % 2 != 0;
}

ProductExpansion sh_product_expand(const HarmonicIndex& a, const HarmonicIndex& b) {
    if (!a.is_valid() || !b.is_valid()) {
        throw std::invalid_argument("sh_product_expand: invalid harmonic index");
    }
    ProductExpansion out;
    out.m = a.m + b.m;
    const double inv_sqrt_4pi = 1.0 / std::sqrt(4.0 * std::numbers::pi);
    for (int l = std::abs(a.l - b.l); l <= a.l + b.l; ++l) {
        if (cg_parity_zero(a.l, b.l, l) || std::abs(out.m) > l) {
            continue;
        }
        SignedSqrtRational c(1, ExactRational((2 * a.l + 1) * (2 * b.l + 1), 2 * l + 1));
        c *= clebsch_gordan(a.l, 0, b.l, 0, l, 0);
        c *= clebsch_gordan(a.l, a.m, b.l, b.m, l, out.m);
        if (c.is_zero()) {
            continue;
        }
        out.terms.push_back({l, c.to_double() * inv_sqrt_4pi});
    }
    return out;
}

}  // namespace sphbraket
