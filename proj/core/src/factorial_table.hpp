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

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "sphbraket/exact.hpp"

namespace sphbraket::detail {

inline constexpr int kFactorialTableSize = 1024;

// n! for 0 <= n < kFactorialTableSize, built once on first use.
inline const BigInt& factorial_big(int n) {
    static const std::vector<BigInt> table = [] {
        std::vector<BigInt> t(kFactorialTableSize);
        t[0] = 1;
        for (int i = 1; i < kFactorialTableSize; ++i) {
            t[i] = t[i - 1] * i;
        }
        return t;
    }();
    if (n < 0 || n >= kFactorialTableSize) {
        throw std::out_of_range("factorial table argument out of range");
    }
    return table[static_cast<std::size_t>(n)];
}

// hi!/lo! for 0 <= lo <= hi, as a product of consecutive integers.
inline BigInt falling_product(int hi, int lo) {
    BigInt r = 1;
    std::uint64_t chunk = 1;
    for (int i = lo + 1; i <= hi; ++i) {
        if (chunk > (std::uint64_t{1} << 40)) {
            r *= chunk;
            chunk = 1;
        }
        chunk *= static_cast<std::uint64_t>(i);
    }
    r *= chunk;
    return r;
}

// (a)!/(b)! as an exact rational.
inline ExactRational factorial_ratio(int a, int b) {
    return ExactRational(factorial_big(a), factorial_big(b));
}

}  // namespace sphbraket::detail
