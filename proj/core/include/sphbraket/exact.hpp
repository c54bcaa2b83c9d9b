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
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace sphbraket {

/// Arbitrary-precision signed integer.
using BigInt = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
using ExactRational = boost::multiprecision::cpp_rational;

/// n! for n >= 0.
BigInt factorial(int n);

/// Correctly scaled conversion that survives magnitudes outside the double
/// exponent range of the numerator or denominator separately.
double to_double(const ExactRational& q);
double to_double(const BigInt& z);

/// num/den and sqrt(num/den) without forming a normalized rational first
/// (den > 0; num >= 0 for the square root).
double quotient_to_double(const BigInt& num, const BigInt& den);
double sqrt_quotient_to_double(const BigInt& num, const BigInt& den);

std::string to_string(const ExactRational& q);

/// Exact value sign * sqrt(radicand) with radicand a non-negative rational.
///
/// Products of these stay exact, which is what Clebsch-Gordan coefficients
/// and the factorial-ratio prefactors of the overlap formulas need.
class SignedSqrtRational {
public:
    SignedSqrtRational() = default;

    /// Throws std::domain_error when the radicand is negative or when the
    /// sign disagrees with a zero radicand.
    SignedSqrtRational(int sign, ExactRational radicand);

    /// sign(q) * sqrt(q^2)
    static SignedSqrtRational from_rational(const ExactRational& q);

    int sign() const noexcept { return sign_; }
    const ExactRational& radicand() const noexcept { return radicand_; }
    bool is_zero() const noexcept { return sign_ == 0; }

    double to_double() const;

    SignedSqrtRational& operator*=(const SignedSqrtRational& rhs);
    SignedSqrtRational& operator*=(const ExactRational& rhs);
    SignedSqrtRational operator-() const;

    friend SignedSqrtRational operator*(SignedSqrtRational lhs, const SignedSqrtRational& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend SignedSqrtRational operator*(SignedSqrtRational lhs, const ExactRational& rhs) {
        lhs *= rhs;
        return lhs;
    }
    friend bool operator==(const SignedSqrtRational&, const SignedSqrtRational&) = default;

    /// The square of the value, as a signed rational: sign * radicand.
    ExactRational signed_square() const { return sign_ * radicand_; }

private:
    int sign_ = 0;
    ExactRational radicand_{0};
};

std::ostream& operator<<(std::ostream& os, const SignedSqrtRational& v);

/// One (index, coefficient) pair of a polynomial expansion.
struct CoeffTerm {
    int index = 0;
    ExactRational coefficient;

    friend bool operator==(const CoeffTerm&, const CoeffTerm&) = default;
};

/// Sparse expansion over an indexed polynomial family (Legendre degrees,
/// Chebyshev degrees, associated-Legendre degrees at fixed order).
///
/// Indices are strictly increasing and zero coefficients are never stored.
class PolyCoeffList {
public:
    PolyCoeffList() = default;
    PolyCoeffList(std::initializer_list<CoeffTerm> terms);

    /// Adds `c` to the coefficient of `index`; entries that cancel to zero are
    /// removed. Throws std::domain_error on a negative index.
    void add(int index, const ExactRational& c);

    /// Coefficient at `index`, zero when absent.
    ExactRational coefficient(int index) const;

    std::span<const CoeffTerm> terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }
    int max_index() const noexcept { return terms_.empty() ? -1 : terms_.back().index; }

    friend bool operator==(const PolyCoeffList&, const PolyCoeffList&) = default;

private:
    std::vector<CoeffTerm> terms_;
};

using LegendreExpansion = PolyCoeffList;
using ChebyshevExpansion = PolyCoeffList;

/// Neumaier-compensated running sum.
class CompensatedSum {
public:
    void add(double x) noexcept;
    double value() const noexcept { return sum_ + compensation_; }

private:
    double sum_ = 0.0;
    double compensation_ = 0.0;
};

}  // namespace sphbraket
