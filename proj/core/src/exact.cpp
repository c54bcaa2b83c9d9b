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

#include "sphbraket/exact.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace sphbraket {

namespace {

using boost::multiprecision::msb;

// Returns (q, shift) with |num|/den ~= q * 2^-shift and q carrying at least
// 64 significant bits. When `even_shift` is set the shift is forced even so
// that the square root can be taken on the mantissa alone.
std::pair<BigInt, long> scaled_quotient(const BigInt& num, const BigInt& den, bool even_shift) {
    const long e_num = static_cast<long>(msb(num));
    const long e_den = static_cast<long>(msb(den));
    long shift = 66 - (e_num - e_den);
    if (even_shift && (shift % 2 != 0)) {
        ++shift;
    }
    BigInt q = shift >= 0 ? BigInt((num << shift) / den) : BigInt(num / (den << -shift));
    return {q, shift};
}

}  // namespace

BigInt factorial(int n) {
    if (n < 0) {
        throw std::domain_error("factorial of negative integer");
    }
    BigInt r = 1;
    for (int i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

double to_double(const BigInt& z) {
    if (z == 0) {
        return 0.0;
    }
    return to_double(ExactRational(z));
}

double to_double(const ExactRational& q) {
    return quotient_to_double(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

double quotient_to_double(const BigInt& num, const BigInt& den) {
    if (num == 0) {
        return 0.0;
    }
    if (den <= 0) {
        throw std::domain_error("quotient_to_double: denominator must be positive");
    }
    const BigInt mag = boost::multiprecision::abs(num);
    auto [mant, shift] = scaled_quotient(mag, den, false);
    const double v = std::ldexp(mant.convert_to<double>(), static_cast<int>(-shift));
    return num < 0 ? -v : v;
}

double sqrt_quotient_to_double(const BigInt& num, const BigInt& den) {
    if (num == 0) {
        return 0.0;
    }
    if (num < 0 || den <= 0) {
        throw std::domain_error("sqrt_quotient_to_double: negative radicand");
    }
    auto [mant, shift] = scaled_quotient(num, den, true);
    return std::ldexp(std::sqrt(mant.convert_to<double>()), static_cast<int>(-shift / 2));
}

std::string to_string(const ExactRational& q) {
    std::ostringstream os;
    os << q;
    return os.str();
}

SignedSqrtRational::SignedSqrtRational(int sign, ExactRational radicand)
    : sign_(sign), radicand_(std::move(radicand)) {
    if (radicand_ < 0) {
        throw std::domain_error("SignedSqrtRational: negative radicand");
    }
    if (sign_ < -1 || sign_ > 1) {
        throw std::domain_error("SignedSqrtRational: sign must be -1, 0 or +1");
    }
    if ((sign_ == 0) != (radicand_ == 0)) {
        if (radicand_ == 0) {
            sign_ = 0;
        } else {
            throw std::domain_error("SignedSqrtRational: zero sign with nonzero radicand");
        }
    }
}

SignedSqrtRational SignedSqrtRational::from_rational(const ExactRational& q) {
    if (q == 0) {
        return {};
    }
    return {q > 0 ? 1 : -1, q * q};
}

double SignedSqrtRational::to_double() const {
    if (sign_ == 0) {
        return 0.0;
    }
    return sign_ * sqrt_quotient_to_double(boost::multiprecision::numerator(radicand_),
                                           boost::multiprecision::denominator(radicand_));
}

SignedSqrtRational& SignedSqrtRational::operator*=(const SignedSqrtRational& rhs) {
    sign_ *= rhs.sign_;
    if (sign_ == 0) {
        radicand_ = 0;
    } else {
        radicand_ *= rhs.radicand_;
    }
    return *this;
}

SignedSqrtRational& SignedSqrtRational::operator*=(const ExactRational& rhs) {
    if (rhs == 0 || sign_ == 0) {
        sign_ = 0;
        radicand_ = 0;
        return *this;
    }
    if (rhs < 0) {
        sign_ = -sign_;
    }
    radicand_ *= rhs * rhs;
    return *this;
}

SignedSqrtRational SignedSqrtRational::operator-() const {
    SignedSqrtRational r = *this;
    r.sign_ = -r.sign_;
    return r;
}

std::ostream& operator<<(std::ostream& os, const SignedSqrtRational& v) {
    if (v.sign() == 0) {
        return os << "0";
    }
    return os << (v.sign() < 0 ? "-" : "+") << "sqrt(" << v.radicand() << ")";
}

PolyCoeffList::PolyCoeffList(std::initializer_list<CoeffTerm> terms) {
    for (const auto& t : terms) {
        add(t.index, t.coefficient);
    }
}

void PolyCoeffList::add(int index, const ExactRational& c) {
    if (index < 0) {
        throw std::domain_error("PolyCoeffList: negative index");
    }
    if (c == 0) {
        return;
    }
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const CoeffTerm& t, int i) { return t.index < i; });
    if (it != terms_.end() && it->index == index) {
        it->coefficient += c;
        if (it->coefficient == 0) {
            terms_.erase(it);
        }
        return;
    }
    terms_.insert(it, CoeffTerm{index, c});
}

ExactRational PolyCoeffList::coefficient(int index) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const CoeffTerm& t, int i) { return t.index < i; });
    if (it != terms_.end() && it->index == index) {
        return it->coefficient;
    }
    return 0;
}

void CompensatedSum::add(double x) noexcept {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
        compensation_ += (sum_ - t) + x;
    } else {
        compensation_ += (x - t) + sum_;
    }
    sum_ = t;
}

}  // namespace sphbraket
