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

#include "sphbraket/fourier_series.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace sphbraket {

std::string_view to_string(TrigKind kind) noexcept {
    return kind == TrigKind::Cos ? "cos" : "sin";
}

TrigKind parse_trig_kind(std::string_view text) {
    if (text == "cos") {
        return TrigKind::Cos;
    }
    if (text == "sin") {
        return TrigKind::Sin;
    }
    throw std::invalid_argument("unknown trig kind '" + std::string(text) + "' (expected cos or sin)");
}

std::pair<TrigTerm, int> TrigTerm::normalized(TrigKind kind, int n, int k) noexcept {
    if (n >= 0) {
        return {TrigTerm{kind, n, k}, 1};
    }
    return {TrigTerm{kind, -n, k}, kind == TrigKind::Sin ? -1 : 1};
}

void FourierSeries::add(TrigKind kind, int n, int k, double c) {
    auto [term, sign] = TrigTerm::normalized(kind, n, k);
    if (term.is_zero_operator() || c == 0.0) {
        return;
    }
    auto [it, inserted] = terms_.try_emplace(term, sign * c);
    if (!inserted) {
        it->second += sign * c;
        if (it->second == 0.0) {
            terms_.erase(it);
        }
    }
}

double FourierSeries::coefficient(TrigKind kind, int n, int k) const {
    auto [term, sign] = TrigTerm::normalized(kind, n, k);
    auto it = terms_.find(term);
    return it == terms_.end() ? 0.0 : sign * it->second;
}

std::pair<double, double> FourierSeries::evaluate(double theta, double phi) const {
    double re = 0.0;
    double im = 0.0;
    for (const auto& [t, c] : terms_) {
        const double polar = t.kind == TrigKind::Cos ? std::cos(t.n * theta) : std::sin(t.n * theta);
        re += c * polar * std::cos(t.k * phi);
        im += c * polar * std::sin(t.k * phi);
    }
    return {re, im};
}

FourierSeries& FourierSeries::operator*=(double s) {
    if (s == 0.0) {
        terms_.clear();
        return *this;
    }
    for (auto& [t, c] : terms_) {
        c *= s;
    }
    return *this;
}

}  // namespace sphbraket
