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
#include <map>
#include <string>
#include <string_view>
#include <utility>

namespace sphbraket {

enum class TrigKind { Cos, Sin };

std::string_view to_string(TrigKind kind) noexcept;

/// Parses "cos" or "sin"; throws std::invalid_argument otherwise.
TrigKind parse_trig_kind(std::string_view text);

/// The angular operator e^{i k phi} trig(n theta).
struct TrigTerm {
    TrigKind kind = TrigKind::Cos;
    int n = 0;
    int k = 0;

    /// Folds a negative polar multiple into n >= 0. Returns the sign the
    /// caller must apply to its coefficient: cos(-n t) = cos(n t),
    /// sin(-n t) = -sin(n t).
    static std::pair<TrigTerm, int> normalized(TrigKind kind, int n, int k) noexcept;

    /// sin(0 t) is the zero operator.
    bool is_zero_operator() const noexcept { return kind == TrigKind::Sin && n == 0; }

    friend auto operator<=>(const TrigTerm&, const TrigTerm&) = default;
};

/// Finite real combination of TrigTerm operators.
///
/// Keys always have n >= 0; (sin, 0, k) keys and zero coefficients are never
/// stored.
class FourierSeries {
public:
    using Map = std::map<TrigTerm, double>;

    /// Adds c * e^{ik phi} trig(n theta), normalizing negative n.
    void add(TrigKind kind, int n, int k, double c);
    void add(const TrigTerm& term, double c) { add(term.kind, term.n, term.k, c); }

    /// Coefficient of the normalized term, zero when absent.
    double coefficient(TrigKind kind, int n, int k) const;

    /// Value of the series at (theta, phi); complex because of e^{ik phi}.
    /// Returns {re, im}.
    std::pair<double, double> evaluate(double theta, double phi) const;

    const Map& terms() const noexcept { return terms_; }
    bool empty() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    FourierSeries& operator*=(double s);

private:
    Map terms_;
};

}  // namespace sphbraket
