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

#include "sphbraket/braket.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>

#include "bounded_memo.hpp"
#include "factorial_table.hpp"
#include "sphbraket/angular_momentum.hpp"
#include "sphbraket/legendre_integrals.hpp"

namespace sphbraket {

namespace {

// trig(n theta) = sum_d coefficient_d P_d^order(cos theta)
struct ThetaExpansion {
    int order = 0;
    std::vector<std::pair<int, double>> terms;
};

ThetaExpansion theta_expansion(const TrigTerm& op, EvalMethod method) {
    const LegendreExpansion cosine = method == EvalMethod::MainText
                                         ? chebyshev_in_legendre(op.n)
                                         : chebyshev_in_legendre_by_projection(op.n);
    ThetaExpansion out;
    if (op.kind == TrigKind::Cos) {
        for (const auto& t : cosine.terms()) {
            out.terms.emplace_back(t.index, to_double(t.coefficient));
        }
        return out;
    }
    out.order = 1;
    if (method == EvalMethod::MainText) {
        const LegendreExpansion sine = sin_in_assoc_legendre(op.n);
        for (const auto& t : sine.terms()) {
            out.terms.emplace_back(t.index, to_double(t.coefficient));
        }
        return out;
    }
    // b_l = -a_l / n; P_0^1 vanishes so its term is dropped.
    for (const auto& t : cosine.terms()) {
        if (t.index == 0) {
            continue;
        }
        out.terms.emplace_back(t.index, to_double(-t.coefficient / op.n));
    }
    return out;
}

detail::BoundedMemo<double>& sqrt_ratio_memo() {
    static detail::BoundedMemo<double> memo(1u << 16);
    return memo;
}

// sqrt((l+k)!/(l-k)!) for |k| <= l
double sqrt_factorial_ratio(int l, int k) {
    auto compute = [=] {
        return SignedSqrtRational(1, detail::factorial_ratio(l + k, l - k)).to_double();
    };
    const auto key = detail::pack_key<32>(l, k);
    return key ? sqrt_ratio_memo().get_or_compute(*key, compute) : compute();
}

// Closed-form sum shared by both derivations. With m1 = m2 + k,
//
//   <l1 m1| e^{ik phi} trig |l2 m2> = sum_l (-1)^m1 / 2 sqrt((2l1+1)(2l2+1)(l+k)!/(l-k)!)
//        <l1 -m1 l2 m2|l -k><l1 0 l2 0|l 0> sum_d c_d I(d, order, l, -k)
//
// and for the n = 0 cosine the inner sum is replaced by I0(l, -k).
double closed_form(const BraKetQuery& q, const ThetaExpansion* expansion) {
    const int l1 = q.bra.l;
    const int m1 = q.bra.m;
    const int l2 = q.ket.l;
    const int m2 = q.ket.m;
    const int k = q.op.k;
    const double outer = 0.5 * std::sqrt(static_cast<double>((2 * l1 + 1) * (2 * l2 + 1))) *
                         (m1 % 2 == 0 ? 1.0 : -1.0);
    CompensatedSum sum;
    for (int l = std::abs(l1 - l2); l <= l1 + l2; ++l) {
        if (cg_parity_zero(l1, l2, l) || std::abs(k) > l) {
            continue;
        }
        const double cg_m = clebsch_gordan_value(l1, -m1, l2, m2, l, -k);
        if (cg_m == 0.0) {
            continue;
        }
        const double weight =
            outer * sqrt_factorial_ratio(l, k) * cg_m * clebsch_gordan_value(l1, 0, l2, 0, l, 0);
        if (expansion == nullptr) {
            sum.add(weight * i0(l, -k));
            continue;
        }
        for (const auto& [degree, c] : expansion->terms) {
            sum.add(weight * c * legendre_pair_integral(degree, expansion->order, l, -k));
        }
    }
    return sum.value();
}

double evaluate_normalized(const BraKetQuery& q, EvalMethod method, const ThetaExpansion* expansion,
                           const oracle::QuadratureSpec& spec) {
    if (!q.azimuthally_allowed() || q.op.is_zero_operator()) {
        return 0.0;
    }
    switch (method) {
        case EvalMethod::Quadrature:
            return oracle::quadrature_overlap(q, spec);
        case EvalMethod::MainText:
            if (q.op.kind == TrigKind::Cos && q.op.n == 0) {
                return closed_form(q, nullptr);
            }
            [[fallthrough]];
        case EvalMethod::AppendixA:
            return closed_form(q, expansion);
    }
    return 0.0;
}

}  // namespace

std::string_view to_string(EvalMethod method) noexcept {
    switch (method) {
        case EvalMethod::MainText:
            return "main";
        case EvalMethod::AppendixA:
            return "appendix-a";
        case EvalMethod::Quadrature:
            return "quadrature";
    }
    return "main";
}

EvalMethod parse_eval_method(std::string_view text) {
    if (text == "main") {
        return EvalMethod::MainText;
    }
    if (text == "appendix-a") {
        return EvalMethod::AppendixA;
    }
    if (text == "quadrature") {
        return EvalMethod::Quadrature;
    }
    throw std::invalid_argument("unknown method '" + std::string(text) +
                                "' (expected main, appendix-a or quadrature)");
}

bool within_validated_envelope(const BraKetQuery& q) noexcept {
    return q.bra.l <= kValidatedEnvelope && q.ket.l <= kValidatedEnvelope &&
           std::abs(q.op.n) <= kValidatedEnvelope;
}

double overlap(const BraKetQuery& q, EvalMethod method, const oracle::QuadratureSpec& spec) {
    q.validate();
    auto [op, sign] = TrigTerm::normalized(q.op.kind, q.op.n, q.op.k);
    const BraKetQuery nq{q.bra, op, q.ket};
    if (!nq.azimuthally_allowed() || op.is_zero_operator()) {
        return 0.0;
    }
    ThetaExpansion expansion;
    if (method != EvalMethod::Quadrature) {
        expansion = theta_expansion(op, method);
    }
    return sign * evaluate_normalized(nq, method, &expansion, spec);
}

double overlap_axisym_cos(int l1, int m1, int n, int l2, int m2) {
    const BraKetQuery q{HarmonicIndex{l1, m1}, TrigTerm{TrigKind::Cos, n, 0}, HarmonicIndex{l2, m2}};
    q.validate();
    n = std::abs(n);
    if (m1 != m2) {
        return 0.0;
    }
    // sqrt((l1+1/2)(l2+1/2)) = sqrt((2l1+1)(2l2+1)/4)
    const SignedSqrtRational outer(m1 % 2 == 0 ? 1 : -1,
                                   ExactRational((2 * l1 + 1) * (2 * l2 + 1), 4));
    CompensatedSum sum;
    for (int l = std::abs(l1 - l2); l <= l1 + l2; ++l) {
        if (cg_parity_zero(l1, l2, l) || (n + l) % 2 != 0) {
            continue;
        }
        SignedSqrtRational term = outer;
        term *= clebsch_gordan(l1, 0, l2, 0, l, 0);
        term *= clebsch_gordan(l1, -m1, l2, m2, l, 0);
        if (term.is_zero()) {
            continue;
        }
        term *= trig_projection(n, l);
        sum.add(term.to_double());
    }
    return sum.value();
}

CouplingMatrix::CouplingMatrix(int truncation) : truncation_(truncation) {
    if (truncation < 0) {
        throw std::invalid_argument("coupling matrix truncation must be non-negative");
    }
    dimension_ = (truncation + 1) * (truncation + 1);
    data_.assign(static_cast<std::size_t>(dimension_) * static_cast<std::size_t>(dimension_), 0.0);
}

CouplingMatrix CouplingMatrix::identity(int truncation) {
    CouplingMatrix m(truncation);
    for (int i = 0; i < m.dimension(); ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

HarmonicIndex CouplingMatrix::harmonic(int index) {
    if (index < 0) {
        throw std::out_of_range("negative basis index");
    }
    int l = static_cast<int>(std::sqrt(static_cast<double>(index)));
    while (l * l > index) {
        --l;
    }
    while ((l + 1) * (l + 1) <= index) {
        ++l;
    }
    return {l, index - l * l - l};
}

std::size_t CouplingMatrix::offset(int row, int col) const {
    if (row < 0 || col < 0 || row >= dimension_ || col >= dimension_) {
        throw std::out_of_range("coupling matrix index out of range");
    }
    return static_cast<std::size_t>(row) * static_cast<std::size_t>(dimension_) +
           static_cast<std::size_t>(col);
}

double CouplingMatrix::at(const HarmonicIndex& bra, const HarmonicIndex& ket) const {
    if (!bra.is_valid() || !ket.is_valid() || bra.l > truncation_ || ket.l > truncation_) {
        throw std::out_of_range("harmonic index outside the truncated basis");
    }
    return (*this)(index(bra.l, bra.m), index(ket.l, ket.m));
}

CouplingMatrix& CouplingMatrix::add_scaled(double a, const CouplingMatrix& other) {
    if (other.truncation_ != truncation_) {
        throw std::invalid_argument("coupling matrix truncation mismatch");
    }
    for (std::size_t i = 0; i < data_.size(); ++i) {
        data_[i] += a * other.data_[i];
    }
    return *this;
}

CouplingMatrix& CouplingMatrix::operator*=(double s) {
    for (double& v : data_) {
        v *= s;
    }
    return *this;
}

double max_abs_difference(const CouplingMatrix& a, const CouplingMatrix& b) {
    if (a.truncation() != b.truncation()) {
        throw std::invalid_argument("coupling matrix truncation mismatch");
    }
    double worst = 0.0;
    const auto da = a.data();
    const auto db = b.data();
    for (std::size_t i = 0; i < da.size(); ++i) {
        worst = std::max(worst, std::abs(da[i] - db[i]));
    }
    return worst;
}

CouplingMatrix coupling_matrix(const TrigTerm& term, int truncation, EvalMethod method,
                               const AssemblyOptions& options) {
    CouplingMatrix result(truncation);
    auto [op, sign] = TrigTerm::normalized(term.kind, term.n, term.k);
    if (op.is_zero_operator()) {
        return result;
    }
    ThetaExpansion expansion;
    if (method != EvalMethod::Quadrature) {
        expansion = theta_expansion(op, method);
    } else {
        options.quadrature.validate();
    }
    const int dim = result.dimension();

    auto fill_row = [&](int row) {
        const HarmonicIndex bra = CouplingMatrix::harmonic(row);
        const int m2 = bra.m - op.k;
        for (int l2 = std::abs(m2); l2 <= truncation; ++l2) {
            const BraKetQuery q{bra, op, HarmonicIndex{l2, m2}};
            result(row, CouplingMatrix::index(l2, m2)) =
                sign * evaluate_normalized(q, method, &expansion, options.quadrature);
        }
    };

    unsigned threads = options.threads == 0 ? std::max(1u, std::thread::hardware_concurrency())
                                            : options.threads;
    threads = std::min<unsigned>(threads, static_cast<unsigned>(dim));
    if (threads <= 1) {
        for (int row = 0; row < dim; ++row) {
            fill_row(row);
        }
        return result;
    }
    std::atomic<int> next_row{0};
    {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&] {
                for (int row = next_row++; row < dim; row = next_row++) {
                    fill_row(row);
                }
            });
        }
    }
    return result;
}

CouplingMatrix series_coupling_matrix(const FourierSeries& f, int truncation, EvalMethod method,
                                      const AssemblyOptions& options) {
    CouplingMatrix result(truncation);
    for (const auto& [term, c] : f.terms()) {
        result.add_scaled(c, coupling_matrix(term, truncation, method, options));
    }
    return result;
}

void clear_braket_caches() {
    clear_clebsch_gordan_cache();
    clear_legendre_integral_cache();
    sqrt_ratio_memo().clear();
}

}  // namespace sphbraket
