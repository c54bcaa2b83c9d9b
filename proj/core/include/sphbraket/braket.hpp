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

#include <span>
#include <string_view>
#include <vector>

#include "sphbraket/fourier_series.hpp"
#include "sphbraket/oracle.hpp"
#include "sphbraket/query.hpp"

namespace sphbraket {

/// How an overlap is evaluated.
///
/// MainText expands trig(n theta) in Legendre functions through the
/// Chebyshev-Gegenbauer connection (gamma-function coefficients).
/// AppendixA obtains the same expansion from Legendre orthogonality and the
/// Chebyshev projection integrals I_{n,l}. Quadrature is the brute-force
/// oracle.
enum class EvalMethod { MainText, AppendixA, Quadrature };

/// "main", "appendix-a", "quadrature"
std::string_view to_string(EvalMethod method) noexcept;
EvalMethod parse_eval_method(std::string_view text);

/// Largest l and n for which closed forms are validated against quadrature.
inline constexpr int kValidatedEnvelope = 64;

/// False when any of l1, l2, n exceeds kValidatedEnvelope; callers should warn
/// about possible precision loss in that case.
bool within_validated_envelope(const BraKetQuery& q) noexcept;

/// <l1 m1| e^{ik phi} trig(n theta) |l2 m2>.
///
/// Always real. Exact zero when m1 != m2 + k or for sin(0 theta). Throws
/// std::invalid_argument for invalid harmonic indices.
double overlap(const BraKetQuery& q, EvalMethod method = EvalMethod::MainText,
               const oracle::QuadratureSpec& spec = {});

/// <l1 m1| cos(n theta) |l2 m2> for k = 0, written directly in terms of the
/// projection integrals I_{n,l}:
///   sum_l sqrt((l1+1/2)(l2+1/2)) (-1)^m1 <l1 0 l2 0|l 0><l1 -m1 l2 m2|l 0> I_{n,l}.
double overlap_axisym_cos(int l1, int m1, int n, int l2, int m2);

/// Dense overlap matrix over the basis {(l, m): 0 <= l <= L, |m| <= l}.
///
/// Basis ordering: index(l, m) = l*l + l + m. Rows are bras, columns kets.
class CouplingMatrix {
public:
    explicit CouplingMatrix(int truncation);

    static CouplingMatrix identity(int truncation);

    static constexpr int index(int l, int m) noexcept { return l * l + l + m; }
    static HarmonicIndex harmonic(int index);

    int truncation() const noexcept { return truncation_; }
    int dimension() const noexcept { return dimension_; }

    double operator()(int row, int col) const { return data_[offset(row, col)]; }
    double& operator()(int row, int col) { return data_[offset(row, col)]; }

    double at(const HarmonicIndex& bra, const HarmonicIndex& ket) const;

    std::span<const double> data() const noexcept { return data_; }

    /// this += a * other. Throws std::invalid_argument on a size mismatch.
    CouplingMatrix& add_scaled(double a, const CouplingMatrix& other);
    CouplingMatrix& operator*=(double s);

    friend bool operator==(const CouplingMatrix&, const CouplingMatrix&) = default;

private:
    std::size_t offset(int row, int col) const;

    int truncation_ = 0;
    int dimension_ = 1;
    std::vector<double> data_;
};

/// Largest |a(i,j) - b(i,j)|. Throws std::invalid_argument on size mismatch.
double max_abs_difference(const CouplingMatrix& a, const CouplingMatrix& b);

struct AssemblyOptions {
    /// Worker threads for entry evaluation; 0 means hardware concurrency.
    unsigned threads = 1;
    oracle::QuadratureSpec quadrature{};
};

/// Overlap matrix of one operator. Entries excluded by m1 = m2 + k are stored
/// as exact zeros without evaluation. The result is independent of the thread
/// count.
CouplingMatrix coupling_matrix(const TrigTerm& op, int truncation,
                               EvalMethod method = EvalMethod::MainText,
                               const AssemblyOptions& options = {});

/// sum_terms coefficient * coupling_matrix(term).
CouplingMatrix series_coupling_matrix(const FourierSeries& f, int truncation,
                                      EvalMethod method = EvalMethod::MainText,
                                      const AssemblyOptions& options = {});

/// Drops every memo table (Clebsch-Gordan values, pair integrals, factorial
/// ratios). Only useful for cold-cache timing.
void clear_braket_caches();

}  // namespace sphbraket
