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

#include "sphbraket/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <stdexcept>
#include <string>

#include "sphbraket/special_functions.hpp"

namespace sphbraket::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double z = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p2 = p1;
                p1 = p0;
                p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
            }
            // p0 = P_n(z), p1 = P_{n-1}(z)
            dp = n * (z * p0 - p1) / (z * z - 1.0);
            const double dz = p0 / dp;
            z -= dz;
            if (std::abs(dz) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -z;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = z;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

double polar_factor(TrigKind kind, int n, double theta) {
    return kind == TrigKind::Cos ? std::cos(n * theta) : std::sin(n * theta);
}

void require_finite(const std::complex<double>& v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
        throw std::domain_error("angular function returned a non-finite sample");
    }
}

}  // namespace

void QuadratureSpec::validate() const {
    if (theta_nodes < 8 || phi_nodes < 8) {
        throw std::invalid_argument("quadrature node counts must be at least 8");
    }
}

std::shared_ptr<const GaussLegendreRule> gauss_legendre(int n) {
    if (n < 1) {
        throw std::invalid_argument("gauss_legendre: node count must be positive");
    }
    static std::mutex mutex;
    static std::map<int, std::shared_ptr<const GaussLegendreRule>> rules;
    std::lock_guard lock(mutex);
    auto& slot = rules[n];
    if (!slot) {
        slot = std::make_shared<const GaussLegendreRule>(compute_rule(n));
    }
    return slot;
}

double harmonic_norm(int l, int m) {
    // (l-m)!/(l+m)!
    double ratio = 1.0;
    if (m >= 0) {
        for (int i = l - m + 1; i <= l + m; ++i) {
            ratio /= i;
        }
    } else {
        for (int i = l + m + 1; i <= l - m; ++i) {
            ratio *= i;
        }
    }
    return std::sqrt((2 * l + 1) / (4.0 * kPi) * ratio);
}

std::complex<double> spherical_harmonic(int l, int m, double theta, double phi) {
    const double radial = harmonic_norm(l, m) * assoc_legendre_p(l, m, std::cos(theta));
    return std::polar(1.0, m * phi) * radial;
}

double quadrature_overlap(const BraKetQuery& q, const QuadratureSpec& spec) {
    q.validate();
    spec.validate();
    auto [op, sign] = TrigTerm::normalized(q.op.kind, q.op.n, q.op.k);
    if (!q.azimuthally_allowed() || op.is_zero_operator()) {
        return 0.0;
    }
    const auto rule = gauss_legendre(spec.theta_nodes);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        const double theta = 0.5 * kPi * (rule->nodes[i] + 1.0);
        const double x = std::cos(theta);
        sum += rule->weights[i] * std::sin(theta) * polar_factor(op.kind, op.n, theta) *
               assoc_legendre_p(q.bra.l, q.bra.m, x) * assoc_legendre_p(q.ket.l, q.ket.m, x);
    }
    const double theta_integral = 0.5 * kPi * sum;
    return sign * 2.0 * kPi * harmonic_norm(q.bra.l, q.bra.m) * harmonic_norm(q.ket.l, q.ket.m) *
           theta_integral;
}

std::complex<double> quadrature_function_overlap(const HarmonicIndex& bra, const HarmonicIndex& ket,
                                                 const AngularFunction& f,
                                                 const QuadratureSpec& spec) {
    if (!bra.is_valid() || !ket.is_valid()) {
        throw std::invalid_argument("quadrature_function_overlap: invalid harmonic index");
    }
    spec.validate();
    const auto rule = gauss_legendre(spec.theta_nodes);
    const double norm = harmonic_norm(bra.l, bra.m) * harmonic_norm(ket.l, ket.m);
    const double dphi = 2.0 * kPi / spec.phi_nodes;
    std::complex<double> total{0.0, 0.0};
    for (std::size_t i = 0; i < rule->nodes.size(); ++i) {
        const double theta = 0.5 * kPi * (rule->nodes[i] + 1.0);
        const double x = std::cos(theta);
        const double radial = assoc_legendre_p(bra.l, bra.m, x) * assoc_legendre_p(ket.l, ket.m, x);
        std::complex<double> ring{0.0, 0.0};
        for (int b = 0; b < spec.phi_nodes; ++b) {
            const double phi = b * dphi;
            const std::complex<double> sample = f(theta, phi);
            require_finite(sample);
            ring += sample * std::polar(1.0, (ket.m - bra.m) * phi);
        }
        total += rule->weights[i] * std::sin(theta) * radial * ring;
    }
    return total * (0.5 * kPi) * dphi * norm;
}

double FourierGrid::theta(int a) const {
    return 2.0 * kPi * a / theta_points;
}

double FourierGrid::phi(int b) const {
    return 2.0 * kPi * b / phi_points;
}

FourierGrid fourier_grid(int n_max, int k_max, const QuadratureSpec& spec) {
    if (n_max < 0 || k_max < 0) {
        throw std::invalid_argument("fourier cutoffs must be non-negative");
    }
    spec.validate();
    return {std::max(spec.theta_nodes, 2 * n_max + 2), std::max(spec.phi_nodes, 2 * k_max + 2)};
}

FourierSeries numeric_fourier_coefficients(const AngularFunction& f, int n_max, int k_max,
                                           const QuadratureSpec& spec) {
    const FourierGrid grid = fourier_grid(n_max, k_max, spec);
    const int nt = grid.theta_points;
    const int np = grid.phi_points;

    // Azimuthal transform first: g_k(theta_a) = (1/np) sum_b f e^{-ik phi_b}.
    const std::size_t width = static_cast<std::size_t>(2 * k_max + 1);
    std::vector<std::complex<double>> azimuthal(static_cast<std::size_t>(nt) * width);
    double largest = 0.0;
    std::vector<std::complex<double>> ring(static_cast<std::size_t>(np));
    for (int a = 0; a < nt; ++a) {
        const double theta = grid.theta(a);
        for (int b = 0; b < np; ++b) {
            const std::complex<double> s = f(theta, grid.phi(b));
            require_finite(s);
            largest = std::max(largest, std::abs(s));
            ring[static_cast<std::size_t>(b)] = s;
        }
        for (int k = -k_max; k <= k_max; ++k) {
            std::complex<double> acc{0.0, 0.0};
            for (int b = 0; b < np; ++b) {
                acc += ring[static_cast<std::size_t>(b)] * std::polar(1.0, -k * grid.phi(b));
            }
            azimuthal[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(k + k_max)] =
                acc / static_cast<double>(np);
        }
    }

    FourierSeries series;
    const double cutoff = 1e-13 * std::max(1.0, largest);
    for (int k = -k_max; k <= k_max; ++k) {
        for (int n = 0; n <= n_max; ++n) {
            std::complex<double> c_cos{0.0, 0.0};
            std::complex<double> c_sin{0.0, 0.0};
            for (int a = 0; a < nt; ++a) {
                const auto g =
                    azimuthal[static_cast<std::size_t>(a) * width + static_cast<std::size_t>(k + k_max)];
                const double theta = grid.theta(a);
                c_cos += g * std::cos(n * theta);
                c_sin += g * std::sin(n * theta);
            }
            const double scale = (n == 0 ? 1.0 : 2.0) / nt;
            const double cc = (c_cos * scale).real();
            const double cs = (c_sin * scale).real();
            if (std::abs(cc) > cutoff) {
                series.add(TrigKind::Cos, n, k, cc);
            }
            if (n > 0 && std::abs(cs) > cutoff) {
                series.add(TrigKind::Sin, n, k, cs);
            }
        }
    }
    return series;
}

}  // namespace sphbraket::oracle
