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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "commands.hpp"
#include "oracles.hpp"
#include "sphbraket/angular_momentum.hpp"
#include "sphbraket/braket.hpp"
#include "sphbraket/fourier_driver.hpp"
#include "sphbraket/legendre_integrals.hpp"

using namespace sphbraket;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool pass, const std::string& detail) {
    std::printf("%s criterion %d (%s): %s\n", pass ? "PASS" : "FAIL", id, name.c_str(), detail.c_str());
    std::fflush(stdout);
    failures += pass ? 0 : 1;
}

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

struct SweepResult {
    std::size_t queries = 0;
    double main_vs_quadrature = 0.0;
    double main_vs_appendix = 0.0;
    double axisym_vs_main = 0.0;
    double seconds = 0.0;
};

// l1, l2 <= 8, all m, n <= 8, |k| <= 4, both kinds.
SweepResult run_sweep() {
    SweepResult r;
    const auto start = std::chrono::steady_clock::now();
    for (int l1 = 0; l1 <= 8; ++l1) {
        for (int m1 = -l1; m1 <= l1; ++m1) {
            for (int l2 = 0; l2 <= 8; ++l2) {
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    for (const TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
                        for (int n = 0; n <= 8; ++n) {
                            for (int k = -4; k <= 4; ++k) {
                                const BraKetQuery q{{l1, m1}, {kind, n, k}, {l2, m2}};
                                ++r.queries;
                                const double main = overlap(q, EvalMethod::MainText);
                                const double appx = overlap(q, EvalMethod::AppendixA);
                                const double quad = overlap(q, EvalMethod::Quadrature);
                                r.main_vs_quadrature = std::max(r.main_vs_quadrature, std::abs(main - quad));
                                r.main_vs_appendix = std::max(r.main_vs_appendix, std::abs(main - appx));
                                if (kind == TrigKind::Cos && k == 0) {
                                    r.axisym_vs_main = std::max(
                                        r.axisym_vs_main, std::abs(overlap_axisym_cos(l1, m1, n, l2, m2) - main));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

void criterion_3() {
    const auto m = coupling_matrix({TrigKind::Cos, 0, 0}, 6);
    double off = 0.0;
    double diag = 0.0;
    for (int r = 0; r < m.dimension(); ++r) {
        for (int c = 0; c < m.dimension(); ++c) {
            if (r == c) {
                diag = std::max(diag, std::abs(m(r, c) - 1.0));
            } else {
                off = std::max(off, std::abs(m(r, c)));
            }
        }
    }
    report(3, "orthonormality", m.dimension() == 49 && off <= 1e-13 && diag <= 1e-13,
           "dimension " + std::to_string(m.dimension()) + fmt(", max off-diagonal %.3g", off) +
               fmt(", max |diagonal - 1| %.3g", diag));
}

void criterion_4() {
    const auto m = coupling_matrix({TrigKind::Cos, 2, 0}, 8);
    int stray = 0;
    int missing = 0;
    for (int r = 0; r < m.dimension(); ++r) {
        for (int c = 0; c < m.dimension(); ++c) {
            const auto a = CouplingMatrix::harmonic(r);
            const auto b = CouplingMatrix::harmonic(c);
            const bool allowed = a.m == b.m && (a.l == b.l || std::abs(a.l - b.l) == 2);
            if (!allowed && m(r, c) != 0.0) {
                ++stray;
            }
            if (allowed && std::abs(m(r, c)) < 1e-8) {
                ++missing;
            }
        }
    }
    report(4, "mode-coupling structure", stray == 0 && missing == 0,
           std::to_string(stray) + " nonzero forbidden entries, " + std::to_string(missing) +
               " vanishing allowed entries");
}

void criterion_5(const SweepResult& s) {
    const BraKetQuery probe{{0, 0}, {TrigKind::Sin, 1, 0}, {0, 0}};
    const double main = overlap(probe, EvalMethod::MainText);
    const double quad = overlap(probe, EvalMethod::Quadrature);
    const double quarter_pi = std::numbers::pi / 4;
    cli::VerifyOptions o;
    o.l_max = 1;
    o.n_max = 1;
    o.k_max = 0;
    std::ostringstream text;
    cli::print_verify_report(text, cli::run_verify(o), o.tolerance);
    const bool recorded = text.str().find("do not vanish") != std::string::npos;
    const bool pass = s.axisym_vs_main <= 1e-13 && std::abs(main - quarter_pi) <= 1e-12 &&
                      std::abs(quad - quarter_pi) <= 1e-12 && recorded;
    report(5, "axisymmetric forms and sine probe", pass,
           fmt("axisymmetric cos vs general max %.3g", s.axisym_vs_main) +
               fmt(", sine probe main %.17g", main) + fmt(", quadrature %.17g", quad) +
               (recorded ? ", non-vanishing noted in verify report" : ", verify report lacks the note"));
}

void criterion_6() {
    // Clebsch-Gordan orthogonality in exact arithmetic, j1, j2 <= 6.
    bool cg_ok = true;
    std::size_t sums = 0;
    for (int j1 = 0; j1 <= 6; ++j1) {
        for (int j2 = 0; j2 <= 6; ++j2) {
            for (int m = -(j1 + j2); m <= j1 + j2; ++m) {
                for (int j = std::abs(j1 - j2); j <= j1 + j2; ++j) {
                    for (int jp = j; jp <= j1 + j2; ++jp) {
                        if (std::abs(m) > j || std::abs(m) > jp) {
                            continue;
                        }
                        ExactRational sum = 0;
                        SignedSqrtRational first;
                        for (int m1 = -j1; m1 <= j1; ++m1) {
                            const int m2 = m - m1;
                            if (std::abs(m2) > j2) {
                                continue;
                            }
                            const auto a = clebsch_gordan(j1, m1, j2, m2, j, m);
                            if (j == jp) {
                                sum += a.radicand();
                                continue;
                            }
                            const auto p = a * clebsch_gordan(j1, m1, j2, m2, jp, m);
                            if (p.is_zero()) {
                                continue;
                            }
                            if (first.is_zero()) {
                                first = p;
                            }
                            const auto ratio = oracles::exact_sqrt(p.radicand() / first.radicand());
                            if (!ratio) {
                                cg_ok = false;
                                continue;
                            }
                            sum += p.sign() * *ratio;
                        }
                        cg_ok = cg_ok && sum == (j == jp ? 1 : 0);
                        ++sums;
                    }
                }
            }
        }
    }
    bool compose_ok = true;
    for (int l = 0; l <= 12; ++l) {
        LegendreExpansion round_trip;
        const auto cheb = legendre_in_chebyshev(l);
        for (const auto& t : cheb.terms()) {
            const auto back = chebyshev_in_legendre(t.index);
            for (const auto& u : back.terms()) {
                round_trip.add(u.index, t.coefficient * u.coefficient);
            }
        }
        compose_ok = compose_ok && round_trip == LegendreExpansion{{l, 1}};
    }
    const ExactRational i22 = trig_projection(2, 2);
    const bool proj_ok = i22 == ExactRational(8, 15);
    report(6, "exact algebra", cg_ok && compose_ok && proj_ok,
           std::to_string(sums) + " orthogonality sums " + (cg_ok ? "exact" : "NOT exact") +
               ", basis composition " + (compose_ok ? "identity" : "NOT identity") +
               ", I(2,2) = " + to_string(i22));
}

void criterion_7() {
    double worst = 0.0;
    double band_leak = 0.0;
    const double mu_r = 1.7;
    const double mu_0 = 0.4;
    for (int q = 1; q <= 3; ++q) {
        const auto m = effective_mass_coupling({q, mu_r, mu_0}, 6);
        const auto f = [&](double t, double) {
            return std::complex<double>(mu_r * std::pow(std::sin(t), 2 * q) + mu_0, 0.0);
        };
        for (int r = 0; r < m.dimension(); ++r) {
            for (int c = 0; c < m.dimension(); ++c) {
                const auto a = CouplingMatrix::harmonic(r);
                const auto b = CouplingMatrix::harmonic(c);
                const auto ref = oracle::quadrature_function_overlap(a, b, f);
                worst = std::max(worst, std::abs(m(r, c) - ref.real()));
                if (std::abs(a.l - b.l) > 2 * q) {
                    band_leak = std::max(band_leak, std::abs(m(r, c)));
                }
            }
        }
    }
    report(7, "effective-mass pipeline", worst <= 1e-10 && band_leak <= 1e-12,
           fmt("max deviation from 2D quadrature %.3g", worst) +
               fmt(", max entry outside bandwidth 2q %.3g", band_leak));
}

void criterion_8() {
    cli::BenchOptions o;
    o.truncation = 10;
    o.op = {TrigKind::Cos, 2, 0};
    o.repeat = 5;
    const auto r = cli::run_bench(o);
    const double cold = r.speedup_vs_quadrature_cold();
    report(8, "performance (soft)", cold > 1.0,
           fmt("main vs quadrature speedup %.3g", cold) + fmt(" cold, %.3g", r.speedup_vs_quadrature_warm()) +
               " warm" + fmt("; main vs appendix-a %.3g", r.speedup_vs_appendix_cold()) + " cold" +
               fmt(", %.3g warm", r.speedup_vs_appendix_warm()));
}

}  // namespace

int main() {
    const SweepResult s = run_sweep();
    const std::string where =
        std::to_string(s.queries) + " queries in " + fmt("%.2f s", s.seconds);
    report(1, "oracle equivalence", s.main_vs_quadrature <= 1e-10,
           fmt("max |main - quadrature| %.3g over ", s.main_vs_quadrature) + where);
    report(2, "derivation equivalence", s.main_vs_appendix <= 1e-12,
           fmt("max |main - appendix-a| %.3g", s.main_vs_appendix));
    criterion_3();
    criterion_4();
    criterion_5(s);
    criterion_6();
    criterion_7();
    criterion_8();
    std::printf("%d criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
