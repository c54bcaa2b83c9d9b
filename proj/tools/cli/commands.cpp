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

#include "commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "matrix_io.hpp"
#include "sphbraket/fourier_driver.hpp"

namespace sphbraket::cli {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string describe(const BraKetQuery& q) {
    std::ostringstream os;
    os << "<" << q.bra.l << "," << q.bra.m << "| e^{i" << q.op.k << "phi} " << to_string(q.op.kind)
       << "(" << q.op.n << " theta) |" << q.ket.l << "," << q.ket.m << ">";
    return os.str();
}

// Keeps the `capacity` largest deviations seen so far.
void record(PairDeviation& pair, const BraKetQuery& q, double lhs, double rhs, std::size_t capacity) {
    ++pair.compared;
    const Offender o{q, lhs, rhs};
    const double dev = o.deviation();
    pair.max_deviation = std::max(pair.max_deviation, dev);
    if (capacity == 0 || dev == 0.0) {
        return;
    }
    auto larger = [](const Offender& a, const Offender& b) { return a.deviation() > b.deviation(); };
    if (pair.worst.size() < capacity) {
        pair.worst.insert(std::upper_bound(pair.worst.begin(), pair.worst.end(), o, larger), o);
    } else if (dev > pair.worst.back().deviation()) {
        pair.worst.pop_back();
        pair.worst.insert(std::upper_bound(pair.worst.begin(), pair.worst.end(), o, larger), o);
    }
}

// --- overlap ---------------------------------------------------------------

struct OverlapArgs {
    int l1 = 0, m1 = 0, l2 = 0, m2 = 0;
    std::string kind = "cos";
    int n = 0, k = 0;
    std::string method = "main";
    std::string format = "plain";
};

int cmd_overlap(const OverlapArgs& a, std::ostream& out, std::ostream& err) {
    const BraKetQuery q{{a.l1, a.m1}, {parse_trig_kind(a.kind), a.n, a.k}, {a.l2, a.m2}};
    if (a.n < 0) {
        throw std::invalid_argument("--n must be non-negative");
    }
    const EvalMethod method = parse_eval_method(a.method);
    if (!within_validated_envelope(q)) {
        err << "warning: l or n above " << kValidatedEnvelope
            << "; closed-form values may lose precision\n";
    }
    const auto start = Clock::now();
    const double value = overlap(q, method);
    const double elapsed_us = seconds_since(start) * 1e6;
    if (a.format == "plain") {
        out << format_real(value) << '\n';
    } else if (a.format == "csv") {
        out << "l1,m1,kind,n,k,l2,m2,value,method,elapsed_us\n"
            << a.l1 << ',' << a.m1 << ',' << a.kind << ',' << a.n << ',' << a.k << ',' << a.l2
            << ',' << a.m2 << ',' << format_real(value) << ',' << to_string(method) << ','
            << format_real(elapsed_us) << '\n';
    } else {
        out << "{\"l1\":" << a.l1 << ",\"m1\":" << a.m1 << ",\"kind\":\"" << a.kind
            << "\",\"n\":" << a.n << ",\"k\":" << a.k << ",\"l2\":" << a.l2 << ",\"m2\":" << a.m2
            << ",\"value\":" << format_real(value) << ",\"method\":\"" << to_string(method)
            << "\",\"elapsed_us\":" << format_real(elapsed_us) << "}\n";
    }
    return 0;
}

// --- matrix ----------------------------------------------------------------

struct MatrixArgs {
    int truncation = 0;
    std::string kind = "cos";
    int n = 0, k = 0;
    bool effective_mass = false;
    int q = 1;
    double mu_r_sq = 0.0, mu_0_sq = 0.0;
    std::string method = "main";
    std::string out_path;
    std::string format = "csv";
    unsigned threads = 1;
};

int cmd_matrix(const MatrixArgs& a, std::ostream& out) {
    const EvalMethod method = parse_eval_method(a.method);
    AssemblyOptions options;
    options.threads = a.threads;
    CouplingMatrix m(a.truncation);
    if (a.effective_mass) {
        m = effective_mass_coupling({a.q, a.mu_r_sq, a.mu_0_sq}, a.truncation, method, options);
    } else {
        if (a.n < 0) {
            throw std::invalid_argument("--n must be non-negative");
        }
        m = coupling_matrix({parse_trig_kind(a.kind), a.n, a.k}, a.truncation, method, options);
    }
    auto write = [&](std::ostream& os) {
        if (a.format == "json") {
            write_matrix_json(os, m);
        } else {
            write_matrix_csv(os, m);
        }
    };
    if (a.out_path.empty()) {
        write(out);
        return 0;
    }
    std::ofstream file(a.out_path);
    if (!file) {
        throw std::runtime_error("cannot open '" + a.out_path + "' for writing");
    }
    write(file);
    file.close();
    if (!file) {
        throw std::runtime_error("failed writing '" + a.out_path + "'");
    }
    return 0;
}

// --- expand ----------------------------------------------------------------

int cmd_expand(int q, std::ostream& out) {
    out << "kind,n,k,coefficient\n";
    const FourierSeries series = sin_power_expand(q);
    for (const auto& [term, c] : series.terms()) {
        out << to_string(term.kind) << ',' << term.n << ',' << term.k << ',' << format_real(c)
            << '\n';
    }
    return 0;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t h = v.size() / 2;
    return v.size() % 2 == 1 ? v[h] : 0.5 * (v[h - 1] + v[h]);
}

}  // namespace

double Offender::deviation() const {
    return std::abs(lhs - rhs);
}

bool VerifyReport::passed(double tolerance) const {
    return std::all_of(pairs.begin(), pairs.end(),
                       [&](const PairDeviation& p) { return p.max_deviation <= tolerance; });
}

VerifyReport run_verify(const VerifyOptions& o) {
    if (o.l_max < 0 || o.n_max < 0 || o.k_max < 0) {
        throw std::invalid_argument("verify: cutoffs must be non-negative");
    }
    if (!(o.tolerance >= 0.0)) {
        throw std::invalid_argument("verify: tolerance must be non-negative");
    }
    o.quadrature.validate();
    VerifyReport r;
    for (const char* name : {"main vs quadrature", "main vs appendix-a", "appendix-a vs quadrature",
                             "axisymmetric cos vs main"}) {
        PairDeviation p;
        p.name = name;
        r.pairs.push_back(std::move(p));
    }
    for (int l1 = 0; l1 <= o.l_max; ++l1) {
        for (int m1 = -l1; m1 <= l1; ++m1) {
            for (int l2 = 0; l2 <= o.l_max; ++l2) {
                for (int m2 = -l2; m2 <= l2; ++m2) {
                    for (const TrigKind kind : {TrigKind::Cos, TrigKind::Sin}) {
                        for (int n = 0; n <= o.n_max; ++n) {
                            for (int k = -o.k_max; k <= o.k_max; ++k) {
                                const BraKetQuery q{{l1, m1}, {kind, n, k}, {l2, m2}};
                                ++r.queries;
                                const double main = overlap(q, EvalMethod::MainText);
                                const double appx = overlap(q, EvalMethod::AppendixA);
                                const double quad = overlap(q, EvalMethod::Quadrature, o.quadrature);
                                record(r.pairs[0], q, main, quad, o.worst_count);
                                record(r.pairs[1], q, main, appx, o.worst_count);
                                record(r.pairs[2], q, appx, quad, o.worst_count);
                                if (kind == TrigKind::Cos && k == 0) {
                                    record(r.pairs[3], q, overlap_axisym_cos(l1, m1, n, l2, m2),
                                           main, o.worst_count);
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    const BraKetQuery probe{{0, 0}, {TrigKind::Sin, 1, 0}, {0, 0}};
    r.sine_probe_main = overlap(probe, EvalMethod::MainText);
    r.sine_probe_quadrature = overlap(probe, EvalMethod::Quadrature, o.quadrature);
    return r;
}

void print_verify_report(std::ostream& os, const VerifyReport& r, double tolerance) {
    os << "queries: " << r.queries << "\ntolerance: " << format_real(tolerance) << '\n';
    for (const auto& p : r.pairs) {
        os << p.name << ": max deviation " << format_real(p.max_deviation) << " over "
           << p.compared << " queries " << (p.max_deviation <= tolerance ? "ok" : "FAILED") << '\n';
    }
    os << "sine probe <0,0| sin(theta) |0,0>: main " << format_real(r.sine_probe_main)
       << ", quadrature " << format_real(r.sine_probe_quadrature) << ", pi/4 "
       << format_real(std::numbers::pi / 4) << '\n'
       << "note: k = 0 sine overlaps do not vanish in general; the probe above is nonzero\n";
    for (const auto& p : r.pairs) {
        if (p.max_deviation <= tolerance) {
            continue;
        }
        os << "worst offenders (" << p.name << "):\n";
        for (const auto& o : p.worst) {
            os << "  " << describe(o.query) << "  " << format_real(o.lhs) << " vs "
               << format_real(o.rhs) << "  |diff| " << format_real(o.deviation()) << '\n';
        }
    }
}

BenchReport run_bench(const BenchOptions& o) {
    if (o.repeat < 1) {
        throw std::invalid_argument("bench: --repeat must be at least 1");
    }
    AssemblyOptions options;
    options.threads = o.threads;
    options.quadrature = o.quadrature;
    std::vector<double> main_cold, main_warm, appx_cold, appx_warm, quad;
    auto time = [&](EvalMethod method) {
        const auto start = Clock::now();
        const CouplingMatrix m = coupling_matrix(o.op, o.truncation, method, options);
        const double t = seconds_since(start);
        if (m.dimension() == 0) {
            throw std::logic_error("empty matrix");
        }
        return t;
    };
    // Node tables are shared by every quadrature run; build them up front.
    oracle::gauss_legendre(o.quadrature.theta_nodes);
    for (int r = 0; r < o.repeat; ++r) {
        clear_braket_caches();
        main_cold.push_back(time(EvalMethod::MainText));
        main_warm.push_back(time(EvalMethod::MainText));
        clear_braket_caches();
        appx_cold.push_back(time(EvalMethod::AppendixA));
        appx_warm.push_back(time(EvalMethod::AppendixA));
        quad.push_back(time(EvalMethod::Quadrature));
    }
    return {median(main_cold), median(main_warm), median(appx_cold), median(appx_warm),
            median(quad)};
}

void print_bench_report(std::ostream& os, const BenchOptions& o, const BenchReport& r) {
    const int dim = (o.truncation + 1) * (o.truncation + 1);
    os << "matrix: L=" << o.truncation << " (" << dim << "x" << dim << "), operator e^{i" << o.op.k
       << "phi} " << to_string(o.op.kind) << "(" << o.op.n << " theta), repeat " << o.repeat
       << ", threads " << o.threads << ", quadrature nodes " << o.quadrature.theta_nodes << '\n'
       << "median seconds:\n"
       << "  main        cold " << format_real(r.main_cold) << "  warm " << format_real(r.main_warm)
       << '\n'
       << "  appendix-a  cold " << format_real(r.appendix_cold) << "  warm "
       << format_real(r.appendix_warm) << '\n'
       << "  quadrature       " << format_real(r.quadrature) << '\n'
       << "speedup main vs quadrature: cold " << format_real(r.speedup_vs_quadrature_cold())
       << "  warm " << format_real(r.speedup_vs_quadrature_warm()) << '\n'
       << "speedup main vs appendix-a: cold " << format_real(r.speedup_vs_appendix_cold())
       << "  warm " << format_real(r.speedup_vs_appendix_warm()) << '\n';
}

int run(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Overlap integrals of spherical harmonics with trigonometric operators", "sphbraket"};
    app.require_subcommand(1);
    const std::vector<std::string> methods{"main", "appendix-a", "quadrature"};
    const std::vector<std::string> kinds{"cos", "sin"};

    OverlapArgs ov;
    auto* overlap_cmd = app.add_subcommand("overlap", "Evaluate one overlap <l1 m1| op |l2 m2>");
    overlap_cmd->add_option("--l1", ov.l1)->required();
    overlap_cmd->add_option("--m1", ov.m1)->required();
    overlap_cmd->add_option("--l2", ov.l2)->required();
    overlap_cmd->add_option("--m2", ov.m2)->required();
    overlap_cmd->add_option("--kind", ov.kind)->required()->check(CLI::IsMember(kinds));
    overlap_cmd->add_option("--n", ov.n, "polar multiple")->required();
    overlap_cmd->add_option("--k", ov.k, "azimuthal multiple")->required();
    overlap_cmd->add_option("--method", ov.method)->check(CLI::IsMember(methods))->capture_default_str();
    overlap_cmd->add_option("--format", ov.format)
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();

    MatrixArgs mx;
    auto* matrix_cmd = app.add_subcommand("matrix", "Assemble a coupling matrix up to degree L");
    matrix_cmd->add_option("--L", mx.truncation, "truncation degree")->required()->check(CLI::NonNegativeNumber);
    auto* kind_opt = matrix_cmd->add_option("--kind", mx.kind)->check(CLI::IsMember(kinds));
    auto* n_opt = matrix_cmd->add_option("--n", mx.n);
    auto* k_opt = matrix_cmd->add_option("--k", mx.k);
    auto* em_flag = matrix_cmd->add_flag("--effective-mass", mx.effective_mass,
                                         "mu_r^2 sin^{2q}(theta) + mu_0^2 instead of a single term");
    auto* q_opt = matrix_cmd->add_option("--q", mx.q)->check(CLI::PositiveNumber);
    auto* mur_opt = matrix_cmd->add_option("--mu-r-sq", mx.mu_r_sq);
    auto* mu0_opt = matrix_cmd->add_option("--mu-0-sq", mx.mu_0_sq);
    matrix_cmd->add_option("--method", mx.method)->check(CLI::IsMember(methods))->capture_default_str();
    matrix_cmd->add_option("--out", mx.out_path, "output file (default: standard output)");
    matrix_cmd->add_option("--format", mx.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    matrix_cmd->add_option("--threads", mx.threads, "worker threads, 0 for all cores")->capture_default_str();
    for (auto* opt : {kind_opt, n_opt, k_opt}) {
        opt->excludes(em_flag);
    }
    for (auto* opt : {q_opt, mur_opt, mu0_opt}) {
        opt->needs(em_flag);
    }

    int expand_q = 1;
    auto* expand_cmd = app.add_subcommand("expand", "Print the trigonometric series of sin^{2q}(theta)");
    expand_cmd->add_option("--q", expand_q)->required()->check(CLI::PositiveNumber);

    VerifyOptions vf;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check all evaluation routes over a sweep");
    verify_cmd->add_option("--l-max", vf.l_max)->capture_default_str()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--n-max", vf.n_max)->capture_default_str()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--k-max", vf.k_max)->capture_default_str()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--tolerance", vf.tolerance)->capture_default_str()->check(CLI::NonNegativeNumber);
    verify_cmd->add_option("--quadrature-nodes", vf.quadrature.theta_nodes)->capture_default_str();

    BenchOptions bn;
    std::string bench_kind = "cos";
    auto* bench_cmd = app.add_subcommand("bench", "Time full-matrix assembly under each method");
    bench_cmd->add_option("--L", bn.truncation)->capture_default_str()->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--kind", bench_kind)->check(CLI::IsMember(kinds))->capture_default_str();
    bench_cmd->add_option("--n", bn.op.n)->capture_default_str()->check(CLI::NonNegativeNumber);
    bench_cmd->add_option("--k", bn.op.k)->capture_default_str();
    bench_cmd->add_option("--repeat", bn.repeat)->capture_default_str()->check(CLI::PositiveNumber);
    bench_cmd->add_option("--threads", bn.threads)->capture_default_str();
    bench_cmd->add_option("--quadrature-nodes", bn.quadrature.theta_nodes)->capture_default_str();

    // CLI11 consumes a vector from the back.
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (overlap_cmd->parsed()) {
            return cmd_overlap(ov, out, err);
        }
        if (matrix_cmd->parsed()) {
            if (!mx.effective_mass && (kind_opt->count() == 0 || n_opt->count() == 0 || k_opt->count() == 0)) {
                throw std::invalid_argument("matrix needs --kind, --n and --k, or --effective-mass");
            }
            if (mx.effective_mass && (q_opt->count() == 0 || mur_opt->count() == 0 || mu0_opt->count() == 0)) {
                throw std::invalid_argument("--effective-mass needs --q, --mu-r-sq and --mu-0-sq");
            }
            return cmd_matrix(mx, out);
        }
        if (expand_cmd->parsed()) {
            return cmd_expand(expand_q, out);
        }
        if (verify_cmd->parsed()) {
            const VerifyReport report = run_verify(vf);
            print_verify_report(out, report, vf.tolerance);
            if (!report.passed(vf.tolerance)) {
                err << "verify: deviations exceed tolerance " << format_real(vf.tolerance) << '\n';
                return 1;
            }
            return 0;
        }
        if (bench_cmd->parsed()) {
            bn.op.kind = parse_trig_kind(bench_kind);
            print_bench_report(out, bn, run_bench(bn));
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}

}  // namespace sphbraket::cli
