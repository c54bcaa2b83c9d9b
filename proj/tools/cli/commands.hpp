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

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "sphbraket/braket.hpp"

namespace sphbraket::cli {

/// Runs the command line `args` (without the program name). Everything goes to
/// `out` and `err`; the return value is the process exit code (0 or 1).
int run(std::vector<std::string> args, std::ostream& out, std::ostream& err);

struct VerifyOptions {
    int l_max = 4;
    int n_max = 4;
    int k_max = 2;
    double tolerance = 1e-10;
    std::size_t worst_count = 5;
    oracle::QuadratureSpec quadrature{};
};

struct Offender {
    BraKetQuery query;
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation() const;
};

/// Largest disagreement between two evaluation routes over the sweep.
struct PairDeviation {
    std::string name;
    std::size_t compared = 0;
    double max_deviation = 0.0;
    std::vector<Offender> worst;  // largest first
};

struct VerifyReport {
    std::size_t queries = 0;
    std::vector<PairDeviation> pairs;
    double sine_probe_main = 0.0;
    double sine_probe_quadrature = 0.0;
    bool passed(double tolerance) const;
};

/// Sweeps every query with l1, l2 <= l_max, all m, 0 <= n <= n_max,
/// |k| <= k_max and both kinds, comparing main, appendix-a and quadrature,
/// plus the direct k = 0 cosine formula against main.
VerifyReport run_verify(const VerifyOptions& options);
void print_verify_report(std::ostream& os, const VerifyReport& report, double tolerance);

struct BenchOptions {
    int truncation = 10;
    TrigTerm op{TrigKind::Cos, 2, 0};
    int repeat = 3;
    unsigned threads = 1;
    oracle::QuadratureSpec quadrature{};
};

/// Median wall times in seconds. "cold" assemblies start from empty memo
/// tables, "warm" ones reuse the tables left by the cold run.
struct BenchReport {
    double main_cold = 0.0;
    double main_warm = 0.0;
    double appendix_cold = 0.0;
    double appendix_warm = 0.0;
    double quadrature = 0.0;
    /// quadrature time over main time; > 1 means main is faster
    double speedup_vs_quadrature_cold() const { return quadrature / main_cold; }
    double speedup_vs_quadrature_warm() const { return quadrature / main_warm; }
    /// appendix-a time over main time
    double speedup_vs_appendix_cold() const { return appendix_cold / main_cold; }
    double speedup_vs_appendix_warm() const { return appendix_warm / main_warm; }
};

BenchReport run_bench(const BenchOptions& options);
void print_bench_report(std::ostream& os, const BenchOptions& options, const BenchReport& report);

}  // namespace sphbraket::cli
