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

#include "matrix_io.hpp"

#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace sphbraket::cli {

namespace {

constexpr const char* kOrdering = "l*l+l+m";

template <typename Fn>
void for_each_nonzero(const CouplingMatrix& m, Fn&& fn) {
    for (int row = 0; row < m.dimension(); ++row) {
        for (int col = 0; col < m.dimension(); ++col) {
            const double v = m(row, col);
            if (v != 0.0) {
                fn(CouplingMatrix::harmonic(row), CouplingMatrix::harmonic(col), v);
            }
        }
    }
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, sep)) {
        out.push_back(field);
    }
    return out;
}

}  // namespace

std::string format_real(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_matrix_csv(std::ostream& os, const CouplingMatrix& m) {
    os << "# L=" << m.truncation() << " ordering=" << kOrdering << '\n';
    os << "l1,m1,l2,m2,value\n";
    for_each_nonzero(m, [&](HarmonicIndex bra, HarmonicIndex ket, double v) {
        os << bra.l << ',' << bra.m << ',' << ket.l << ',' << ket.m << ',' << format_real(v)
           << '\n';
    });
}

void write_matrix_json(std::ostream& os, const CouplingMatrix& m) {
    // Written by hand so values keep the same 17-digit form as the CSV.
    os << "{\"L\":" << m.truncation() << ",\"ordering\":\"" << kOrdering << "\",\"entries\":[";
    bool first = true;
    for_each_nonzero(m, [&](HarmonicIndex bra, HarmonicIndex ket, double v) {
        os << (first ? "" : ",") << "\n{\"l1\":" << bra.l << ",\"m1\":" << bra.m
           << ",\"l2\":" << ket.l << ",\"m2\":" << ket.m << ",\"value\":" << format_real(v)
           << '}';
        first = false;
    });
    os << "\n]}\n";
}

CouplingMatrix read_matrix_csv(std::istream& is) {
    std::string line;
    if (!std::getline(is, line) || line.rfind("# L=", 0) != 0) {
        throw std::runtime_error("matrix csv: missing '# L=' metadata line");
    }
    int truncation = -1;
    try {
        truncation = std::stoi(line.substr(4));
    } catch (const std::exception&) {
        throw std::runtime_error("matrix csv: bad truncation in metadata line");
    }
    CouplingMatrix m(truncation);
    if (!std::getline(is, line) || line != "l1,m1,l2,m2,value") {
        throw std::runtime_error("matrix csv: missing header row");
    }
    int lineno = 2;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) {
            continue;
        }
        const auto f = split(line, ',');
        if (f.size() != 5) {
            throw std::runtime_error("matrix csv: line " + std::to_string(lineno) +
                                     " does not have 5 fields");
        }
        try {
            const HarmonicIndex bra{std::stoi(f[0]), std::stoi(f[1])};
            const HarmonicIndex ket{std::stoi(f[2]), std::stoi(f[3])};
            const double v = std::stod(f[4]);
            if (!bra.is_valid() || !ket.is_valid() || bra.l > truncation || ket.l > truncation) {
                throw std::out_of_range("index");
            }
            m(CouplingMatrix::index(bra.l, bra.m), CouplingMatrix::index(ket.l, ket.m)) = v;
        } catch (const std::logic_error&) {
            throw std::runtime_error("matrix csv: bad entry on line " + std::to_string(lineno));
        }
    }
    return m;
}

}  // namespace sphbraket::cli
