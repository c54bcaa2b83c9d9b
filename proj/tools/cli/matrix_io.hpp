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

#include <iosfwd>
#include <string>

#include "sphbraket/braket.hpp"

namespace sphbraket::cli {

/// Shortest form that survives a decimal round trip (17 significant digits).
std::string format_real(double v);

/// Sparse CSV: metadata comment, header, then every nonzero entry in
/// row-major basis order.
///
///   # L=<L> ordering=l*l+l+m
///   l1,m1,l2,m2,value
void write_matrix_csv(std::ostream& os, const CouplingMatrix& m);

/// {"L": .., "ordering": "l*l+l+m", "entries": [{l1, m1, l2, m2, value}, ...]}
void write_matrix_json(std::ostream& os, const CouplingMatrix& m);

/// Inverse of write_matrix_csv. Throws std::runtime_error on malformed input.
CouplingMatrix read_matrix_csv(std::istream& is);

}  // namespace sphbraket::cli
