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

#include "sphbraket/query.hpp"

#include <stdexcept>

namespace sphbraket {

void BraKetQuery::validate() const {
    if (!bra.is_valid() || !ket.is_valid()) {
        throw std::invalid_argument("invalid harmonic index in bra-ket query: need l >= 0 and |m| <= l");
    }
}

}  // namespace sphbraket
