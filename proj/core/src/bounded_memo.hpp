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
#include <cstdint>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <unordered_map>

namespace sphbraket::detail {

// Thread-safe memo table with a hard entry cap. When the cap is reached the
// table is flushed; stored values are pure functions of their keys, so a
// flush is never observable beyond the cost of recomputation.
template <typename Value>
class BoundedMemo {
public:
    explicit BoundedMemo(std::size_t capacity) : capacity_(capacity) {}

    template <typename Compute>
    Value get_or_compute(std::uint64_t key, Compute&& compute) {
        {
            std::shared_lock lock(mutex_);
            if (auto it = table_.find(key); it != table_.end()) {
                return it->second;
            }
        }
        Value v = compute();
        std::unique_lock lock(mutex_);
        if (table_.size() >= capacity_) {
            table_.clear();
        }
        table_.emplace(key, v);
        return v;
    }

    void clear() {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    std::size_t capacity_;
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::uint64_t, Value> table_;
};

// Packs small signed integers into a 64-bit key, `bits` bits each. Returns
// nullopt when a value does not fit.
template <int Bits, typename... Ints>
std::optional<std::uint64_t> pack_key(Ints... values) {
    static_assert(sizeof...(Ints) * Bits <= 64);
    constexpr std::int64_t offset = std::int64_t{1} << (Bits - 1);
    std::uint64_t key = 0;
    bool ok = true;
    auto push = [&](std::int64_t v) {
        const std::int64_t shifted = v + offset;
        if (shifted < 0 || shifted >= 2 * offset) {
            ok = false;
            return;
        }
        key = (key << Bits) | static_cast<std::uint64_t>(shifted);
    };
    (push(static_cast<std::int64_t>(values)), ...);
    if (!ok) {
        return std::nullopt;
    }
    return key;
}

}  // namespace sphbraket::detail
