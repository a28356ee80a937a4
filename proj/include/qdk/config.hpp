/**************************************************************************
 * Copyright 2026 The qdk Authors
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
 **************************************************************************/

#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "error.hpp"

namespace qdk {

/// Largest field order accepted by field_create.
inline constexpr std::uint64_t field_cap = std::uint64_t{1} << 20;

/// Default enumeration limits. Every one of them is replaced by the value of
/// the QDK_CAP environment variable when that is set to a positive integer.
struct caps {
    static constexpr std::uint64_t grassmannian = 10'000'000;
    static constexpr std::uint64_t group = 1'000'000;
    static constexpr std::uint64_t brute_polys = std::uint64_t{1} << 24;
    static constexpr std::uint64_t codewords = std::uint64_t{1} << 24;
    static constexpr std::uint64_t subsets = 10'000'000;
    static constexpr std::uint64_t tuples = std::uint64_t{1} << 24;
};

namespace detail {

inline std::uint64_t env_cap_override() {
    static const std::uint64_t value = [] {
        const char* raw = std::getenv("QDK_CAP");
        if (raw == nullptr || *raw == '\0') return std::uint64_t{0};
        char* end = nullptr;
        unsigned long long v = std::strtoull(raw, &end, 10);
        if (end == raw || *end != '\0') return std::uint64_t{0};
        return static_cast<std::uint64_t>(v);
    }();
    return value;
}

inline std::atomic<unsigned>& thread_budget_storage() {
    static std::atomic<unsigned> budget{1};
    return budget;
}

}  // namespace detail

inline std::uint64_t effective_cap(std::uint64_t default_cap) {
    std::uint64_t env = detail::env_cap_override();
    return env != 0 ? env : default_cap;
}

inline void require_within_cap(std::uint64_t count, std::uint64_t default_cap, const std::string& what) {
    std::uint64_t cap = effective_cap(default_cap);
    if (count > cap)
        raise(errc::cap_exceeded, what + ": " + std::to_string(count) + " exceeds cap " + std::to_string(cap));
}

/// Worker budget for the internally parallel enumerations. Results never
/// depend on it.
inline unsigned thread_budget() { return detail::thread_budget_storage().load(); }
inline void set_thread_budget(unsigned n) { detail::thread_budget_storage().store(std::max(1u, n)); }

namespace detail {

/// Splits [0, count) into contiguous chunks and runs body(chunk_index, lo, hi)
/// on up to thread_budget() workers. Chunk boundaries depend only on `count`
/// and the chunk count, so callers reduce per-chunk results in index order.
template <class Body>
void parallel_chunks(std::uint64_t count, std::size_t chunks, Body&& body) {
    if (chunks == 0) return;
    auto bounds = [&](std::size_t c) { return count * c / chunks; };
    unsigned workers = std::min<unsigned>(thread_budget(), static_cast<unsigned>(chunks));
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks; ++c) body(c, bounds(c), bounds(c + 1));
        return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> failures(workers);
    {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w)
            pool.emplace_back([&, w] {
                try {
                    for (std::size_t c = next++; c < chunks; c = next++) body(c, bounds(c), bounds(c + 1));
                } catch (...) {
                    failures[w] = std::current_exception();
                    next = chunks;
                }
            });
    }
    for (auto& f : failures)
        if (f) std::rethrow_exception(f);
}

}  // namespace detail
}  // namespace qdk
