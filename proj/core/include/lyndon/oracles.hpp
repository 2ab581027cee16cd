// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Slow reference implementations. They share no code with the induced
// sorting path and are meant for tests and the CLI's --check mode.

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "lyndon/text.hpp"

namespace lyndon::oracle {

/// True iff `factor` is strictly smaller than each of its proper rotations
/// (which also rules out non-primitive words). Quadratic.
bool is_lyndon(std::span<const symbol_t> factor);

/// LA by the definition: longest Lyndon prefix of every suffix. Cubic.
LyndonArray<> la_bruteforce(const Text& text);

/// SA by comparison-sorting the suffixes.
SuffixArray<> sa_naive(const Text& text);

/// Throws Error(malformed_permutation) unless sa is a permutation of 1..n.
InverseSuffixArray<> isa_from_sa(std::span<const std::int32_t> sa);
InverseSuffixArray<std::int64_t> isa_from_sa(std::span<const std::int64_t> sa);

struct NsvResult {
    std::vector<std::int64_t> nsv;  // 1-based; n + 1 when no smaller value follows
    std::size_t max_stack_depth = 0;
};

/// Next smaller value by a right-to-left stack scan.
NsvResult nsv(std::span<const std::int64_t> values);

/// LA[i] = NSV_ISA[i] - i.
LyndonArray<> la_from_nsv(std::span<const std::int32_t> isa, std::size_t* max_stack_depth = nullptr);
LyndonArray<std::int64_t> la_from_nsv(std::span<const std::int64_t> isa, std::size_t* max_stack_depth = nullptr);

}  // namespace lyndon::oracle
