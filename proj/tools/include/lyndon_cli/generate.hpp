// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace lyndon::cli {

enum class GenKind { bbba, aaab, fib, rand };

/// Parsed form of KIND:SIZE[:SEED], or rand:SIGMA:SIZE[:SEED].
struct GenSpec {
    GenKind kind = GenKind::rand;
    std::size_t size = 0;     // symbols before the sentinel
    int sigma = 2;            // rand only
    std::uint64_t seed = 1;   // rand only

    std::string name() const;
    GenSpec with_size(std::size_t n) const;
};

/// Throws Error(bad_spec) on malformed input.
GenSpec parse_gen_spec(std::string_view spec);

/// Raw symbols without the sentinel:
///   bbba  b^(size-1) a
///   aaab  a^(size-1) b        (avelyn close to n/2)
///   fib   Fibonacci word over {a,b} (s1 = b, s2 = a, s_k = s_(k-1) s_(k-2)) cut to size
///   rand  uniform over sigma symbols: 'a'.. for sigma <= 26, else bytes 1..sigma
std::string generate(const GenSpec& spec);

}  // namespace lyndon::cli
