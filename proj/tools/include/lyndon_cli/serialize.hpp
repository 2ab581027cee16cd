// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Output formats.
//
// text:   one 1-based integer per line; with both arrays, "SA<TAB>LA" per line.
// binary: per array one record
//           8 bytes  magic, "LYNDSA01" or "LYNDLA01"
//           8 bytes  entry count, little endian
//           1 byte   entry width in bytes (4 or 8)
//           count * width bytes, little endian signed integers

#include <array>
#include <cstdint>
#include <istream>
#include <ostream>
#include <span>
#include <string_view>
#include <vector>

namespace lyndon::cli {

enum class ArrayKind { sa, la };

inline constexpr std::string_view kSaMagic = "LYNDSA01";
inline constexpr std::string_view kLaMagic = "LYNDLA01";

template <class Index>
void write_text(std::ostream& os, std::span<const Index> values) {
    for (const Index v : values) os << v << '\n';
}

template <class Index>
void write_text_pairs(std::ostream& os, std::span<const Index> sa, std::span<const Index> la) {
    for (std::size_t i = 0; i < sa.size(); ++i) os << sa[i] << '\t' << la[i] << '\n';
}

void write_le(std::ostream& os, std::uint64_t value, int width);

template <class Index>
void write_binary(std::ostream& os, ArrayKind kind, std::span<const Index> values) {
    constexpr int width = sizeof(Index);
    static_assert(width == 4 || width == 8);
    os << (kind == ArrayKind::sa ? kSaMagic : kLaMagic);
    write_le(os, values.size(), 8);
    os.put(static_cast<char>(width));
    for (const Index v : values) write_le(os, static_cast<std::uint64_t>(static_cast<std::int64_t>(v)), width);
}

struct ArrayRecord {
    ArrayKind kind = ArrayKind::sa;
    int width = 4;
    std::vector<std::int64_t> values;
};

/// Reads every record up to end of stream. Throws Error(io_error) on a
/// truncated or malformed stream.
std::vector<ArrayRecord> read_binary(std::istream& is);

}  // namespace lyndon::cli
