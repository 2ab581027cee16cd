// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon_cli/serialize.hpp"

#include <string>

#include "lyndon/error.hpp"

namespace lyndon::cli {
namespace {

std::uint64_t read_le(std::istream& is, int width) {
    std::array<unsigned char, 8> buf{};
    if (!is.read(reinterpret_cast<char*>(buf.data()), width)) {
        throw Error(ErrorCode::io_error, "truncated binary record");
    }
    std::uint64_t value = 0;
    for (int i = width - 1; i >= 0; --i) value = (value << 8) | buf[static_cast<std::size_t>(i)];
    return value;
}

}  // namespace

void write_le(std::ostream& os, std::uint64_t value, int width) {
    std::array<char, 8> buf{};
    for (int i = 0; i < width; ++i) {
        buf[static_cast<std::size_t>(i)] = static_cast<char>(value & 0xff);
        value >>= 8;
    }
    os.write(buf.data(), width);
}

std::vector<ArrayRecord> read_binary(std::istream& is) {
    std::vector<ArrayRecord> records;
    for (;;) {
        std::string magic(8, '\0');
        is.read(magic.data(), 8);
        if (is.gcount() == 0) break;
        if (is.gcount() != 8) throw Error(ErrorCode::io_error, "truncated record header");

        ArrayRecord rec;
        if (magic == kSaMagic) {
            rec.kind = ArrayKind::sa;
        } else if (magic == kLaMagic) {
            rec.kind = ArrayKind::la;
        } else {
            throw Error(ErrorCode::io_error, "bad record magic");
        }
        const std::uint64_t count = read_le(is, 8);
        rec.width = static_cast<int>(read_le(is, 1));
        if (rec.width != 4 && rec.width != 8) throw Error(ErrorCode::io_error, "bad entry width");

        rec.values.reserve(static_cast<std::size_t>(count));
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t raw = read_le(is, rec.width);
            rec.values.push_back(rec.width == 4 ? static_cast<std::int32_t>(static_cast<std::uint32_t>(raw))
                                                : static_cast<std::int64_t>(raw));
        }
        records.push_back(std::move(rec));
    }
    return records;
}

}  // namespace lyndon::cli
