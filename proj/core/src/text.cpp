// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon/text.hpp"

#include <array>
#include <string>

namespace lyndon {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::empty_input: return "EMPTY_INPUT";
        case ErrorCode::sentinel_in_input: return "SENTINEL_IN_INPUT";
        case ErrorCode::malformed_permutation: return "MALFORMED_PERMUTATION";
        case ErrorCode::io_error: return "IO_ERROR";
        case ErrorCode::bad_spec: return "BAD_SPEC";
        case ErrorCode::flag_conflict: return "FLAG_CONFLICT";
        case ErrorCode::check_failed: return "CHECK_FAILED";
    }
    return "UNKNOWN";
}

int Text::effective_sigma() const noexcept {
    std::array<bool, kByteSigma> seen{};
    int distinct = 0;
    for (symbol_t c : symbols_) {
        if (!seen[c]) {
            seen[c] = true;
            ++distinct;
        }
    }
    return distinct;
}

Text load_text(std::span<const symbol_t> raw, TextOptions options) {
    if (raw.empty() && !options.allow_empty) {
        throw Error(ErrorCode::empty_input, "empty input is not allowed");
    }
    std::vector<symbol_t> symbols;
    symbols.reserve(raw.size() + 1);
    for (std::size_t i = 0; i < raw.size(); ++i) {
        if (raw[i] == kSentinel) {
            throw Error(ErrorCode::sentinel_in_input,
                        "input contains byte 0 at offset " + std::to_string(i));
        }
        symbols.push_back(raw[i]);
    }
    symbols.push_back(kSentinel);
    return Text(std::move(symbols));
}

Text load_text(std::string_view raw, TextOptions options) {
    return load_text(std::span<const symbol_t>(reinterpret_cast<const symbol_t*>(raw.data()), raw.size()),
                     options);
}

TypeMap classify(const Text& text) {
    const std::size_t n = text.size();
    std::vector<SuffixType> kinds(n, SuffixType::S);
    for (std::size_t i = n - 1; i >= 1; --i) {
        const symbol_t a = text(i);
        const symbol_t b = text(i + 1);
        kinds[i - 1] = a < b ? SuffixType::S : a > b ? SuffixType::L : kinds[i];
    }
    return TypeMap(std::move(kinds));
}

}  // namespace lyndon
