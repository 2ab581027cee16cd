// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Linear-time suffix sorting by induced sorting (SACA-K).
//
// sort_suffixes() is the production entry point. The step functions below it
// (lms_positions, place_lms, induce_L, induce_S, name_lms_factors) expose the
// individual passes over a caller-owned work buffer for tests and teaching;
// they take a precomputed TypeMap and are not used by sort_suffixes().

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "lyndon/detail/induce.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

/// Work buffer slot value meaning "no suffix here yet".
inline constexpr int kEmptySlot = 0;

/// True when Index can address every position of a text of length n.
template <std::signed_integral Index>
constexpr bool index_fits(std::size_t n) noexcept {
    return n < static_cast<std::size_t>(std::numeric_limits<Index>::max());
}

/// Writes the 1-based suffix array of `text` to `out` (|out| == |text|).
/// Allocates only the 256-cursor bucket array.
template <std::signed_integral Index>
void sort_suffixes_into(const Text& text, std::span<Index> out, SortStats* stats = nullptr) {
    if (out.size() != text.size()) throw std::invalid_argument("output size must equal text size");
    if (!index_fits<Index>(text.size())) throw std::length_error("text too long for index type");
    detail::sort_text<Index>(text.symbols(), out, detail::NoHook{}, stats);
}

template <std::signed_integral Index = std::int32_t>
SuffixArray<Index> sort_suffixes(const Text& text, SortStats* stats = nullptr) {
    SuffixArray<Index> sa;
    sa.entries.resize(text.size());
    sort_suffixes_into<Index>(text, sa.entries, stats);
    return sa;
}

extern template void sort_suffixes_into<std::int32_t>(const Text&, std::span<std::int32_t>, SortStats*);
extern template void sort_suffixes_into<std::int64_t>(const Text&, std::span<std::int64_t>, SortStats*);

// ---------------------------------------------------------------------------
// Step functions. Buffers hold 1-based positions with kEmptySlot for free
// slots; bucket cursors are 1-based slots as produced by bucket_bounds().

/// LMS positions in increasing order. The sentinel position n is included
/// whenever n > 1.
std::vector<std::size_t> lms_positions(const TypeMap& types);

/// Writes `sorted_lms` (ascending suffix order) right to left at the tail
/// cursors of their buckets. `tails` must be in tail mode.
template <std::signed_integral Index>
void place_lms(std::span<Index> buf, std::span<const Index> sorted_lms, const Text& text,
               BucketArray<Index>& tails) {
    const auto t = text.symbols();
    for (std::size_t k = sorted_lms.size(); k-- > 0;) {
        const Index p = sorted_lms[k];
        detail::put(buf, tails, t[static_cast<std::size_t>(p - 1)], p);
    }
}

/// Left-to-right L-type induction. `heads` must be in head mode. The hook,
/// if given, is called as hook(slot, value) for every slot after it is read.
template <std::signed_integral Index, class Hook = detail::NoHook>
void induce_L(std::span<Index> buf, const Text& text, const TypeMap& types, BucketArray<Index>& heads,
              Hook&& hook = {}) {
    detail::induce_l_level0(buf, text.symbols(), heads, detail::MappedTypes{types}, true,
                            std::forward<Hook>(hook));
}

/// Right-to-left S-type induction. `tails` must be in tail mode. When buf
/// held all L-type suffixes in place, every slot read is final and the hook
/// sees the suffix array from slot n down to slot 1.
template <std::signed_integral Index, class Hook = detail::NoHook>
void induce_S(std::span<Index> buf, const Text& text, const TypeMap& types, BucketArray<Index>& tails,
              Hook&& hook = {}) {
    detail::induce_s_level0(buf, text.symbols(), tails, detail::MappedTypes{types}, true,
                            std::forward<Hook>(hook));
}

/// Names of consecutive LMS factors, in text order of their LMS positions.
template <std::signed_integral Index = std::int32_t>
struct ReducedString {
    std::vector<Index> names;  // dense ranks starting at 1
    std::size_t alphabet = 0;  // number of distinct factors
    bool all_unique = true;
};

/// Ranks the LMS factors in the order they appear in `buf`, which must list
/// every LMS position sorted by LMS substring (other entries are skipped).
template <std::signed_integral Index>
ReducedString<Index> name_lms_factors(std::span<const Index> buf, const Text& text, const TypeMap& types) {
    const auto t = text.symbols();
    const std::vector<std::size_t> lms = lms_positions(types);

    auto factor_end = [&](std::size_t pos) -> std::size_t {
        const auto it = std::upper_bound(lms.begin(), lms.end(), pos);
        return it == lms.end() ? pos : *it;
    };

    ReducedString<Index> out;
    out.names.assign(lms.size(), Index{0});
    std::size_t prev = 0;
    Index name = 0;
    for (const Index v : buf) {
        if (v == kEmptySlot) continue;
        const auto pos = static_cast<std::size_t>(v);
        if (!types.is_lms(pos)) continue;
        bool same = prev != 0;
        if (same) {
            const std::size_t len = factor_end(pos) - pos;
            const std::size_t prev_len = factor_end(prev) - prev;
            same = len == prev_len && pos != text.size() && prev != text.size() &&
                   std::equal(t.begin() + static_cast<std::ptrdiff_t>(pos - 1),
                              t.begin() + static_cast<std::ptrdiff_t>(pos + len),
                              t.begin() + static_cast<std::ptrdiff_t>(prev - 1));
        }
        if (!same) ++name;
        else out.all_unique = false;
        const auto slot = std::lower_bound(lms.begin(), lms.end(), pos) - lms.begin();
        out.names[static_cast<std::size_t>(slot)] = name;
        prev = pos;
    }
    out.alphabet = static_cast<std::size_t>(name);
    return out;
}

}  // namespace lyndon
