// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Lyndon array computed during the last pass of induced suffix sorting.
//
// The final right-to-left pass reads the suffix array from slot n down to 1,
// i.e. suffixes in decreasing order. When suffix j is read, every position
// already read holds a larger suffix, so LA[j] is the distance to the nearest
// position right of j that has not been read yet. The four variants differ
// only in how they find that position:
//
//   naive      scan right over resolved entries          O(n * avelyn), 0 words
//   nextprev   doubly linked list of unresolved slots    O(n), 2n words
//   singleaux  NEXT array, PREV parked in resolved slots O(n), n words
//   inplace    the same, inside the LA buffer            O(n), 0 words

#include <cassert>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lyndon/detail/induce.hpp"
#include "lyndon/text.hpp"

namespace lyndon {

enum class Variant { naive, nextprev, singleaux, inplace };

inline constexpr Variant kAllVariants[] = {Variant::naive, Variant::nextprev, Variant::singleaux,
                                           Variant::inplace};

std::string_view to_string(Variant v);
std::optional<Variant> parse_variant(std::string_view name);

// Hooks for the final S pass. Each is called as hook(slot, j) with the suffix
// j read at its final slot; positions j are 1-based, arrays 0-based.

/// LA doubles as the resolved marker: nonzero means already read.
template <class Index>
struct NaiveHook {
    std::span<Index> la;  // zero-filled

    void operator()(std::size_t, Index j) const noexcept {
        const auto n = static_cast<Index>(la.size());
        Index len = 1;
        while (j + len <= n && la[static_cast<std::size_t>(j + len - 1)] != 0) ++len;
        la[static_cast<std::size_t>(j - 1)] = len;
    }
};

template <class Index>
struct NextPrevHook {
    std::span<Index> la;
    std::span<Index> next;  // next[i-1] = i+1 initially
    std::span<Index> prev;  // prev[i-1] = i-1 initially

    void operator()(std::size_t, Index j) const noexcept {
        const auto n = static_cast<Index>(la.size());
        const auto k = static_cast<std::size_t>(j - 1);
        const Index nx = next[k];
        const Index pv = prev[k];
        la[k] = nx - j;
        if (pv > 0) next[static_cast<std::size_t>(pv - 1)] = nx;
        if (nx <= n) prev[static_cast<std::size_t>(nx - 1)] = pv;
    }
};

/// A holds NEXT for unread positions. The slot just left of an unread
/// position p, once read, holds PREV[p]; the zero/nonzero state of LA tells
/// which meaning applies.
template <class Index>
struct SingleAuxHook {
    std::span<Index> la;  // zero-filled
    std::span<Index> a;   // a[i-1] = i+1 initially

    void operator()(std::size_t, Index j) const noexcept {
        const auto n = static_cast<Index>(la.size());
        const auto k = static_cast<std::size_t>(j - 1);
        const Index nx = a[k];
        const Index pv = (j > 1 && la[k - 1] != 0) ? a[k - 1] : j - 1;
        la[k] = nx - j;
        if (pv > 0) a[static_cast<std::size_t>(pv - 1)] = nx;
        if (nx <= n) a[static_cast<std::size_t>(nx - 2)] = pv;
    }
};

/// SingleAux without LA: the fused buffer is the output. A read position
/// keeps its NEXT value (LA = NEXT - j) unless it is the rightmost read slot
/// before an unread one, where it stores that neighbour's PREV (< j). Such a
/// position has LA = 1, so the overwrite loses nothing, and PREV < j - 1
/// versus NEXT == j tells read from unread at j - 1.
template <class Index>
struct InPlaceHook {
    std::span<Index> a;  // a[i-1] = i+1 initially

    void operator()(std::size_t, Index j) const noexcept {
        const auto n = static_cast<Index>(a.size());
        const auto k = static_cast<std::size_t>(j - 1);
        const Index nx = a[k];
        assert(nx > j && "unread position must hold a NEXT value");
        const Index pv = (j > 1 && a[k - 1] < j - 1) ? a[k - 1] : j - 1;
        if (pv > 0) {
            assert(a[static_cast<std::size_t>(pv - 1)] > pv);
            a[static_cast<std::size_t>(pv - 1)] = nx;
        }
        if (nx <= n) a[static_cast<std::size_t>(nx - 2)] = pv;
    }
};

/// Rewrites a fused NEXT/PREV buffer into LA: 1 where a[j] < j, else a[j] - j.
template <class Index>
void finalize_inplace(std::span<Index> a) noexcept {
    for (std::size_t k = 0; k < a.size(); ++k) {
        const auto j = static_cast<Index>(k + 1);
        a[k] = a[k] < j ? Index{1} : a[k] - j;
    }
}

template <class Index>
void fill_successors(std::span<Index> a) noexcept {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] = static_cast<Index>(k + 2);
}

/// Computes SA and LA of `text` into caller buffers of size |text|. Only the
/// variant's own workspace is allocated (see the table above) plus the
/// 256-cursor bucket array.
template <std::signed_integral Index>
void compute_into(const Text& text, std::span<Index> sa, std::span<Index> la, Variant variant,
                  SortStats* stats = nullptr);

extern template void compute_into<std::int32_t>(const Text&, std::span<std::int32_t>, std::span<std::int32_t>,
                                                Variant, SortStats*);
extern template void compute_into<std::int64_t>(const Text&, std::span<std::int64_t>, std::span<std::int64_t>,
                                                Variant, SortStats*);

template <std::signed_integral Index = std::int32_t>
struct SuffixAndLyndon {
    SuffixArray<Index> sa;
    LyndonArray<Index> la;
};

template <std::signed_integral Index = std::int32_t>
SuffixAndLyndon<Index> compute(const Text& text, Variant variant, SortStats* stats = nullptr) {
    SuffixAndLyndon<Index> out;
    out.sa.entries.resize(text.size());
    out.la.entries.resize(text.size());
    compute_into<Index>(text, out.sa.entries, out.la.entries, variant, stats);
    return out;
}

template <std::signed_integral Index = std::int32_t>
SuffixAndLyndon<Index> la_naive(const Text& text) {
    return compute<Index>(text, Variant::naive);
}

template <std::signed_integral Index = std::int32_t>
SuffixAndLyndon<Index> la_nextprev(const Text& text) {
    return compute<Index>(text, Variant::nextprev);
}

template <std::signed_integral Index = std::int32_t>
SuffixAndLyndon<Index> la_singleaux(const Text& text) {
    return compute<Index>(text, Variant::singleaux);
}

template <std::signed_integral Index = std::int32_t>
SuffixAndLyndon<Index> la_inplace(const Text& text) {
    return compute<Index>(text, Variant::inplace);
}

/// Mean of LA; the naive variant's running time is O(n * avelyn).
template <class Index>
double avelyn(std::span<const Index> la) noexcept {
    if (la.empty()) return 0.0;
    long double sum = 0;
    for (const Index v : la) sum += static_cast<long double>(v);
    return static_cast<double>(sum / static_cast<long double>(la.size()));
}

}  // namespace lyndon
