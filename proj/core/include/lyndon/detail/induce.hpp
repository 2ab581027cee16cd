// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Induced suffix sorting with sigma + O(1) words of workspace.
//
// Level 0 works on the byte text and keeps 1-based positions in the work
// buffer, with 0 marking an empty slot. It is the only level that owns a
// bucket array (one cursor per byte value).
//
// Levels >= 1 work on a reduced string stored inside the work buffer itself.
// Each reduced symbol is renamed to a slot of its own bucket (the head for an
// L-type symbol, the tail for an S-type one), so a symbol value doubles as a
// bucket pointer. While a bucket fills up its first slot (head for L passes,
// tail for S passes) holds a negative item counter; the items sit one slot
// inward and are shifted into place once the bucket is complete. Positions
// at these levels are 0-based and kEmpty marks free slots.

#include <algorithm>
#include <array>
#include <cassert>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>

#include "lyndon/text.hpp"

namespace lyndon {

/// Shape of the recursion, filled by sort routines on request.
struct SortStats {
    static constexpr std::size_t kMaxLevels = 64;

    int levels = 0;
    /// lengths[k] is the string length sorted at recursion level k.
    std::array<std::uint64_t, kMaxLevels> lengths{};
};

namespace detail {

template <std::signed_integral Index>
inline constexpr Index kEmpty = std::numeric_limits<Index>::min();

struct NoHook {
    template <class Index>
    constexpr void operator()(std::size_t, Index) const noexcept {}
};

template <class Hook>
inline constexpr bool kIsNoHook = std::is_same_v<std::remove_cvref_t<Hook>, NoHook>;

/// Decides suffix types during the level-0 passes without a type array.
/// During an L pass the buffer only holds L-type and LMS suffixes, so a tie
/// T[p] == T[p+1] means p+1 is L-type. During an S pass an S-type p+1 sharing
/// p's bucket was written right of the current tail cursor.
struct OnTheFlyTypes {
    bool l_pred(std::size_t, symbol_t cp, symbol_t cv) const noexcept { return cp >= cv; }

    template <class Index>
    bool s_pred(std::size_t, symbol_t cp, symbol_t cv, std::size_t slot, Index tail) const noexcept {
        return cp < cv || (cp == cv && static_cast<std::size_t>(tail) < slot);
    }
};

/// Looks types up in a precomputed TypeMap; valid for any buffer state.
struct MappedTypes {
    const TypeMap& types;

    bool l_pred(std::size_t p, symbol_t, symbol_t) const noexcept { return types.is_l(p); }

    template <class Index>
    bool s_pred(std::size_t p, symbol_t, symbol_t, std::size_t, Index) const noexcept {
        return types.is_s(p);
    }
};

// ---------------------------------------------------------------------------
// Helpers shared by all levels. `Str` is a 0-based span of symbols whose last
// entry is the unique smallest symbol.

/// Calls fn(k) for every LMS index k < n-1, right to left.
template <class Str, class Fn>
void for_each_lms_rtl(const Str& s, Fn&& fn) {
    const auto n = static_cast<std::ptrdiff_t>(s.size());
    bool succ_s = false;  // s[n-2] is always L-type
    for (std::ptrdiff_t k = n - 2; k >= 1; --k) {
        const bool cur_s = s[k - 1] < s[k] || (s[k - 1] == s[k] && succ_s);
        if (!cur_s && succ_s) fn(static_cast<std::size_t>(k));
        succ_s = cur_s;
    }
}

/// Length of the LMS factor starting at LMS index x, both ends included.
template <class Str>
std::size_t lms_length(const Str& s, std::size_t x) {
    const std::size_t n = s.size();
    if (x == n - 1) return 1;
    std::size_t dist = 0;
    std::size_t i = 1;
    while (!(s[x + i] < s[x + i - 1])) ++i;
    while (x + i <= n - 1 && !(s[x + i] > s[x + i - 1])) {
        if (x + i == n - 1 || s[x + i] < s[x + i - 1]) dist = i;
        ++i;
    }
    return dist + 1;
}

template <class Str>
bool same_lms_factor(const Str& s, std::size_t a, std::size_t b, std::size_t len) {
    const std::size_t last = s.size() - 1;
    for (std::size_t d = 0; d < len; ++d) {
        if (a + d == last || b + d == last || s[a + d] != s[b + d]) return false;
    }
    return true;
}

/// Names the sorted LMS factors held in sa[0, n1) (values are index + base)
/// and writes the reduced string to sa[m - n1, m) with every S-type symbol
/// renamed to the tail of its bucket. Returns the number of distinct names.
template <class Index, class Str>
std::size_t name_lms_substrings(std::span<Index> sa, const Str& s, std::size_t m, std::size_t n1,
                                Index base) {
    constexpr Index empty = kEmpty<Index>;
    const std::size_t n = s.size();
    std::fill(sa.begin() + static_cast<std::ptrdiff_t>(n1), sa.begin() + static_cast<std::ptrdiff_t>(n),
              empty);

    std::size_t name = 0;
    std::size_t distinct = 0;
    std::size_t prev_pos = n - 1;
    std::size_t prev_len = 0;
    for (std::size_t i = 0; i < n1; ++i) {
        const auto pos = static_cast<std::size_t>(sa[i] - base);
        const std::size_t len = lms_length(s, pos);
        if (len != prev_len || !same_lms_factor(s, pos, prev_pos, len)) {
            name = i;
            ++distinct;
            sa[name] = 1;  // count of factors carrying this name
            prev_pos = pos;
            prev_len = len;
        } else {
            ++sa[name];
        }
        // LMS positions are at least two apart, so pos / 2 never collides.
        sa[n1 + pos / 2] = static_cast<Index>(name);
    }

    for (std::size_t i = n, j = m; i-- > n1;) {
        if (sa[i] != empty) sa[--j] = sa[i];
    }

    auto reduced = sa.subspan(m - n1, n1);
    bool succ_s = true;  // the sentinel factor
    for (std::size_t i = n1 - 1; i > 0; --i) {
        const Index ch = reduced[i];
        const Index prev = reduced[i - 1];
        const bool cur_s = prev < ch || (prev == ch && succ_s);
        if (cur_s) reduced[i - 1] += sa[static_cast<std::size_t>(prev)] - 1;
        succ_s = cur_s;
    }
    return distinct;
}

/// Maps SA1 in sa[0, n1) back to LMS indices (+ base) and clears sa[n1, n).
template <class Index, class Str>
void map_reduced_order(std::span<Index> sa, const Str& s, std::size_t m, std::size_t n1, Index base,
                       Index empty) {
    const std::size_t n = s.size();
    auto reduced = sa.subspan(m - n1, n1);
    std::size_t j = n1;
    reduced[--j] = static_cast<Index>(n - 1) + base;
    for_each_lms_rtl(s, [&](std::size_t k) { reduced[--j] = static_cast<Index>(k) + base; });
    assert(j == 0);
    for (std::size_t i = 0; i < n1; ++i) sa[i] = reduced[static_cast<std::size_t>(sa[i])];
    std::fill(sa.begin() + static_cast<std::ptrdiff_t>(n1), sa.begin() + static_cast<std::ptrdiff_t>(n),
              empty);
}

// ---------------------------------------------------------------------------
// Level 0: byte text, 1-based positions, 0 = empty.

/// Writes position p at the cursor of its bucket and advances the cursor.
template <class Index>
inline void put(std::span<Index> sa, BucketArray<Index>& buckets, symbol_t c, Index p) {
    sa[static_cast<std::size_t>(buckets.take(c) - 1)] = p;
}

/// Seeds the first round: LMS positions, in text order, at their bucket tails.
template <class Index>
void place_lms_substrings(std::span<Index> sa, std::span<const symbol_t> t, BucketArray<Index>& buckets) {
    buckets.reset(t, BucketMode::tail);
    std::fill(sa.begin(), sa.end(), Index{0});
    for_each_lms_rtl(t, [&](std::size_t k) { put(sa, buckets, t[k], static_cast<Index>(k + 1)); });
    sa[0] = static_cast<Index>(t.size());
}

/// Left-to-right pass: every L-type predecessor goes to its bucket head.
/// With `final_pass` false, entries that induced something are erased.
template <class Index, class Types, class Hook>
void induce_l_level0(std::span<Index> sa, std::span<const symbol_t> t, BucketArray<Index>& heads,
                     const Types& types, bool final_pass, Hook&& hook) {
    const std::size_t n = sa.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Index v = sa[i];
        if (v > 1) {
            const auto p = static_cast<std::size_t>(v - 1);
            const symbol_t c = t[p - 1];
            if (types.l_pred(p, c, t[p])) {
                put(sa, heads, c, static_cast<Index>(p));
                if (!final_pass && i > 0) sa[i] = 0;
            }
        }
        if constexpr (!kIsNoHook<Hook>) hook(i + 1, v);
    }
}

/// Right-to-left pass: every S-type predecessor goes to its bucket tail.
/// The hook sees each slot once, after every larger suffix has been settled.
template <class Index, class Types, class Hook>
void induce_s_level0(std::span<Index> sa, std::span<const symbol_t> t, BucketArray<Index>& tails,
                     const Types& types, bool final_pass, Hook&& hook) {
    for (std::size_t i = sa.size(); i-- > 0;) {
        const Index v = sa[i];
        if (v > 1) {
            const auto p = static_cast<std::size_t>(v - 1);
            const symbol_t c = t[p - 1];
            if (types.s_pred(p, c, t[p], i + 1, tails[c])) {
                put(sa, tails, c, static_cast<Index>(p));
                if (!final_pass) sa[i] = 0;
            }
        }
        if constexpr (!kIsNoHook<Hook>) hook(i + 1, v);
    }
}

/// Places the sorted LMS suffixes held in sa[0, n1) at their bucket tails.
template <class Index>
void place_sorted_lms(std::span<Index> sa, std::span<const symbol_t> t, BucketArray<Index>& buckets,
                      std::size_t n1) {
    buckets.reset(t, BucketMode::tail);
    for (std::size_t i = n1 - 1; i > 0; --i) {
        const Index p = sa[i];
        sa[i] = 0;
        put(sa, buckets, t[static_cast<std::size_t>(p - 1)], p);
    }
    sa[0] = static_cast<Index>(t.size());
}

// ---------------------------------------------------------------------------
// Levels >= 1: integer string inside the work buffer, 0-based, kEmpty = free.

template <class Index>
void shift_counted_buckets_left(std::span<Index> sa, Index n) {
    constexpr Index empty = kEmpty<Index>;
    for (Index i = 1; i < n; ++i) {
        const Index d = sa[i];
        if (d < 0 && d != empty) {
            Index h = 0;
            for (; h < -d; ++h) sa[i + h] = sa[i + h + 1];
            sa[i + h] = empty;
        }
    }
}

template <class Index>
void shift_counted_buckets_right(std::span<Index> sa, Index n) {
    constexpr Index empty = kEmpty<Index>;
    for (Index i = n - 1; i > 0; --i) {
        const Index d = sa[i];
        if (d < 0 && d != empty) {
            Index h = 0;
            for (; h < -d; ++h) sa[i - h] = sa[i - h - 1];
            sa[i - h] = empty;
        }
    }
}

/// Inserts j at the tail side of the bucket whose tail slot is c.
/// Returns true when items left of or at `scan` moved one slot right.
template <class Index>
bool insert_at_tail(std::span<Index> sa, Index c, Index j, Index scan) {
    constexpr Index empty = kEmpty<Index>;
    bool moved = false;
    Index d = sa[c];
    if (d >= 0) {
        // The right neighbour finished by borrowing slot c; hand it back.
        Index carry = d;
        Index h = c + 1;
        for (; sa[h] >= 0 || sa[h] == empty; ++h) std::swap(carry, sa[h]);
        sa[h] = carry;
        moved = h > scan;
        d = empty;
    }
    if (d == empty) {
        if (sa[c - 1] == empty) {
            sa[c] = -1;
            sa[c - 1] = j;
        } else {
            sa[c] = j;
        }
    } else {
        Index pos = c + d - 1;
        if (sa[pos] != empty) {
            // Bucket is full: drop the counter.
            for (Index h = 0; h < -d; ++h) sa[c - h] = sa[c - h - 1];
            ++pos;
            moved = moved || c > scan;
        } else {
            --sa[c];
        }
        sa[pos] = j;
    }
    return moved;
}

template <class Index>
void place_lms_substrings_reduced(std::span<Index> sa, std::span<const Index> s) {
    const auto n = static_cast<Index>(s.size());
    std::fill(sa.begin(), sa.begin() + n, kEmpty<Index>);
    for_each_lms_rtl(s, [&](std::size_t k) { insert_at_tail(sa, s[k], static_cast<Index>(k), n); });
    shift_counted_buckets_right(sa, n);
    sa[0] = n - 1;
}

template <class Index>
void induce_l_reduced(std::span<Index> sa, std::span<const Index> s, bool final_pass) {
    constexpr Index empty = kEmpty<Index>;
    const auto n = static_cast<Index>(s.size());
    Index step = 1;
    for (Index i = 0; i < n; i += step) {
        step = 1;
        const Index v = sa[i];
        if (v <= 0) continue;
        const Index j = v - 1;
        const Index c = s[j];
        const Index c1 = s[v];
        if (c < c1) continue;

        Index d = sa[c];
        if (d >= 0) {
            // The left neighbour finished by borrowing slot c; hand it back.
            Index carry = d;
            Index h = c - 1;
            for (; sa[h] >= 0 || sa[h] == empty; --h) std::swap(carry, sa[h]);
            sa[h] = carry;
            if (h < i) step = 0;
            d = empty;
        }
        if (d == empty) {
            if (c < n - 1 && sa[c + 1] == empty) {
                sa[c] = -1;
                sa[c + 1] = j;
            } else {
                sa[c] = j;
            }
        } else {
            Index pos = c - d + 1;
            if (pos > n - 1 || sa[pos] != empty) {
                for (Index h = 0; h < -d; ++h) sa[c + h] = sa[c + h + 1];
                --pos;
                if (c < i) step = 0;
            } else {
                --sa[c];
            }
            sa[pos] = j;
        }

        const bool v_is_l = v < n - 1 && (c1 > s[v + 1] || (c1 == s[v + 1] && c1 < i));
        if ((!final_pass || !v_is_l) && i > 0) sa[step == 0 ? i - 1 : i] = empty;
    }
    shift_counted_buckets_left(sa, n);
}

template <class Index>
void induce_s_reduced(std::span<Index> sa, std::span<const Index> s, bool final_pass) {
    const auto n = static_cast<Index>(s.size());
    Index step = 1;
    for (Index i = n - 1; i > 0; i -= step) {
        step = 1;
        const Index v = sa[i];
        if (v <= 0) continue;
        const Index j = v - 1;
        const Index c = s[j];
        const Index c1 = s[v];
        if (!(c < c1 || (c == c1 && c > i))) continue;

        if (insert_at_tail(sa, c, j, i)) step = 0;
        if (!final_pass) sa[step == 0 ? i + 1 : i] = kEmpty<Index>;
    }
    if (!final_pass) shift_counted_buckets_right(sa, n);
}

template <class Index>
void place_sorted_lms_reduced(std::span<Index> sa, std::span<const Index> s, std::size_t n1) {
    Index pos = 0;
    Index prev = -1;
    for (auto i = static_cast<Index>(n1) - 1; i > 0; --i) {
        const Index j = sa[i];
        sa[i] = kEmpty<Index>;
        const Index c = s[j];
        if (c != prev) {
            prev = c;
            pos = c;
        }
        sa[pos--] = j;
    }
}

inline void record_level(SortStats* stats, int level, std::size_t n) {
    if (stats == nullptr) return;
    stats->levels = std::max(stats->levels, level + 1);
    if (static_cast<std::size_t>(level) < SortStats::kMaxLevels) {
        stats->lengths[static_cast<std::size_t>(level)] = n;
    }
}

/// Sorts the suffixes of `s` (levels >= 1) into sa[0, |s|). `sa` may be
/// longer than s; the tail is scratch for the next level's reduced string.
template <class Index>
void sort_reduced(std::span<const Index> s, std::span<Index> sa, int level, SortStats* stats) {
    const std::size_t n = s.size();
    const std::size_t m = sa.size();
    record_level(stats, level, n);

    place_lms_substrings_reduced(sa, s);
    induce_l_reduced(sa, s, false);
    induce_s_reduced(sa, s, false);

    std::size_t n1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sa[i] > 0) sa[n1++] = sa[i];
    }

    const std::size_t distinct = name_lms_substrings(sa, s, m, n1, Index{0});
    auto reduced = sa.subspan(m - n1, n1);
    if (distinct < n1) {
        sort_reduced<Index>(reduced, sa.first(m - n1), level + 1, stats);
    } else {
        for (std::size_t i = 0; i < n1; ++i) sa[static_cast<std::size_t>(reduced[i])] = static_cast<Index>(i);
    }

    map_reduced_order(sa, s, m, n1, Index{0}, kEmpty<Index>);
    place_sorted_lms_reduced(sa, s, n1);
    induce_l_reduced(sa, s, true);
    induce_s_reduced(sa, s, true);
}

/// Full pipeline for a sentinel-terminated byte text. Writes the 1-based
/// suffix array to `sa` (|sa| == |t|). `hook(slot, pos)` fires once per slot,
/// n down to 1, as the final S pass reads each suffix in its final place.
/// Allocates one bucket array of 256 cursors and nothing else.
template <class Index, class Hook>
void sort_text(std::span<const symbol_t> t, std::span<Index> sa, Hook&& hook, SortStats* stats = nullptr) {
    const std::size_t n = t.size();
    assert(sa.size() == n && n >= 1 && t[n - 1] == kSentinel);
    record_level(stats, 0, n);
    if (n == 1) {
        sa[0] = 1;
        if constexpr (!kIsNoHook<Hook>) hook(std::size_t{1}, Index{1});
        return;
    }

    BucketArray<Index> buckets(Text::kByteSigma);
    const OnTheFlyTypes types;

    // Round 1: sort the LMS substrings.
    place_lms_substrings(sa, t, buckets);
    buckets.reset(t, BucketMode::head);
    induce_l_level0(sa, t, buckets, types, false, NoHook{});
    buckets.reset(t, BucketMode::tail);
    induce_s_level0(sa, t, buckets, types, false, NoHook{});

    std::size_t n1 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (sa[i] > 1) sa[n1++] = sa[i];
    }

    // Round 2: order the LMS suffixes, recursing while names collide.
    const std::size_t distinct = name_lms_substrings(sa, t, n, n1, Index{1});
    auto reduced = sa.subspan(n - n1, n1);
    if (distinct < n1) {
        sort_reduced<Index>(reduced, sa.first(n - n1), 1, stats);
    } else {
        for (std::size_t i = 0; i < n1; ++i) sa[static_cast<std::size_t>(reduced[i])] = static_cast<Index>(i);
    }
    map_reduced_order(sa, t, n, n1, Index{1}, Index{0});

    // Round 3: induce the full suffix array from the sorted LMS suffixes.
    place_sorted_lms(sa, t, buckets, n1);
    buckets.reset(t, BucketMode::head);
    induce_l_level0(sa, t, buckets, types, true, NoHook{});
    buckets.reset(t, BucketMode::tail);
    induce_s_level0(sa, t, buckets, types, true, std::forward<Hook>(hook));
}

}  // namespace detail
}  // namespace lyndon
