// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "lyndon/error.hpp"

/// Core value types shared by the suffix sorter, the Lyndon array variants and
/// the reference oracles.
///
/// Every position and rank in the public contract is 1-based: position n is
/// the sentinel, and slot 1 of a suffix array holds the smallest suffix.
/// Storage is an ordinary 0-based std::vector, so `entries[i - 1]` holds the
/// value for position (or rank) i; the `operator()` accessors do that shift.
namespace lyndon {

using symbol_t = std::uint8_t;

inline constexpr symbol_t kSentinel = 0;

struct TextOptions {
    /// When false, an empty input raises ErrorCode::empty_input instead of
    /// producing the sentinel-only text.
    bool allow_empty = true;
};

/// Byte string with the sentinel appended. Immutable once built.
class Text {
public:
    static constexpr int kByteSigma = 256;

    Text() : symbols_{kSentinel} {}

    /// n, sentinel included.
    std::size_t size() const noexcept { return symbols_.size(); }

    /// Nominal alphabet size used for bucketing (byte alphabet plus sentinel).
    int sigma() const noexcept { return kByteSigma; }

    /// 1-based symbol access; `(size())` is the sentinel.
    symbol_t operator()(std::size_t pos) const noexcept { return symbols_[pos - 1]; }

    /// 0-based view over all n symbols, sentinel last.
    std::span<const symbol_t> symbols() const noexcept { return symbols_; }

    /// Number of distinct symbol values present, sentinel included.
    int effective_sigma() const noexcept;

private:
    friend Text load_text(std::span<const symbol_t> raw, TextOptions options);
    explicit Text(std::vector<symbol_t> symbols) : symbols_(std::move(symbols)) {}

    std::vector<symbol_t> symbols_;
};

/// Appends the sentinel. Throws Error(sentinel_in_input) when `raw` contains a
/// zero byte and Error(empty_input) for empty input when disallowed.
Text load_text(std::span<const symbol_t> raw, TextOptions options = {});
Text load_text(std::string_view raw, TextOptions options = {});

template <class Tag, std::signed_integral Index>
struct OneBasedArray {
    using index_type = Index;

    std::vector<Index> entries;

    std::size_t size() const noexcept { return entries.size(); }
    Index operator()(std::size_t i) const noexcept { return entries[i - 1]; }

    friend bool operator==(const OneBasedArray&, const OneBasedArray&) = default;
};

struct SuffixArrayTag;
struct InverseSuffixArrayTag;
struct LyndonArrayTag;

template <std::signed_integral Index = std::int32_t>
using SuffixArray = OneBasedArray<SuffixArrayTag, Index>;
template <std::signed_integral Index = std::int32_t>
using InverseSuffixArray = OneBasedArray<InverseSuffixArrayTag, Index>;
template <std::signed_integral Index = std::int32_t>
using LyndonArray = OneBasedArray<LyndonArrayTag, Index>;

enum class SuffixType : std::uint8_t { S, L };

/// S/L classification of every suffix.
class TypeMap {
public:
    explicit TypeMap(std::vector<SuffixType> kinds) : kinds_(std::move(kinds)) {}

    std::size_t size() const noexcept { return kinds_.size(); }
    SuffixType operator()(std::size_t pos) const noexcept { return kinds_[pos - 1]; }
    bool is_s(std::size_t pos) const noexcept { return kinds_[pos - 1] == SuffixType::S; }
    bool is_l(std::size_t pos) const noexcept { return kinds_[pos - 1] == SuffixType::L; }
    bool is_lms(std::size_t pos) const noexcept { return pos > 1 && is_s(pos) && is_l(pos - 1); }

    std::span<const SuffixType> kinds() const noexcept { return kinds_; }

private:
    std::vector<SuffixType> kinds_;
};

/// Right-to-left rule: T_n is S; T_i is S when T[i] < T[i+1], L when
/// T[i] > T[i+1], and inherits the type of T_{i+1} on a tie.
TypeMap classify(const Text& text);

enum class BucketMode { head, tail };

/// Per-symbol insertion cursors over a suffix array. Cursors are 1-based
/// slots: in head mode the first unwritten slot of each bucket, in tail mode
/// the last one. Symbols absent from the text get an empty bucket.
template <std::signed_integral Index = std::int32_t>
class BucketArray {
public:
    explicit BucketArray(int sigma = Text::kByteSigma) : cursors_(static_cast<std::size_t>(sigma)) {}

    /// Recomputes the cursors for `symbols` in place; no allocation.
    void reset(std::span<const symbol_t> symbols, BucketMode mode) {
        std::fill(cursors_.begin(), cursors_.end(), Index{0});
        for (symbol_t c : symbols) ++cursors_[c];
        Index sum = 0;
        for (auto& cursor : cursors_) {
            const Index count = cursor;
            sum += count;
            cursor = mode == BucketMode::tail ? sum : sum - count + 1;
        }
        mode_ = mode;
    }

    BucketMode mode() const noexcept { return mode_; }
    std::size_t size() const noexcept { return cursors_.size(); }

    Index operator[](symbol_t c) const noexcept { return cursors_[c]; }
    Index& operator[](symbol_t c) noexcept { return cursors_[c]; }

    /// Returns the slot to write for symbol c and advances the cursor.
    Index take(symbol_t c) noexcept { return mode_ == BucketMode::head ? cursors_[c]++ : cursors_[c]--; }

private:
    std::vector<Index> cursors_;
    BucketMode mode_ = BucketMode::head;
};

template <std::signed_integral Index = std::int32_t>
BucketArray<Index> bucket_bounds(const Text& text, BucketMode mode) {
    BucketArray<Index> buckets(text.sigma());
    buckets.reset(text.symbols(), mode);
    return buckets;
}

}  // namespace lyndon
