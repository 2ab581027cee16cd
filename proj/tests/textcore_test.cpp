// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <vector>

#include "lyndon/error.hpp"
#include "lyndon/oracles.hpp"
#include "lyndon/text.hpp"
#include "support.hpp"

namespace lyndon {
namespace {

using K = SuffixType;

TEST(LoadText, AppendsSentinel) {
    const Text t = load_text("banana");
    ASSERT_EQ(t.size(), 7u);
    EXPECT_EQ(t(1), 'b');
    EXPECT_EQ(t(6), 'a');
    EXPECT_EQ(t(7), kSentinel);
    EXPECT_EQ(t.sigma(), 256);
    EXPECT_EQ(t.effective_sigma(), 4);
}

TEST(LoadText, EmptyInputIsSentinelOnly) {
    const Text t = load_text("");
    ASSERT_EQ(t.size(), 1u);
    EXPECT_EQ(t(1), kSentinel);
}

TEST(LoadText, EmptyInputRejectedWhenDisallowed) {
    try {
        load_text("", TextOptions{.allow_empty = false});
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::empty_input);
    }
}

TEST(LoadText, RejectsZeroByte) {
    const std::array<symbol_t, 2> raw{0x00, 0x61};
    try {
        load_text(std::span<const symbol_t>(raw));
        FAIL() << "expected an error";
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::sentinel_in_input);
        EXPECT_EQ(to_string(e.code()), "SENTINEL_IN_INPUT");
    }
}

TEST(LoadText, KeepsHighBytes) {
    const std::array<symbol_t, 3> raw{0xff, 0x01, 0x80};
    const Text t = load_text(std::span<const symbol_t>(raw));
    EXPECT_EQ(t(1), 0xff);
    EXPECT_EQ(t(2), 0x01);
    EXPECT_EQ(t(3), 0x80);
}

TEST(Classify, Banana) {
    const TypeMap types = classify(load_text("banana"));
    const std::vector<K> expected{K::L, K::S, K::L, K::S, K::L, K::L, K::S};
    EXPECT_TRUE(std::equal(expected.begin(), expected.end(), types.kinds().begin(), types.kinds().end()));
    std::vector<std::size_t> lms;
    for (std::size_t i = 1; i <= types.size(); ++i) {
        if (types.is_lms(i)) lms.push_back(i);
    }
    EXPECT_EQ(lms, (std::vector<std::size_t>{2, 4, 7}));
}

TEST(Classify, SentinelOnly) {
    const TypeMap types = classify(load_text(""));
    ASSERT_EQ(types.size(), 1u);
    EXPECT_TRUE(types.is_s(1));
    EXPECT_FALSE(types.is_lms(1));
}

TEST(Classify, BbbaShape) {
    const std::size_t n = 12;
    const TypeMap types = classify(load_text(std::string(n - 2, 'b') + 'a'));
    for (std::size_t i = 1; i < n; ++i) EXPECT_TRUE(types.is_l(i)) << i;
    EXPECT_TRUE(types.is_s(n));
}

TEST(Classify, MatchesDirectSuffixComparison) {
    // Every string over {a,b,c} up to length 12.
    std::size_t checked = 0;
    test::for_each_string("abc", 12, [&](std::string_view s) {
        const Text t = load_text(s);
        const TypeMap types = classify(t);
        const auto sym = t.symbols();
        ASSERT_TRUE(types.is_s(t.size()));
        for (std::size_t i = 0; i + 1 < sym.size(); ++i) {
            const bool smaller =
                std::lexicographical_compare(sym.begin() + i, sym.end(), sym.begin() + i + 1, sym.end());
            ASSERT_EQ(types.is_s(i + 1), smaller) << s << " at " << i + 1;
        }
        ++checked;
    });
    EXPECT_EQ(checked, 797160u);
}

TEST(Classify, IsRepeatable) {
    const Text t = load_text("mississippi");
    const TypeMap a = classify(t);
    const TypeMap b = classify(t);
    EXPECT_TRUE(std::ranges::equal(a.kinds(), b.kinds()));
}

TEST(BucketBounds, Banana) {
    const Text t = load_text("banana");
    const auto heads = bucket_bounds(t, BucketMode::head);
    const auto tails = bucket_bounds(t, BucketMode::tail);
    EXPECT_EQ(heads.size(), 256u);
    EXPECT_EQ(heads[0], 1);
    EXPECT_EQ(heads['a'], 2);
    EXPECT_EQ(heads['b'], 5);
    EXPECT_EQ(heads['n'], 6);
    EXPECT_EQ(tails[0], 1);
    EXPECT_EQ(tails['a'], 4);
    EXPECT_EQ(tails['b'], 5);
    EXPECT_EQ(tails['n'], 7);
}

TEST(BucketBounds, SentinelOnly) {
    const Text t = load_text("");
    EXPECT_EQ(bucket_bounds(t, BucketMode::head)[0], 1);
    EXPECT_EQ(bucket_bounds(t, BucketMode::tail)[0], 1);
}

TEST(BucketBounds, SingleLetterRun) {
    const Text t = load_text("aaaaa");
    EXPECT_EQ(bucket_bounds(t, BucketMode::head)['a'], 2);
    EXPECT_EQ(bucket_bounds(t, BucketMode::tail)['a'], 6);
}

TEST(BucketBounds, TakeMovesCursor) {
    const Text t = load_text("banana");
    auto heads = bucket_bounds(t, BucketMode::head);
    EXPECT_EQ(heads.take('a'), 2);
    EXPECT_EQ(heads.take('a'), 3);
    auto tails = bucket_bounds(t, BucketMode::tail);
    EXPECT_EQ(tails.take('n'), 7);
    EXPECT_EQ(tails.take('n'), 6);
}

TEST(BucketBounds, LTypePrecedesSTypeWithinBuckets) {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const Text t = load_text(test::random_text(rng, 3, 1 + round % 60));
        const TypeMap types = classify(t);
        const auto sa = oracle::sa_naive(t);
        for (std::size_t i = 1; i < sa.size(); ++i) {
            const auto a = static_cast<std::size_t>(sa(i));
            const auto b = static_cast<std::size_t>(sa(i + 1));
            if (t(a) == t(b)) {
                EXPECT_FALSE(types.is_s(a) && types.is_l(b));
            }
        }
    }
}

}  // namespace
}  // namespace lyndon
