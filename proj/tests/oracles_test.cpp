// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <numeric>
#include <string>
#include <vector>

#include "lyndon/error.hpp"
#include "lyndon/oracles.hpp"
#include "support.hpp"

namespace lyndon::oracle {
namespace {

using Buf = std::vector<std::int32_t>;
using Wide = std::vector<std::int64_t>;

bool lyndon(std::string_view s) {
    return is_lyndon(std::span<const symbol_t>(reinterpret_cast<const symbol_t*>(s.data()), s.size()));
}

TEST(IsLyndon, Examples) {
    EXPECT_TRUE(lyndon("aabanb"));
    EXPECT_FALSE(lyndon("abanba"));
    EXPECT_FALSE(lyndon("aa"));
    EXPECT_TRUE(lyndon("a"));
    EXPECT_TRUE(lyndon("ab"));
    EXPECT_FALSE(lyndon("ba"));
    EXPECT_FALSE(lyndon("abab"));
    EXPECT_FALSE(lyndon(""));
}

TEST(LaBruteforce, Examples) {
    EXPECT_EQ(la_bruteforce(load_text("banana")).entries, (Buf{1, 2, 1, 2, 1, 1, 1}));
    EXPECT_EQ(la_bruteforce(load_text("banaananaanana"))(5), 2);
    EXPECT_EQ(la_bruteforce(load_text("")).entries, (Buf{1}));
}

TEST(SaNaive, Examples) {
    EXPECT_EQ(sa_naive(load_text("banana")).entries, (Buf{7, 6, 4, 2, 1, 5, 3}));
    EXPECT_EQ(sa_naive(load_text("ab")).entries, (Buf{3, 1, 2}));
    EXPECT_EQ(sa_naive(load_text("")).entries, (Buf{1}));
}

TEST(IsaFromSa, Examples) {
    EXPECT_EQ(isa_from_sa(std::span<const std::int32_t>(Buf{7, 6, 4, 2, 1, 5, 3})).entries,
              (Buf{5, 4, 7, 3, 6, 2, 1}));
    Buf identity(9);
    std::iota(identity.begin(), identity.end(), 1);
    EXPECT_EQ(isa_from_sa(std::span<const std::int32_t>(identity)).entries, identity);
}

TEST(IsaFromSa, RejectsNonPermutations) {
    for (const Buf& bad : {Buf{2, 2, 1}, Buf{0, 1, 2}, Buf{1, 2, 4}}) {
        try {
            isa_from_sa(std::span<const std::int32_t>(bad));
            FAIL() << "expected an error";
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::malformed_permutation);
        }
    }
}

TEST(Nsv, Examples) {
    EXPECT_EQ(nsv(Wide{5, 4, 7, 3, 6, 2, 1}).nsv, (Wide{2, 4, 4, 6, 6, 7, 8}));
    EXPECT_EQ(nsv(Wide{1, 2, 3}).nsv, (Wide{4, 4, 4}));

    const std::size_t n = 50;
    Wide decreasing(n);
    std::iota(decreasing.rbegin(), decreasing.rend(), 1);
    const NsvResult r = nsv(decreasing);
    Wide expected(n);
    std::iota(expected.begin(), expected.end(), 2);
    EXPECT_EQ(r.nsv, expected);
    EXPECT_EQ(r.max_stack_depth, n);
}

TEST(Nsv, MatchesDefinitionPointwise) {
    std::mt19937_64 rng(51);
    for (int round = 0; round < 300; ++round) {
        const std::size_t n = 1 + rng() % 60;
        Wide values(n);
        for (auto& v : values) v = static_cast<std::int64_t>(rng() % 10);
        const NsvResult r = nsv(values);
        EXPECT_LE(r.max_stack_depth, n);
        for (std::size_t i = 0; i < n; ++i) {
            const auto next = static_cast<std::size_t>(r.nsv[i]);  // 1-based
            ASSERT_GT(next, i + 1);
            if (next <= n) {
                ASSERT_LT(values[next - 1], values[i]);
            }
            for (std::size_t k = i + 1; k + 1 < next; ++k) ASSERT_GE(values[k], values[i]);
        }
    }
}

TEST(LaFromNsv, Examples) {
    EXPECT_EQ(la_from_nsv(std::span<const std::int32_t>(Buf{5, 4, 7, 3, 6, 2, 1})).entries,
              (Buf{1, 2, 1, 2, 1, 1, 1}));
    const Text t = load_text("banaananaanana");
    const auto isa = isa_from_sa(std::span<const std::int32_t>(sa_naive(t).entries));
    EXPECT_EQ(la_from_nsv(std::span<const std::int32_t>(isa.entries))(5), 2);
    EXPECT_EQ(la_from_nsv(std::span<const std::int32_t>(Buf{1})).entries, (Buf{1}));
}

TEST(LaFromNsv, StackGrowsLinearlyOnBbba) {
    const std::size_t n = 1000;
    const Text t = load_text(std::string(n - 2, 'b') + 'a');
    const auto isa = isa_from_sa(std::span<const std::int32_t>(sa_naive(t).entries));
    std::size_t depth = 0;
    la_from_nsv(std::span<const std::int32_t>(isa.entries), &depth);
    EXPECT_EQ(depth, n);
}

TEST(Oracles, TwoLaPathsAgree) {
    test::for_each_string("abc", 8, [](std::string_view s) {
        const Text t = load_text(s);
        const auto isa = isa_from_sa(std::span<const std::int32_t>(sa_naive(t).entries));
        ASSERT_EQ(la_bruteforce(t), la_from_nsv(std::span<const std::int32_t>(isa.entries))) << s;
    });
}

}  // namespace
}  // namespace lyndon::oracle
