// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "lyndon/error.hpp"

namespace lyndon::oracle {

bool is_lyndon(std::span<const symbol_t> factor) {
    const std::size_t k = factor.size();
    if (k == 0) return false;
    for (std::size_t r = 1; r < k; ++r) {
        // Compare factor against its rotation starting at r.
        int cmp = 0;
        for (std::size_t i = 0; i < k && cmp == 0; ++i) {
            const symbol_t a = factor[i];
            const symbol_t b = factor[(r + i) % k];
            cmp = a < b ? -1 : (a > b ? 1 : 0);
        }
        if (cmp >= 0) return false;
    }
    return true;
}

LyndonArray<> la_bruteforce(const Text& text) {
    const auto t = text.symbols();
    const std::size_t n = t.size();
    LyndonArray<> la;
    la.entries.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t best = 1;
        for (std::size_t len = 2; i + len <= n; ++len) {
            if (is_lyndon(t.subspan(i, len))) best = len;
        }
        la.entries[i] = static_cast<std::int32_t>(best);
    }
    return la;
}

SuffixArray<> sa_naive(const Text& text) {
    const auto t = text.symbols();
    SuffixArray<> sa;
    sa.entries.resize(t.size());
    std::iota(sa.entries.begin(), sa.entries.end(), 1);
    std::sort(sa.entries.begin(), sa.entries.end(), [&](std::int32_t a, std::int32_t b) {
        return std::lexicographical_compare(t.begin() + a - 1, t.end(), t.begin() + b - 1, t.end());
    });
    return sa;
}

namespace {

template <class Index>
InverseSuffixArray<Index> invert(std::span<const Index> sa) {
    const std::size_t n = sa.size();
    InverseSuffixArray<Index> isa;
    isa.entries.assign(n, Index{0});
    for (std::size_t i = 0; i < n; ++i) {
        const Index p = sa[i];
        if (p < 1 || static_cast<std::size_t>(p) > n || isa.entries[static_cast<std::size_t>(p - 1)] != 0) {
            throw Error(ErrorCode::malformed_permutation,
                        "entry " + std::to_string(i + 1) + " = " + std::to_string(p) + " breaks the permutation");
        }
        isa.entries[static_cast<std::size_t>(p - 1)] = static_cast<Index>(i + 1);
    }
    return isa;
}

template <class Index>
LyndonArray<Index> la_via_nsv(std::span<const Index> isa, std::size_t* max_stack_depth) {
    const std::vector<std::int64_t> values(isa.begin(), isa.end());
    const NsvResult r = nsv(values);
    if (max_stack_depth != nullptr) *max_stack_depth = r.max_stack_depth;
    LyndonArray<Index> la;
    la.entries.resize(values.size());
    for (std::size_t i = 0; i < values.size(); ++i) {
        la.entries[i] = static_cast<Index>(r.nsv[i] - static_cast<std::int64_t>(i + 1));
    }
    return la;
}

}  // namespace

InverseSuffixArray<> isa_from_sa(std::span<const std::int32_t> sa) { return invert(sa); }
InverseSuffixArray<std::int64_t> isa_from_sa(std::span<const std::int64_t> sa) { return invert(sa); }

NsvResult nsv(std::span<const std::int64_t> values) {
    const std::size_t n = values.size();
    NsvResult r;
    r.nsv.resize(n);
    std::vector<std::size_t> stack;  // 0-based candidates, values increasing toward the top
    for (std::size_t i = n; i-- > 0;) {
        while (!stack.empty() && values[stack.back()] >= values[i]) stack.pop_back();
        r.nsv[i] = stack.empty() ? static_cast<std::int64_t>(n + 1) : static_cast<std::int64_t>(stack.back() + 1);
        stack.push_back(i);
        r.max_stack_depth = std::max(r.max_stack_depth, stack.size());
    }
    return r;
}

LyndonArray<> la_from_nsv(std::span<const std::int32_t> isa, std::size_t* max_stack_depth) {
    return la_via_nsv(isa, max_stack_depth);
}

LyndonArray<std::int64_t> la_from_nsv(std::span<const std::int64_t> isa, std::size_t* max_stack_depth) {
    return la_via_nsv(isa, max_stack_depth);
}

}  // namespace lyndon::oracle
