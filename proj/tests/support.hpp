// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lyndon/text.hpp"

namespace lyndon::test {

/// Calls fn(s) for every nonempty string over `alphabet` of length <= max_len.
template <class Fn>
void for_each_string(std::string_view alphabet, std::size_t max_len, Fn&& fn) {
    std::string s;
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::size_t> digits(len, 0);
        s.assign(len, alphabet[0]);
        for (;;) {
            fn(std::string_view(s));
            std::size_t k = len;
            while (k > 0 && digits[k - 1] + 1 == alphabet.size()) {
                digits[k - 1] = 0;
                s[k - 1] = alphabet[0];
                --k;
            }
            if (k == 0) break;
            s[k - 1] = alphabet[++digits[k - 1]];
        }
    }
}

/// Uniform text over sigma symbols ('a'.. for sigma <= 26, else bytes 1..sigma).
inline std::string random_text(std::mt19937_64& rng, int sigma, std::size_t len) {
    std::uniform_int_distribution<int> pick(0, sigma - 1);
    const int base = sigma <= 26 ? 'a' : 1;
    std::string s(len, '\0');
    for (char& c : s) c = static_cast<char>(base + pick(rng));
    return s;
}

/// Texts that stress deep recursion and long equal runs.
inline std::vector<std::string> structured_texts(std::size_t n) {
    std::vector<std::string> out;
    out.push_back(std::string(n, 'a'));
    out.push_back(std::string(n - 1, 'b') + 'a');
    out.push_back(std::string(n - 1, 'a') + 'b');
    std::string older = "b";
    std::string fib = "a";
    while (fib.size() < n) {
        std::string next = fib + older;
        older = std::move(fib);
        fib = std::move(next);
    }
    fib.resize(n);
    out.push_back(fib);
    std::string periodic;
    while (periodic.size() < n) periodic += "abcab";
    periodic.resize(n);
    out.push_back(periodic);
    std::string thue(n, 'a');
    for (std::size_t i = 0; i < n; ++i) thue[i] = static_cast<char>('a' + (__builtin_popcountll(i) & 1));
    out.push_back(thue);
    std::string descending;
    for (std::size_t i = 0; i < n; ++i) descending.push_back(static_cast<char>(255 - i % 255));
    out.push_back(descending);
    return out;
}

template <class A>
std::vector<std::int64_t> widen(const A& array) {
    return std::vector<std::int64_t>(array.entries.begin(), array.entries.end());
}

}  // namespace lyndon::test
