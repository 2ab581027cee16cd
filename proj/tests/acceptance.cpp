// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance gate. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <string>
#include <vector>

#include "lyndon/lyndon_array.hpp"
#include "lyndon/oracles.hpp"
#include "lyndon/sacak.hpp"
#include "lyndon_cli/app.hpp"
#include "lyndon_cli/generate.hpp"
#include "support.hpp"

namespace {

using namespace lyndon;
using Buf = std::vector<std::int32_t>;

// Pinned thresholds.
constexpr std::size_t kExhaustiveBinaryLength = 12;
constexpr std::size_t kExhaustiveTernaryLength = 8;
constexpr int kRandomTexts = 1000;
constexpr std::size_t kRandomMaxLength = 2000;
constexpr std::size_t kStackN = 1000000;
constexpr std::size_t kStackSlack = 2;
constexpr std::size_t kInplaceWordLimit = 256 + 64;
constexpr std::size_t kLadderBytes = 1 << 20;
constexpr std::size_t kLadderSlack = 1024;
constexpr int kLinearFirstLog = 16;
constexpr int kLinearLastLog = 22;
constexpr double kLinearBand = 2.5;
constexpr double kLinearSeriesSeconds = 120.0;
constexpr int kNaiveFirstLog = 12;
constexpr int kNaiveLastLog = 15;
constexpr double kNaiveMinGrowth = 2.0;

int failures = 0;

void verdict(bool ok, const char* id, const std::string& what) {
    std::printf("%s  %s  %s\n", ok ? "PASS" : "FAIL", id, what.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
}

std::string fmt(const char* format, auto... args) {
    char buf[512];
    std::snprintf(buf, sizeof buf, format, args...);
    return buf;
}

// Unit-length bookkeeping over every LA computed by C1-C3.
std::size_t unit_texts = 0;
std::size_t unit_violations = 0;

void check_unit_lengths(const Text& t, const Buf& la) {
    const TypeMap types = classify(t);
    ++unit_texts;
    for (std::size_t i = 1; i <= t.size(); ++i) {
        if ((la[i - 1] == 1) != (i == t.size() || types.is_l(i))) {
            ++unit_violations;
            return;
        }
    }
}

void criterion_exhaustive() {
    std::size_t texts = 0;
    std::size_t mismatches = 0;
    auto run = [&](std::string_view s) {
        const Text t = load_text(s);
        const auto sa = oracle::sa_naive(t);
        const auto la = oracle::la_bruteforce(t);
        ++texts;
        bool ok = sort_suffixes(t) == sa;
        for (const Variant v : kAllVariants) {
            const auto r = compute(t, v);
            ok = ok && r.la == la && r.sa == sa;
            check_unit_lengths(t, r.la.entries);
        }
        if (!ok) ++mismatches;
    };
    test::for_each_string("ab", kExhaustiveBinaryLength, run);
    test::for_each_string("abc", kExhaustiveTernaryLength, run);
    verdict(mismatches == 0, "C1",
            fmt("exhaustive oracle equivalence ({a,b}^<=%zu, {a,b,c}^<=%zu): %zu texts, %zu mismatches",
                kExhaustiveBinaryLength, kExhaustiveTernaryLength, texts, mismatches));
}

void criterion_random() {
    std::mt19937_64 rng(20260101);
    const int sigmas[] = {2, 4, 16, 128};
    std::size_t mismatches = 0;
    int texts = 0;
    for (; texts < kRandomTexts; ++texts) {
        const int sigma = sigmas[texts % 4];
        const std::size_t len = std::uniform_int_distribution<std::size_t>(1, kRandomMaxLength)(rng);
        const Text t = load_text(test::random_text(rng, sigma, len));
        const auto sa = sort_suffixes(t);
        const auto isa = oracle::isa_from_sa(std::span<const std::int32_t>(sa.entries));
        const auto expected = oracle::la_from_nsv(std::span<const std::int32_t>(isa.entries));
        bool ok = true;
        for (const Variant v : kAllVariants) {
            const auto r = compute(t, v);
            ok = ok && r.la == expected && r.sa == sa;
            check_unit_lengths(t, r.la.entries);
        }
        if (!ok) ++mismatches;
    }
    verdict(mismatches == 0, "C2",
            fmt("randomized equivalence (sigma 2/4/16/128, len <= %zu): %d texts, %zu mismatches", kRandomMaxLength,
                texts, mismatches));
}

void criterion_anchor() {
    const Text t = load_text("banaananaanana");
    bool ok = true;
    std::int32_t la5 = 0;
    std::int32_t sa9 = 0;
    for (const Variant v : kAllVariants) {
        const auto r = compute(t, v);
        la5 = r.la(5);
        sa9 = r.sa(9);
        ok = ok && la5 == 2 && sa9 == 5;
        check_unit_lengths(t, r.la.entries);
    }
    verdict(ok, "C3", fmt("running example banaananaanana: LA[5] = %d (want 2), SA[9] = %d (want 5)", la5, sa9));
}

void criterion_stack_contrast() {
    const std::string raw = cli::generate(cli::parse_gen_spec("bbba:" + std::to_string(kStackN - 1)));
    const Text t = load_text(raw);
    const auto baseline = cli::measure(t, "bbba", cli::Algorithm::nsv_isa, {});
    const auto inplace = cli::measure(t, "bbba", cli::Algorithm::inplace, {});
    const std::size_t depth = baseline.report.nsv_max_stack_depth.value_or(0);
    const std::size_t words = inplace.report.peak_extra_words;
    const bool ok = depth + kStackSlack >= kStackN && depth <= kStackN && words <= kInplaceWordLimit;
    verdict(ok, "C5",
            fmt("bbba n=%zu: nsv max_stack_depth = %zu (want >= n-%zu), inplace peak_extra_words = %zu (want <= %zu)",
                t.size(), depth, kStackSlack, words, kInplaceWordLimit));
}

void criterion_workspace_ladder() {
    const Text t = load_text(cli::generate(cli::parse_gen_spec("rand:16:" + std::to_string(kLadderBytes) + ":1")));
    const std::size_t n = t.size();
    struct Rung {
        cli::Algorithm algo;
        std::size_t target;
    };
    const Rung rungs[] = {
        {cli::Algorithm::nextprev, 2 * n + 256},
        {cli::Algorithm::singleaux, n + 256},
        {cli::Algorithm::inplace, 256},
    };
    bool ok = true;
    std::string detail;
    for (const Rung& rung : rungs) {
        const auto r = cli::measure(t, "ladder", rung.algo, {.check = true});
        const std::size_t got = r.report.peak_extra_words;
        const std::size_t off = got > rung.target ? got - rung.target : rung.target - got;
        ok = ok && off <= kLadderSlack && r.report.check_status == cli::CheckStatus::pass;
        detail += fmt(" %s=%zu (target %zu)", std::string(cli::to_string(rung.algo)).c_str(), got, rung.target);
    }
    verdict(ok, "C6", fmt("workspace ladder, rand sigma=16, n=%zu, slack %zu words:", n, kLadderSlack) + detail);
}

double seconds_per_symbol(const cli::RunResult& r) { return r.report.elapsed_seconds / static_cast<double>(r.report.n); }

int reps_for(std::size_t n) { return n <= (1u << 18) ? 9 : 5; }

void criterion_linearity() {
    const auto start = std::chrono::steady_clock::now();
    const cli::GenSpec base = cli::parse_gen_spec("rand:4:1:1");
    double first = 0;
    double last = 0;
    std::string series;
    for (int k = kLinearFirstLog; k <= kLinearLastLog; ++k) {
        const Text t = load_text(cli::generate(base.with_size(std::size_t{1} << k)));
        const auto r = cli::measure(t, "rand4", cli::Algorithm::inplace, {.reps = reps_for(t.size())});
        const double ns = 1e9 * seconds_per_symbol(r);
        if (k == kLinearFirstLog) first = ns;
        last = ns;
        series += fmt(" 2^%d:%.1f", k, ns);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const double ratio = last / first;
    verdict(ratio <= kLinearBand && total < kLinearSeriesSeconds, "C7",
            fmt("inplace doubling on rand:4, time/n ratio largest/smallest = %.2f (want <= %.1f), series %.1f s; ns/symbol:",
                ratio, kLinearBand, total) +
                series);
}

void criterion_naive_degradation() {
    const cli::GenSpec base = cli::parse_gen_spec("aaab:1");
    double naive_first = 0;
    double naive_last = 0;
    double linked_first = 0;
    double linked_last = 0;
    double avelyn_last = 0;
    for (int k = kNaiveFirstLog; k <= kNaiveLastLog; ++k) {
        const Text t = load_text(cli::generate(base.with_size(std::size_t{1} << k)));
        const auto naive = cli::measure(t, "aaab", cli::Algorithm::naive, {.reps = 3});
        const auto linked = cli::measure(t, "aaab", cli::Algorithm::nextprev, {.reps = 9});
        if (k == kNaiveFirstLog) {
            naive_first = seconds_per_symbol(naive);
            linked_first = seconds_per_symbol(linked);
        }
        naive_last = seconds_per_symbol(naive);
        linked_last = seconds_per_symbol(linked);
        avelyn_last = naive.report.avelyn;
    }
    const double naive_growth = naive_last / naive_first;
    const double linked_growth = linked_last / linked_first;
    const bool ok = naive_growth >= kNaiveMinGrowth && linked_growth <= kLinearBand && naive_growth > linked_growth;
    verdict(ok, "C8",
            fmt("a^k b doubling 2^%d..2^%d (avelyn %.0f at the largest): time/n growth naive = %.2f (want >= %.1f), "
                "nextprev = %.2f (want <= %.1f)",
                kNaiveFirstLog, kNaiveLastLog, avelyn_last, naive_growth, kNaiveMinGrowth, linked_growth,
                kLinearBand));
}

}  // namespace

int main() {
    criterion_exhaustive();
    criterion_random();
    criterion_anchor();
    verdict(unit_violations == 0, "C4",
            fmt("LA[i] = 1 iff i = n or L-type, over the C1-C3 inputs: %zu variant outputs, %zu violations",
                unit_texts, unit_violations));
    criterion_stack_contrast();
    criterion_workspace_ladder();
    criterion_linearity();
    criterion_naive_degradation();
    std::printf("%s: %d criteria failed\n", failures == 0 ? "ACCEPTED" : "REJECTED", failures);
    return failures == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}
