// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include <benchmark/benchmark.h>

#include <map>
#include <string>
#include <vector>

#include "lyndon/lyndon_array.hpp"
#include "lyndon/oracles.hpp"
#include "lyndon/sacak.hpp"
#include "lyndon_cli/generate.hpp"

namespace {

using namespace lyndon;

// Inputs are generated once per (kind, size).
const Text& input(const std::string& kind, std::int64_t size) {
    static std::map<std::string, Text> cache;
    const std::string spec = kind + ":" + std::to_string(size);
    auto it = cache.find(spec);
    if (it == cache.end()) it = cache.emplace(spec, load_text(cli::generate(cli::parse_gen_spec(spec)))).first;
    return it->second;
}

void set_counters(benchmark::State& state, const Text& t) {
    state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations()) * static_cast<std::int64_t>(t.size()));
    state.counters["ns_per_symbol"] = benchmark::Counter(
        static_cast<double>(t.size()), benchmark::Counter::kIsIterationInvariantRate | benchmark::Counter::kInvert);
}

void sort_only(benchmark::State& state, const std::string& kind) {
    const Text& t = input(kind, state.range(0));
    std::vector<std::int32_t> sa(t.size());
    for (auto _ : state) {
        sort_suffixes_into<std::int32_t>(t, sa);
        benchmark::DoNotOptimize(sa.data());
    }
    set_counters(state, t);
}

void with_lyndon(benchmark::State& state, const std::string& kind, Variant variant) {
    const Text& t = input(kind, state.range(0));
    std::vector<std::int32_t> sa(t.size());
    std::vector<std::int32_t> la(t.size());
    for (auto _ : state) {
        compute_into<std::int32_t>(t, sa, la, variant);
        benchmark::DoNotOptimize(la.data());
    }
    set_counters(state, t);
}

void nsv_over_isa(benchmark::State& state, const std::string& kind) {
    const Text& t = input(kind, state.range(0));
    std::vector<std::int32_t> sa(t.size());
    for (auto _ : state) {
        sort_suffixes_into<std::int32_t>(t, sa);
        const auto isa = oracle::isa_from_sa(std::span<const std::int32_t>(sa));
        auto la = oracle::la_from_nsv(std::span<const std::int32_t>(isa.entries));
        benchmark::DoNotOptimize(la.entries.data());
    }
    set_counters(state, t);
}

constexpr std::int64_t kSmall = 1 << 16;
constexpr std::int64_t kLarge = 1 << 22;

BENCHMARK_CAPTURE(sort_only, rand4, std::string("rand:4"))->RangeMultiplier(4)->Range(kSmall, kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(sort_only, fib, std::string("fib"))->RangeMultiplier(4)->Range(kSmall, kLarge)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(with_lyndon, naive_rand16, std::string("rand:16"), Variant::naive)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(with_lyndon, nextprev_rand16, std::string("rand:16"), Variant::nextprev)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(with_lyndon, singleaux_rand16, std::string("rand:16"), Variant::singleaux)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(with_lyndon, inplace_rand16, std::string("rand:16"), Variant::inplace)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(nsv_over_isa, rand16, std::string("rand:16"))->Arg(kLarge)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(with_lyndon, naive_bbba, std::string("bbba"), Variant::naive)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(with_lyndon, inplace_bbba, std::string("bbba"), Variant::inplace)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(nsv_over_isa, bbba, std::string("bbba"))->Arg(kLarge)->Unit(benchmark::kMillisecond);

BENCHMARK_CAPTURE(with_lyndon, naive_fib, std::string("fib"), Variant::naive)->Arg(kLarge)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(with_lyndon, inplace_fib, std::string("fib"), Variant::inplace)->Arg(kLarge)->Unit(benchmark::kMillisecond);

// Large average Lyndon length: the naive scan turns quadratic.
BENCHMARK_CAPTURE(with_lyndon, naive_aaab, std::string("aaab"), Variant::naive)->RangeMultiplier(2)->Range(1 << 12, 1 << 15)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(with_lyndon, nextprev_aaab, std::string("aaab"), Variant::nextprev)->RangeMultiplier(2)->Range(1 << 12, 1 << 15)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
