// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon_cli/app.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <fstream>
#include <iterator>
#include <limits>
#include <vector>

#include "lyndon/alloc_counter.hpp"
#include "lyndon/error.hpp"
#include "lyndon/lyndon_array.hpp"
#include "lyndon/oracles.hpp"
#include "lyndon/sacak.hpp"
#include "lyndon_cli/generate.hpp"
#include "lyndon_cli/serialize.hpp"

namespace lyndon::cli {
namespace {

constexpr std::string_view kProgram = "lyndon-induce";

struct Emit {
    bool sa = false;
    bool la = false;
    bool binary = false;
    std::ostream* os = nullptr;
};

template <class Index>
struct Computed {
    std::vector<Index> sa;
    std::vector<Index> la;
    std::optional<std::size_t> nsv_depth;
};

template <class Index>
std::size_t run_once(const Text& text, Algorithm algo, Computed<Index>& c) {
    const std::size_t n = text.size();
    c.sa.assign(n, Index{0});
    c.la.assign(n, Index{0});
    const alloc::Scope scope;
    if (algo == Algorithm::nsv_isa) {
        sort_suffixes_into<Index>(text, c.sa);
        const auto isa = oracle::isa_from_sa(std::span<const Index>(c.sa));
        std::size_t depth = 0;
        const auto la = oracle::la_from_nsv(std::span<const Index>(isa.entries), &depth);
        std::copy(la.entries.begin(), la.entries.end(), c.la.begin());
        c.nsv_depth = depth;
    } else {
        compute_into<Index>(text, c.sa, c.la, static_cast<Variant>(algo));
    }
    return scope.peak_extra_bytes();
}

template <class Index>
void write_arrays(const Computed<Index>& c, const Emit& emit) {
    std::ostream& os = *emit.os;
    const std::span<const Index> sa(c.sa);
    const std::span<const Index> la(c.la);
    if (emit.binary) {
        if (emit.sa) write_binary(os, ArrayKind::sa, sa);
        if (emit.la) write_binary(os, ArrayKind::la, la);
    } else if (emit.sa && emit.la) {
        write_text_pairs(os, sa, la);
    } else {
        write_text(os, emit.sa ? sa : la);
    }
    os.flush();
    if (!os) throw Error(ErrorCode::io_error, "failed writing output");
}

template <class Index>
RunResult execute(const Text& text, std::string_view input_name, Algorithm algo, const MeasureOptions& options,
                  const Emit* emit) {
    RunResult result;
    RunReport& r = result.report;
    r.input_name = std::string(input_name);
    r.n = text.size();
    r.sigma_effective = text.effective_sigma();
    r.variant = std::string(to_string(algo));
    r.elapsed_seconds = std::numeric_limits<double>::infinity();

    Computed<Index> c;
    for (int rep = 0; rep < std::max(1, options.reps); ++rep) {
        const auto start = std::chrono::steady_clock::now();
        const std::size_t peak = run_once(text, algo, c);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        r.elapsed_seconds = std::min(r.elapsed_seconds, elapsed.count());
        r.peak_extra_words = (peak + sizeof(Index) - 1) / sizeof(Index);
    }
    r.avelyn = avelyn(std::span<const Index>(c.la));
    r.nsv_max_stack_depth = c.nsv_depth;

    if (options.check) {
        std::optional<std::size_t> depth;
        result.check_detail =
            verify_arrays<Index>(text, std::span<const Index>(c.sa), std::span<const Index>(c.la), &depth);
        r.check_status = result.check_detail.empty() ? CheckStatus::pass : CheckStatus::fail;
        if (!r.nsv_max_stack_depth) r.nsv_max_stack_depth = depth;
    }
    if (emit != nullptr) write_arrays(c, *emit);
    return result;
}

RunResult dispatch(const Text& text, std::string_view name, Algorithm algo, const MeasureOptions& options,
                   const Emit* emit) {
    if (index_fits<std::int32_t>(text.size() + 1)) return execute<std::int32_t>(text, name, algo, options, emit);
    return execute<std::int64_t>(text, name, algo, options, emit);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::io_error, "cannot open '" + path + "'");
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw Error(ErrorCode::io_error, "failed reading '" + path + "'");
    return data;
}

/// Maps the distinct bytes of `raw` onto 1..k, keeping their order.
void remap_alphabet(std::string& raw) {
    std::array<bool, 256> seen{};
    for (const char c : raw) seen[static_cast<unsigned char>(c)] = true;
    std::array<unsigned char, 256> rank{};
    unsigned char next = 1;
    for (std::size_t c = 0; c < seen.size(); ++c) {
        if (seen[c]) rank[c] = next++;
    }
    for (char& c : raw) c = static_cast<char>(rank[static_cast<unsigned char>(c)]);
}

int exit_code(ErrorCode code) {
    switch (code) {
        case ErrorCode::io_error: return 2;
        case ErrorCode::check_failed:
        case ErrorCode::malformed_permutation: return 3;
        default: return 1;
    }
}

struct Input {
    std::string name;
    std::string raw;
};

}  // namespace

template <class Index>
std::string verify_arrays(const Text& text, std::span<const Index> sa, std::span<const Index> la,
                          std::optional<std::size_t>* nsv_depth) {
    const std::size_t n = text.size();
    if (sa.size() != n || la.size() != n) return "array length differs from text length";
    InverseSuffixArray<Index> isa;
    try {
        isa = oracle::isa_from_sa(sa);
    } catch (const Error& e) {
        return std::string("SA is not a permutation: ") + e.what();
    }
    for (std::size_t i = 1; i < n; ++i) {
        const auto a = static_cast<std::size_t>(sa[i - 1]);
        const auto b = static_cast<std::size_t>(sa[i]);
        const bool ordered = text(a) < text(b) || (text(a) == text(b) && isa(a + 1) < isa(b + 1));
        if (!ordered) return "SA out of order at slot " + std::to_string(i + 1);
    }

    std::size_t d = 0;
    const auto expected = oracle::la_from_nsv(std::span<const Index>(isa.entries), &d);
    if (nsv_depth != nullptr) *nsv_depth = d;
    for (std::size_t i = 0; i < n; ++i) {
        if (la[i] != expected.entries[i]) {
            return "LA mismatch at position " + std::to_string(i + 1) + ": got " + std::to_string(la[i]) +
                   ", expected " + std::to_string(expected.entries[i]);
        }
    }

    if (n <= kNaiveSaCheckLimit) {
        const auto naive = oracle::sa_naive(text);
        if (!std::equal(naive.entries.begin(), naive.entries.end(), sa.begin())) return "SA differs from naive sort";
    }
    if (n <= kBruteLaCheckLimit) {
        const auto brute = oracle::la_bruteforce(text);
        if (!std::equal(brute.entries.begin(), brute.entries.end(), la.begin())) {
            return "LA differs from the definition";
        }
    }
    return {};
}

template std::string verify_arrays<std::int32_t>(const Text&, std::span<const std::int32_t>,
                                                std::span<const std::int32_t>, std::optional<std::size_t>*);
template std::string verify_arrays<std::int64_t>(const Text&, std::span<const std::int64_t>,
                                                std::span<const std::int64_t>, std::optional<std::size_t>*);

std::string_view to_string(Algorithm a) {
    if (a == Algorithm::nsv_isa) return "nsv-isa";
    return lyndon::to_string(static_cast<Variant>(a));
}

std::optional<Algorithm> parse_algorithm(std::string_view name) {
    if (name == "nsv-isa") return Algorithm::nsv_isa;
    if (const auto v = parse_variant(name)) return static_cast<Algorithm>(*v);
    return std::nullopt;
}

RunResult measure(const Text& text, std::string_view input_name, Algorithm algo, const MeasureOptions& options) {
    return dispatch(text, input_name, algo, options, nullptr);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Suffix array and Lyndon array construction by induced sorting.", std::string(kProgram)};

    std::string text_arg;
    std::string file_arg;
    std::string gen_arg;
    std::string variant_name = "inplace";
    std::string emit_name;
    std::string format_name = "text";
    std::string out_path;
    bool check = false;
    bool bench = false;
    bool remap = false;
    bool allow_empty = false;
    bool kv = false;
    int doublings = 0;
    int reps = 1;

    auto* text_opt = app.add_option("--text", text_arg, "Input given literally");
    auto* file_opt = app.add_option("--file", file_arg, "Input file, read whole");
    auto* gen_opt = app.add_option("--gen", gen_arg,
                                   "Generated input: bbba:SIZE, aaab:SIZE, fib:SIZE, rand:SIGMA:SIZE[:SEED]");
    text_opt->excludes(file_opt)->excludes(gen_opt);
    file_opt->excludes(gen_opt);

    app.add_option("--variant", variant_name, "naive, nextprev, singleaux, inplace, nsv-isa, or all")
        ->check(CLI::IsMember({"naive", "nextprev", "singleaux", "inplace", "nsv-isa", "all"}))
        ->capture_default_str();
    auto* emit_opt =
        app.add_option("--emit", emit_name, "Arrays to write: sa, la or both")->check(CLI::IsMember({"sa", "la", "both"}));
    app.add_option("--format", format_name, "Array format: text or binary")
        ->check(CLI::IsMember({"text", "binary"}))
        ->capture_default_str();
    app.add_option("--out", out_path, "Write arrays to this file instead of stdout")->needs(emit_opt);
    app.add_flag("--check", check, "Verify the result against the oracles");
    auto* bench_opt = app.add_flag("--bench", bench, "Benchmark mode: report only, no arrays");
    app.add_option("--double", doublings, "Bench a doubling series of K further sizes (needs --gen)")
        ->needs(bench_opt)
        ->check(CLI::Range(0, 30));
    app.add_option("--reps", reps, "Repetitions per run; the fastest is reported")
        ->needs(bench_opt)
        ->check(CLI::Range(1, 1000));
    app.add_flag("--remap", remap, "Compact the input alphabet to 1..k (admits byte 0)");
    app.add_flag("--allow-empty", allow_empty, "Accept empty input");
    app.add_flag("--kv", kv, "Print reports as key=value pairs");
    emit_opt->excludes(bench_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::Success&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        const bool conflict = dynamic_cast<const CLI::ExcludesError*>(&e) != nullptr ||
                              dynamic_cast<const CLI::RequiresError*>(&e) != nullptr;
        err << kProgram << ": " << (conflict ? "FLAG_CONFLICT: " : "") << e.what() << '\n';
        return 1;
    }

    try {
        const int given = static_cast<int>(!text_opt->empty()) + static_cast<int>(!file_opt->empty()) +
                          static_cast<int>(!gen_opt->empty());
        if (given == 0) throw Error(ErrorCode::flag_conflict, "one of --text, --file or --gen is required");
        if (doublings > 0 && gen_opt->empty()) throw Error(ErrorCode::flag_conflict, "--double needs --gen");

        std::vector<Algorithm> algorithms;
        if (variant_name == "all") {
            if (!emit_name.empty()) throw Error(ErrorCode::flag_conflict, "--emit needs a single --variant");
            for (const Variant v : kAllVariants) algorithms.push_back(static_cast<Algorithm>(v));
        } else {
            algorithms.push_back(*parse_algorithm(variant_name));
        }

        std::vector<Input> inputs;
        if (!text_opt->empty()) {
            inputs.push_back({"text", text_arg});
        } else if (!file_opt->empty()) {
            std::string raw = read_file(file_arg);
            inputs.push_back({file_arg, std::move(raw)});
        } else {
            const GenSpec spec = parse_gen_spec(gen_arg);
            for (int k = 0; k <= doublings; ++k) {
                const GenSpec sized = spec.with_size(spec.size << k);
                std::string raw = generate(sized);
                inputs.push_back({sized.name(), std::move(raw)});
            }
        }

        std::ofstream file_out;
        Emit emit;
        if (!emit_name.empty()) {
            emit.sa = emit_name != "la";
            emit.la = emit_name != "sa";
            emit.binary = format_name == "binary";
            if (!out_path.empty()) {
                file_out.open(out_path, std::ios::binary | std::ios::trunc);
                if (!file_out) throw Error(ErrorCode::io_error, "cannot open '" + out_path + "' for writing");
                emit.os = &file_out;
            } else {
                emit.os = &out;
            }
        }
        std::ostream& report_os = emit.os == &out ? err : out;

        const MeasureOptions options{check, reps};
        bool failed = false;
        for (Input& input : inputs) {
            if (remap) remap_alphabet(input.raw);
            const Text text = load_text(input.raw, TextOptions{allow_empty});
            input.raw.clear();
            input.raw.shrink_to_fit();
            for (const Algorithm algo : algorithms) {
                const RunResult result = dispatch(text, input.name, algo, options, emit.os ? &emit : nullptr);
                report_os << (kv ? to_kv(result.report) : to_tsv(result.report)) << '\n';
                if (result.report.check_status == CheckStatus::fail) {
                    err << kProgram << ": CHECK_FAILED: " << input.name << " (" << to_string(algo)
                        << "): " << result.check_detail << '\n';
                    failed = true;
                }
            }
        }
        report_os.flush();
        return failed ? 3 : 0;
    } catch (const Error& e) {
        err << kProgram << ": " << lyndon::to_string(e.code()) << ": " << e.what() << '\n';
        return exit_code(e.code());
    } catch (const std::exception& e) {
        err << kProgram << ": " << e.what() << '\n';
        return 1;
    }
}

}  // namespace lyndon::cli
