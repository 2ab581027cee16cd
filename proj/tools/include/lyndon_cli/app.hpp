// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "lyndon/text.hpp"
#include "lyndon_cli/report.hpp"

namespace lyndon::cli {

/// The four induced variants plus the stack-based NSV-over-ISA baseline.
enum class Algorithm { naive, nextprev, singleaux, inplace, nsv_isa };

std::string_view to_string(Algorithm a);
std::optional<Algorithm> parse_algorithm(std::string_view name);

/// Inputs up to these sizes are also checked against the definitional oracles.
inline constexpr std::size_t kNaiveSaCheckLimit = 4096;
inline constexpr std::size_t kBruteLaCheckLimit = 64;

struct MeasureOptions {
    bool check = false;
    int reps = 1;  // elapsed time is the minimum over reps
};

struct RunResult {
    RunReport report;
    std::string check_detail;  // first mismatch when the check failed
};

/// Checks SA by comparing adjacent suffixes through the ISA and LA against
/// NSV over the ISA; inputs within the limits above are also compared with
/// the naive oracles. Returns an empty string on success, else the first
/// problem found.
template <class Index>
std::string verify_arrays(const Text& text, std::span<const Index> sa, std::span<const Index> la,
                          std::optional<std::size_t>* nsv_depth = nullptr);

extern template std::string verify_arrays<std::int32_t>(const Text&, std::span<const std::int32_t>,
                                                       std::span<const std::int32_t>, std::optional<std::size_t>*);
extern template std::string verify_arrays<std::int64_t>(const Text&, std::span<const std::int64_t>,
                                                       std::span<const std::int64_t>, std::optional<std::size_t>*);

/// Runs one algorithm on `text` and fills a report. peak_extra_words counts
/// heap words allocated beyond the text and the SA/LA output buffers.
RunResult measure(const Text& text, std::string_view input_name, Algorithm algo, const MeasureOptions& options);

/// Command line entry point; returns the process exit code
/// (0 ok, 1 usage, 2 I/O, 3 check failed).
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace lyndon::cli
