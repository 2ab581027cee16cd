// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace lyndon::cli {

enum class CheckStatus { pass, fail, skipped };

std::string_view to_string(CheckStatus s);

struct RunReport {
    std::string input_name;
    std::size_t n = 0;  // including the sentinel
    int sigma_effective = 0;
    std::string variant;
    double elapsed_seconds = 0.0;
    double avelyn = 0.0;
    std::size_t peak_extra_words = 0;
    std::optional<std::size_t> nsv_max_stack_depth;
    CheckStatus check_status = CheckStatus::skipped;
};

inline constexpr std::string_view kReportColumns =
    "input_name\tn\tsigma_effective\tvariant\telapsed_s\tavelyn\tpeak_extra_words\tnsv_max_stack_depth\tcheck";

/// Tab-separated, columns as in kReportColumns; a missing depth prints "-".
std::string to_tsv(const RunReport& r);

/// Space-separated key=value pairs with the same keys.
std::string to_kv(const RunReport& r);

}  // namespace lyndon::cli
