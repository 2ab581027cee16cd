// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon_cli/report.hpp"

#include <array>
#include <cstdio>
#include <utility>

namespace lyndon::cli {
namespace {

std::string fixed(double v, int digits) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.*f", digits, v);
    return buf.data();
}

std::array<std::pair<std::string_view, std::string>, 9> fields(const RunReport& r) {
    return {{
        {"input_name", r.input_name},
        {"n", std::to_string(r.n)},
        {"sigma_effective", std::to_string(r.sigma_effective)},
        {"variant", r.variant},
        {"elapsed_s", fixed(r.elapsed_seconds, 6)},
        {"avelyn", fixed(r.avelyn, 4)},
        {"peak_extra_words", std::to_string(r.peak_extra_words)},
        {"nsv_max_stack_depth", r.nsv_max_stack_depth ? std::to_string(*r.nsv_max_stack_depth) : "-"},
        {"check", std::string(to_string(r.check_status))},
    }};
}

}  // namespace

std::string_view to_string(CheckStatus s) {
    switch (s) {
        case CheckStatus::pass: return "PASS";
        case CheckStatus::fail: return "FAIL";
        case CheckStatus::skipped: return "SKIPPED";
    }
    return "?";
}

std::string to_tsv(const RunReport& r) {
    std::string line;
    for (const auto& [key, value] : fields(r)) {
        if (!line.empty()) line += '\t';
        line += value;
    }
    return line;
}

std::string to_kv(const RunReport& r) {
    std::string line;
    for (const auto& [key, value] : fields(r)) {
        if (!line.empty()) line += ' ';
        line += key;
        line += '=';
        line += value;
    }
    return line;
}

}  // namespace lyndon::cli
