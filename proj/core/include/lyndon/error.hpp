// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lyndon {

enum class ErrorCode {
    empty_input,
    sentinel_in_input,
    malformed_permutation,
    io_error,
    bad_spec,
    flag_conflict,
    check_failed,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace lyndon
