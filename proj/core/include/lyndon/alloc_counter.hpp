// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

// Heap accounting through replaced global operator new/delete. Available to
// programs that link lyndon::alloc_counter; figures cover every allocation
// made through operator new in the process.

#include <cstddef>

namespace lyndon::alloc {

std::size_t live_bytes() noexcept;
std::size_t peak_bytes() noexcept;
std::size_t allocation_count() noexcept;

/// Lowers the peak mark to the current live size.
void reset_peak() noexcept;

/// Measures the peak heap growth between construction and the call.
class Scope {
public:
    Scope() noexcept : base_(live_bytes()), count_(allocation_count()) { reset_peak(); }

    std::size_t peak_extra_bytes() const noexcept { return peak_bytes() - base_; }
    std::size_t allocations() const noexcept { return allocation_count() - count_; }

private:
    std::size_t base_;
    std::size_t count_;
};

}  // namespace lyndon::alloc
