// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon/sacak.hpp"

namespace lyndon {

template void sort_suffixes_into<std::int32_t>(const Text&, std::span<std::int32_t>, SortStats*);
template void sort_suffixes_into<std::int64_t>(const Text&, std::span<std::int64_t>, SortStats*);

std::vector<std::size_t> lms_positions(const TypeMap& types) {
    std::vector<std::size_t> out;
    for (std::size_t pos = 2; pos <= types.size(); ++pos) {
        if (types.is_lms(pos)) out.push_back(pos);
    }
    return out;
}

}  // namespace lyndon
