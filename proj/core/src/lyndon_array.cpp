// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon/lyndon_array.hpp"

#include <algorithm>
#include <stdexcept>

#include "lyndon/sacak.hpp"

namespace lyndon {

std::string_view to_string(Variant v) {
    switch (v) {
        case Variant::naive: return "naive";
        case Variant::nextprev: return "nextprev";
        case Variant::singleaux: return "singleaux";
        case Variant::inplace: return "inplace";
    }
    return "?";
}

std::optional<Variant> parse_variant(std::string_view name) {
    for (const Variant v : kAllVariants) {
        if (to_string(v) == name) return v;
    }
    return std::nullopt;
}

template <std::signed_integral Index>
void compute_into(const Text& text, std::span<Index> sa, std::span<Index> la, Variant variant,
                  SortStats* stats) {
    const std::size_t n = text.size();
    if (sa.size() != n || la.size() != n) throw std::invalid_argument("buffer sizes must equal text size");
    if (!index_fits<Index>(n + 1)) throw std::length_error("text too long for index type");
    const auto t = text.symbols();

    switch (variant) {
        case Variant::naive: {
            std::fill(la.begin(), la.end(), Index{0});
            detail::sort_text<Index>(t, sa, NaiveHook<Index>{la}, stats);
            break;
        }
        case Variant::nextprev: {
            std::vector<Index> next(n);
            std::vector<Index> prev(n);
            fill_successors<Index>(next);
            for (std::size_t k = 0; k < n; ++k) prev[k] = static_cast<Index>(k);
            detail::sort_text<Index>(t, sa, NextPrevHook<Index>{la, next, prev}, stats);
            break;
        }
        case Variant::singleaux: {
            std::vector<Index> a(n);
            fill_successors<Index>(a);
            std::fill(la.begin(), la.end(), Index{0});
            detail::sort_text<Index>(t, sa, SingleAuxHook<Index>{la, a}, stats);
            break;
        }
        case Variant::inplace: {
            fill_successors(la);
            detail::sort_text<Index>(t, sa, InPlaceHook<Index>{la}, stats);
            finalize_inplace(la);
            break;
        }
    }
}

template void compute_into<std::int32_t>(const Text&, std::span<std::int32_t>, std::span<std::int32_t>, Variant,
                                         SortStats*);
template void compute_into<std::int64_t>(const Text&, std::span<std::int64_t>, std::span<std::int64_t>, Variant,
                                         SortStats*);

}  // namespace lyndon
