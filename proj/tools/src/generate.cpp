// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include "lyndon_cli/generate.hpp"

#include <charconv>
#include <random>
#include <vector>

#include "lyndon/error.hpp"

namespace lyndon::cli {
namespace {

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const std::size_t at = s.find(sep, start);
        parts.push_back(s.substr(start, at - start));
        if (at == std::string_view::npos) return parts;
        start = at + 1;
    }
}

template <class T>
T parse_number(std::string_view field, std::string_view spec, std::string_view what) {
    T value{};
    const auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || end != field.data() + field.size()) {
        throw Error(ErrorCode::bad_spec, "bad " + std::string(what) + " in generator spec '" + std::string(spec) + "'");
    }
    return value;
}

}  // namespace

std::string GenSpec::name() const {
    switch (kind) {
        case GenKind::bbba: return "bbba:" + std::to_string(size);
        case GenKind::aaab: return "aaab:" + std::to_string(size);
        case GenKind::fib: return "fib:" + std::to_string(size);
        case GenKind::rand:
            return "rand:" + std::to_string(sigma) + ":" + std::to_string(size) + ":" + std::to_string(seed);
    }
    return "?";
}

GenSpec GenSpec::with_size(std::size_t n) const {
    GenSpec copy = *this;
    copy.size = n;
    return copy;
}

GenSpec parse_gen_spec(std::string_view spec) {
    const auto parts = split(spec, ':');
    GenSpec out;
    std::size_t next = 1;
    if (parts[0] == "bbba") {
        out.kind = GenKind::bbba;
    } else if (parts[0] == "aaab") {
        out.kind = GenKind::aaab;
    } else if (parts[0] == "fib") {
        out.kind = GenKind::fib;
    } else if (parts[0] == "rand") {
        out.kind = GenKind::rand;
        if (parts.size() < 3) throw Error(ErrorCode::bad_spec, "expected rand:SIGMA:SIZE[:SEED], got '" + std::string(spec) + "'");
        out.sigma = parse_number<int>(parts[1], spec, "sigma");
        if (out.sigma < 1 || out.sigma > 255) throw Error(ErrorCode::bad_spec, "sigma must be in 1..255");
        next = 2;
    } else {
        throw Error(ErrorCode::bad_spec, "unknown generator '" + std::string(parts[0]) + "' (bbba, aaab, fib, rand)");
    }

    if (parts.size() <= next || parts.size() > next + 2) {
        throw Error(ErrorCode::bad_spec, "expected KIND:SIZE[:SEED], got '" + std::string(spec) + "'");
    }
    out.size = parse_number<std::size_t>(parts[next], spec, "size");
    if (out.size < 1) throw Error(ErrorCode::bad_spec, "size must be at least 1");
    if (parts.size() == next + 2) out.seed = parse_number<std::uint64_t>(parts[next + 1], spec, "seed");
    return out;
}

std::string generate(const GenSpec& spec) {
    const std::size_t n = spec.size;
    switch (spec.kind) {
        case GenKind::bbba: return std::string(n - 1, 'b') + 'a';
        case GenKind::aaab: return std::string(n - 1, 'a') + 'b';
        case GenKind::fib: {
            // Every s_k with k >= 3 is a prefix of s_(k+1).
            std::string older = "b";
            std::string newer = "a";
            while (newer.size() < n || newer.size() < 2) {
                std::string next = newer + older;
                older = std::move(newer);
                newer = std::move(next);
            }
            newer.resize(n);
            return newer;
        }
        case GenKind::rand: {
            std::mt19937_64 rng(spec.seed);
            std::uniform_int_distribution<int> pick(0, spec.sigma - 1);
            const int base = spec.sigma <= 26 ? 'a' : 1;
            std::string out(n, '\0');
            for (char& c : out) c = static_cast<char>(base + pick(rng));
            return out;
        }
    }
    return {};
}

}  // namespace lyndon::cli
