// Copyright 2026 The lyndon-induce Authors
// SPDX-License-Identifier: Apache-2.0

#include <iostream>

#include "lyndon_cli/app.hpp"

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    return lyndon::cli::run(argc, argv, std::cout, std::cerr);
}
