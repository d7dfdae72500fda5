//
// Copyright (c) 2026 The rangesem authors
//
// This file is part of rangesem. Distributed under the MIT license
// (see the LICENSE file or https://opensource.org/licenses/MIT).
//
#include <iostream>
#include <string>
#include <vector>

#include "rangesem/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rangesem::cli::run_cli(std::move(args), std::cout, std::cerr, std::cin);
}
