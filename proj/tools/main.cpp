// Copyright 2026 The frey Authors
//
// Licensed under the Apache License, Version 2.0 (see
// LICENSE or https://www.apache.org/licenses/LICENSE-2.0).
// This file may not be copied, modified, or distributed
// except according to those terms.

#include <iostream>

#include "cli.hpp"

int main(int argc, char** argv) { return frey::cli::run(argc, argv, std::cout, std::cerr); }
