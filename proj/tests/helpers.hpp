// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace testutil {

inline std::string fixtures_root() {
    if (const char* env = std::getenv("QEEC_FIXTURES")) return env;
    return "fixtures";
}

inline std::string slurp(const std::string& relative) {
    std::ifstream in(fixtures_root() + "/" + relative, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace testutil
