// Copyright (c) 2026 the qeec authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace qeec {

// Malformed or inconsistent user input: schema violations, bad indices,
// unreadable files.  Maps to CLI exit code 3.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

// Numerical contract violations: residual imaginary parts, non-convergence,
// singular systems.  Maps to CLI exit code 4.
struct NumericError : std::runtime_error {
    explicit NumericError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qeec
