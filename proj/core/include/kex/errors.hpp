#pragma once

#include <stdexcept>
#include <string>

namespace kex {

// Exit codes used by the CLI: 0 success, 1 validation, 2 I/O, 3 internal.
enum class ExitCode : int {
    ok = 0,
    validation = 1,
    io = 2,
    internal = 3,
};

// Bad input data or configuration (malformed record, range violation, ...).
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

// Filesystem-level failure (missing file, unwritable output).
class IoError : public std::runtime_error {
public:
    explicit IoError(const std::string& msg) : std::runtime_error(msg) {}
};

// Broken internal invariant. Reaching this is a bug, not an input problem.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace kex
