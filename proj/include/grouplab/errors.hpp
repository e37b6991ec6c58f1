#pragma once
// Error types thrown at tool boundaries.  Internal invariant violations are
// asserts; these exceptions cover bad user input and I/O, and map to distinct
// process exit codes in the CLI (2 for ParseError, 3 for IOError).

#include <stdexcept>
#include <string>

namespace grouplab {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct IOError : std::runtime_error {
    explicit IOError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace grouplab
