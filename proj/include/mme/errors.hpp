#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mme {

// Prime pool too small to reach the requested modulus bound; callers retry
// with a larger sieve.
struct PoolExhaustedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A reconstructed evaluation fell outside the caller-declared magnitude
// bound 2^s. Detection is best-effort: a wrapped value can land back inside
// the bound.
struct BoundViolationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// No convergent satisfies the rational-reconstruction error bound; the
// caller's bit-size promise was violated.
struct ReconstructionFailedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Instance-file syntax or count error, tagged with the 1-based source
// position.
struct ParseError : std::runtime_error {
    ParseError(std::string msg, std::size_t line, std::size_t column)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + std::move(msg)),
          line(line),
          column(column) {}

    std::size_t line;
    std::size_t column;
};

}  // namespace mme
