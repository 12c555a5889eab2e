#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace biproj {

// Invalid argument values (bad distribution parameters, mismatched sides, ...).
struct ParameterError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation applied to an input outside its mathematical domain
// (empty sequence, zero wedges, ...).
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Malformed input file; carries the 1-based line number.
struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

// Work or memory guard tripped (pair-count caps).
struct SizeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Power-law fit cannot be performed on the given samples.
struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// API misuse, e.g. querying multiplicities that were never computed.
struct UsageError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace biproj
