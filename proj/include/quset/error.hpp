#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace quset {

// Invalid arguments or state for an operation: grid mismatch, index out of
// range, degenerate (zero-mass) sets, bad weights. Maps to CLI exit code 2.
class DomainError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

// Malformed input file. Carries the byte offset where parsing stopped.
// Maps to CLI exit code 3.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& what, std::size_t byte_offset)
        : std::runtime_error(what + " (at byte " + std::to_string(byte_offset) + ")"),
          byte_offset_(byte_offset) {}

    std::size_t byte_offset() const { return byte_offset_; }

  private:
    std::size_t byte_offset_ = 0;
};

// A cross-check between two computation routes failed. Indicates a bug in the
// library, not bad input. Maps to CLI exit code 4.
class InternalError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace quset
