#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace totbond {

/// Caller passed an argument outside an operation's contract (bad vertex id, non-edge, bad sizes).
class InputError : public std::invalid_argument {
 public:
    using std::invalid_argument::invalid_argument;
};

/// The quantity is mathematically undefined on this input (e.g. gamma_t with an isolated vertex).
class DomainError : public std::domain_error {
 public:
    using std::domain_error::domain_error;
};

/// Malformed bytes in a graph stream.
class ParseError : public std::runtime_error {
 public:
    ParseError(const std::string& what, std::size_t offset)
        : std::runtime_error(what + " (at byte " + std::to_string(offset) + ")"), offset_(offset) {}

    std::size_t offset() const noexcept { return offset_; }

 private:
    std::size_t offset_;
};

/// Structurally inconsistent input (e.g. a planar_code rotation that is not symmetric).
class FormatError : public std::runtime_error {
 public:
    using std::runtime_error::runtime_error;
};

}  // namespace totbond
