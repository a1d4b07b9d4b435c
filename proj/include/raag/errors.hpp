#pragma once

#include <stdexcept>
#include <string>

namespace raag {

/// Thrown when an operation's precondition on its arguments fails
/// (unknown vertex, non-bijective map, bad parameters, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Malformed text input in one of the line-oriented file formats.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The brute-force word oracle refuses inputs above its length bound.
class OracleBoundExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace raag
