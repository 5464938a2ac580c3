#pragma once

#include <stdexcept>
#include <string>

namespace divkit {

// Base for all structured errors surfaced to callers (CLI exit code 1).
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Malformed textual input (query, formula, CSV, graph, tree dump).
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& what) : Error(what) {}
};

// A documented operation precondition does not hold for the given input.
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(what) {}
};

// A configured size cap would be exceeded; the operation is refused.
class CapExceededError : public Error {
 public:
  explicit CapExceededError(const std::string& what) : Error(what) {}
};

// Broken internal invariant: a bug, not a usage error (CLI exit code 2).
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace divkit
