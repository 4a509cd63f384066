#pragma once

#include <stdexcept>
#include <string>

namespace mclp {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Input is not syntactically valid (e.g. malformed JSON).
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input is well-formed but does not match the expected schema
/// (missing key, wrong type, non-finite number).
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// Input matches the schema but violates a model invariant
/// (negative weight, budget out of range, ...).
class InvariantError : public Error {
 public:
  using Error::Error;
};

/// A solver refused to run because the problem exceeds a documented cap
/// (brute-force combination count, demand-mask width).
class CapExceededError : public Error {
 public:
  using Error::Error;
};

/// A configuration object violates its own invariants.
class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace mclp
