#pragma once

#include <stdexcept>
#include <string>

namespace qhom {

/// Malformed input: bad JSON, schema violation, unparsable scalar text.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A caller violated an operation's precondition (shape mismatch, wrong
/// field, unknown vertex, ...).
struct PreconditionError : std::invalid_argument {
  explicit PreconditionError(const std::string& what)
      : std::invalid_argument(what) {}
};

/// An internal consistency check failed.  Raised when two routes that must
/// agree (e.g. the three acyclicity criteria) disagree.
struct EngineError : std::logic_error {
  explicit EngineError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qhom
