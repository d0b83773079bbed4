#pragma once

#include <stdexcept>
#include <string>

namespace ldst {

// Malformed input text (graph or tree files).
class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// A caller-visible precondition does not hold: bad parameters, input not
// 2-edge-connected, or an instance too large for the brute-force oracle.
class PreconditionError : public std::runtime_error {
 public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

// The builder's queue ran dry before the tree spanned all vertices. This is
// how a violated 2-edge-connectivity precondition surfaces when the check
// was skipped.
class QueueExhaustedError : public PreconditionError {
 public:
  explicit QueueExhaustedError(const std::string& what) : PreconditionError(what) {}
};

// An invariant the implementation itself guarantees failed to hold.
class InternalError : public std::runtime_error {
 public:
  explicit InternalError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ldst
