#pragma once

#include <stdexcept>
#include <string>

namespace fcc {

/// Broad failure classes. The CLI maps each one to its own exit code.
enum class ErrorKind {
  Domain,         // value outside the mathematical domain of an operation
  Shape,          // length / arity / parameter mismatch between operands
  ResourceLimit,  // enumeration would exceed the configured cap
  Hypothesis,     // a bound's or construction's precondition does not hold
  Integrity,      // internal consistency check failed
  Parse,          // malformed input text or JSON
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Domain: return "domain error";
    case ErrorKind::Shape: return "shape error";
    case ErrorKind::ResourceLimit: return "resource limit";
    case ErrorKind::Hypothesis: return "hypothesis violated";
    case ErrorKind::Integrity: return "integrity error";
    case ErrorKind::Parse: return "parse error";
  }
  return "error";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace fcc
