#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sslab {

enum class ErrorKind {
  parse,             // malformed literal or document text
  bound,             // ordinal exponent above the build-wide bound
  underflow,         // left subtraction with a > b
  backend_mismatch,  // operands from different spaces
  not_closed,        // argument required to be Zariski-closed
  invalid_set,       // set violates an operation precondition
  invalid_ideal,     // ideal descriptor violates its invariants
  invalid_pair,      // stable pair fails well-formedness
  invalid_map,       // not an order/flag-preserving homeomorphism
  unsupported_form,  // e.g. join of Meet nodes
  size_guard,        // input above a hard enumeration guard
  fixpoint_cap,      // fixpoint iteration exceeded the atom cap
  oracle_not_stable, // reconstructed pair fails validation
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string message)
      : std::runtime_error(std::move(message)), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& message) {
  throw Error(kind, message);
}

}  // namespace sslab
