/**
 * @file error.hpp
 * @brief Error taxonomy for the kernel.
 *
 * Every failure the library can signal is a `dynbase::error` carrying a short
 * machine-readable kind string (stable, used by the CLI to pick exit codes and
 * by tests to assert on failure modes) plus a human-readable message.
 *
 * Kind strings in use:
 *   FieldMismatch     - operands live over different coefficient fields
 *   BadCharacteristic - requested prime field modulus is not prime
 *   DivideByZero      - exact division by a zero scalar
 *   DimMismatch       - tensor/vector dimensions disagree
 *   Singular          - matrix inversion of a singular matrix
 *   BadGroupTable     - Cayley table fails group axioms or identity != 0
 *   InvalidHopf       - structure constants fail the Hopf axioms
 *   NotClosed         - a set expected to close under an operation does not
 *   NotCharacter      - functional fails multiplicativity/unitality
 *   NotInvariant      - character fails module-invariance
 *   NoExtension       - data does not define a compatible base/extension
 *   ZeroSum           - direct-sum decomposition has a zero summand
 *   NoIntegral        - no nonzero (co)integral of the required kind
 *   NotProjective     - dual-basis system unsolvable
 *   NotGenerator      - trace ideal is proper
 *   SectionFailure    - no basis-aligned section of a quotient exists
 *   SolveFailure      - an internal linear system is inconsistent
 *   NotInvertible     - an element expected to be invertible is not
 *   ParseError        - malformed input file / workspace
 *   UnknownObject     - workspace reference to a missing object
 *   Unsupported       - request outside the implemented scope (flagged, not wrong)
 */
#pragma once

#include <stdexcept>
#include <string>

namespace dynbase {

class error : public std::runtime_error {
public:
  error(std::string kind, const std::string& message)
      : std::runtime_error(kind + ": " + message), kind_(std::move(kind)) {}

  const std::string& kind() const { return kind_; }

private:
  std::string kind_;
};

/** Throw helper so call sites stay one line. */
[[noreturn]] inline void fail(const std::string& kind, const std::string& message) {
  throw error(kind, message);
}

/** Precondition check used across the kernel. */
inline void require(bool cond, const std::string& kind, const std::string& message) {
  if (!cond) fail(kind, message);
}

} // namespace dynbase
