#pragma once

#include <stdexcept>
#include <string>

namespace diagre {

/// Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Ill-typed term construction: sequential width mismatch, unknown
/// generator, bad replacement at a hole, negative wire counts.
struct TypeError : Error {
  using Error::Error;
};

/// Malformed textual input (terms, signatures, permutations, traces).
struct ParseError : Error {
  ParseError(const std::string& what, std::size_t where)
      : Error(what), offset(where) {}
  std::size_t offset;  // byte offset or line number, caller-dependent
};

/// Signature construction problems: duplicate or reserved names.
struct SignatureError : Error {
  using Error::Error;
};

/// A state (dom 0) or effect (cod 0) where a state-and-effect-free
/// context is required.
struct StateEffectError : Error {
  using Error::Error;
};

/// A named generator in a context that admits only identities and swaps.
struct SymmetryError : Error {
  using Error::Error;
};

/// Invalid position into a term, or a rule that does not apply there.
struct PositionError : Error {
  using Error::Error;
};

/// An operation was called outside its documented precondition.
struct PreconditionError : Error {
  using Error::Error;
};

/// normalize() exceeded its step budget. The rewriting systems
/// terminate, so this indicates a bug rather than a long input.
struct BudgetError : Error {
  BudgetError(const std::string& what, long long limit)
      : Error(what), budget(limit) {}
  long long budget;
};

/// Measure bookkeeping violations: D mismatch between tuples, or a
/// rewrite step that does not decrease its rule's quantities.
struct MeasureError : Error {
  using Error::Error;
};

}  // namespace diagre
