#pragma once

#include <stdexcept>
#include <string>

namespace laxcat {

/// Base class for everything thrown by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// A structure failed its defining laws.  The message names the offending
/// pieces; `kind()` is a stable machine-readable tag used by the CLI.
class ValidationError : public Error {
 public:
  ValidationError(std::string kind, const std::string& msg)
      : Error(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

// Validation kinds, one subclass per law family so tests can catch precisely.

class MissingComposite : public ValidationError {
 public:
  explicit MissingComposite(const std::string& msg) : ValidationError("MissingComposite", msg) {}
};

class NonAssociative : public ValidationError {
 public:
  explicit NonAssociative(const std::string& msg) : ValidationError("NonAssociative", msg) {}
};

class BadIdentity : public ValidationError {
 public:
  explicit BadIdentity(const std::string& msg) : ValidationError("BadIdentity", msg) {}
};

class NotAFunctor : public ValidationError {
 public:
  explicit NotAFunctor(const std::string& msg) : ValidationError("NotAFunctor", msg) {}
};

class NotNatural : public ValidationError {
 public:
  explicit NotNatural(const std::string& msg) : ValidationError("NotNatural", msg) {}
};

class ShapeMismatch : public ValidationError {
 public:
  explicit ShapeMismatch(const std::string& msg) : ValidationError("ShapeMismatch", msg) {}
};

class NotThin : public ValidationError {
 public:
  explicit NotThin(const std::string& msg) : ValidationError("NotThin", msg) {}
};

class NotAntisymmetric : public ValidationError {
 public:
  explicit NotAntisymmetric(const std::string& msg) : ValidationError("NotAntisymmetric", msg) {}
};

class NotMonotone : public ValidationError {
 public:
  explicit NotMonotone(const std::string& msg) : ValidationError("NotMonotone", msg) {}
};

class NotAGroup : public ValidationError {
 public:
  explicit NotAGroup(const std::string& msg) : ValidationError("NotAGroup", msg) {}
};

class NotAHomomorphism : public ValidationError {
 public:
  explicit NotAHomomorphism(const std::string& msg) : ValidationError("NotAHomomorphism", msg) {}
};

class NotIntertwining : public ValidationError {
 public:
  explicit NotIntertwining(const std::string& msg) : ValidationError("NotIntertwining", msg) {}
};

class NotALattice : public ValidationError {
 public:
  explicit NotALattice(const std::string& msg) : ValidationError("NotALattice", msg) {}
};

class NotDistributive : public ValidationError {
 public:
  explicit NotDistributive(const std::string& msg) : ValidationError("NotDistributive", msg) {}
};

class NotEnriched : public ValidationError {
 public:
  explicit NotEnriched(const std::string& msg) : ValidationError("NotEnriched", msg) {}
};

/// Input exceeds the configured Caps.
class SizeCapExceeded : public Error {
 public:
  explicit SizeCapExceeded(const std::string& msg) : Error("SizeCapExceeded: " + msg) {}
};

/// A constructed object failed an internal audit that mathematically cannot
/// fail on valid input.  Seeing this means a bug in the library, not in the
/// caller's data.
class InternalCheckFailed : public Error {
 public:
  explicit InternalCheckFailed(const std::string& msg) : Error("InternalCheckFailed: " + msg) {}
};

/// Fill-in was asked for on a square that does not satisfy its preconditions.
class NotOrthogonalInput : public Error {
 public:
  explicit NotOrthogonalInput(const std::string& msg) : Error("NotOrthogonalInput: " + msg) {}
};

/// Enumerate-and-filter searches that must return exactly one answer.
class NoSolution : public Error {
 public:
  explicit NoSolution(const std::string& msg) : Error("NoSolution: " + msg) {}
};

class MultipleSolutions : public Error {
 public:
  explicit MultipleSolutions(const std::string& msg) : Error("MultipleSolutions: " + msg) {}
};

/// The document text is not JSON at all.
class ParseError : public Error {
 public:
  explicit ParseError(const std::string& msg) : Error("ParseError: " + msg) {}
};

/// The document is JSON but not shaped like any known kind: unknown tag,
/// missing or mistyped field, reference to an undeclared name.  The message
/// carries the offending field path.
class SchemaError : public Error {
 public:
  explicit SchemaError(const std::string& msg) : Error("SchemaError: " + msg) {}
};

}  // namespace laxcat
