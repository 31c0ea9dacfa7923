#pragma once

#include <stdexcept>
#include <string>

namespace lazyhom {

/// Broad failure classes. The CLI maps them onto exit codes.
enum class ErrorKind {
  Math,        // an axiom or invariant does not hold (exit 1)
  Usage,       // bad arguments, unreadable or malformed input (exit 2)
  OutOfScope,  // input outside the supported shape (exit 3)
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, std::string module, const std::string& what)
      : std::runtime_error(what), kind_(kind), module_(std::move(module)) {}

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& module() const noexcept { return module_; }

 private:
  ErrorKind kind_;
  std::string module_;
};

struct MathError : Error {
  MathError(std::string module, const std::string& what)
      : Error(ErrorKind::Math, std::move(module), what) {}
};

struct DimensionMismatch : Error {
  DimensionMismatch(std::string module, const std::string& what)
      : Error(ErrorKind::Usage, std::move(module), what) {}
};

struct InvalidGroup : Error {
  explicit InvalidGroup(const std::string& what)
      : Error(ErrorKind::Usage, "oracles", what) {}
};

struct NotInvertible : Error {
  explicit NotInvertible(const std::string& what)
      : Error(ErrorKind::Math, "hopf-core", what) {}
};

/// Raised when a coalgebra is not spanned by the supplied grouplikes and
/// their (g,g)-skew-primitives, or a morphism leaves the supported shape.
struct UnsupportedShape : Error {
  UnsupportedShape(std::string module, const std::string& what)
      : Error(ErrorKind::OutOfScope, std::move(module), what) {}
};

struct UnsupportedRelation : Error {
  explicit UnsupportedRelation(const std::string& what)
      : Error(ErrorKind::OutOfScope, "presented-hopf", what) {}
};

struct UsageError : Error {
  explicit UsageError(const std::string& what)
      : Error(ErrorKind::Usage, "cli", what) {}
};

}  // namespace lazyhom
