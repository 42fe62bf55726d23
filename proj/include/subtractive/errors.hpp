#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace subtractive {

using Element = std::uint32_t;

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Tables with the wrong dimensions or out-of-range entries.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// One violated semiring axiom together with the elements that witness it.
struct AxiomFailure {
  std::string axiom;
  std::vector<Element> witness;
};

/// Raised by validation. Carries every violated axiom, not only the first.
class AxiomViolation : public Error {
 public:
  explicit AxiomViolation(std::vector<AxiomFailure> failures);

  const std::vector<AxiomFailure>& failures() const noexcept { return failures_; }
  bool violates(const std::string& axiom) const;

 private:
  std::vector<AxiomFailure> failures_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& message);

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class UnknownFamily : public Error {
 public:
  using Error::Error;
};

class InvalidParam : public Error {
 public:
  using Error::Error;
};

/// A configured size limit (ideals, points, closed sets) was hit.
class CapExceeded : public Error {
 public:
  CapExceeded(const std::string& what, std::size_t count, std::size_t cap);

  std::size_t count() const noexcept { return count_; }
  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t count_;
  std::size_t cap_;
};

/// A per-check time budget ran out.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParentMismatch : public Error {
 public:
  ParentMismatch() : Error("ideals belong to different semirings") {}
};

class EmptyFamily : public Error {
 public:
  EmptyFamily() : Error("operation needs a nonempty family of ideals") {}
};

class InvalidIdeal : public Error {
 public:
  using Error::Error;
};

class InvalidHomomorphism : public Error {
 public:
  using Error::Error;
};

class SpaceMismatch : public Error {
 public:
  using Error::Error;
};

class NotSurjective : public Error {
 public:
  NotSurjective() : Error("homomorphism is not surjective") {}
};

}  // namespace subtractive
