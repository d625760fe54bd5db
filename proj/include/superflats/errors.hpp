#pragma once

#include <stdexcept>
#include <string>

namespace superflats {

// Base of every error the library throws. The CLI maps each subclass to
// its own exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An input exceeds a configured search ceiling (see Limits).
class SizeLimitError : public Error {
 public:
  using Error::Error;
};

// A graph needs more than 64 vertices.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// A caller broke a documented precondition (e.g. passed a singular matrix
// to find_marker_row, or a disconnected graph to sober_quotient).
class PreconditionError : public Error {
 public:
  using Error::Error;
};

// The input lies outside the class an operation is defined on (e.g. a
// graph that is not sober, connected and of c-rank 3).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Mismatched row/column selections.
class ShapeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// A point/line system violates one of the geometry axioms.
class AxiomError : public Error {
 public:
  AxiomError(int axiom, std::string what)
      : Error("axiom G" + std::to_string(axiom) + " violated: " + what),
        axiom_(axiom) {}
  int axiom() const { return axiom_; }

 private:
  int axiom_;
};

}  // namespace superflats
