#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace algequiv {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidField : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch() : Error("operands belong to different fields") {}
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class SingularMatrix : public Error {
 public:
  SingularMatrix() : Error("matrix is singular") {}
};

class NotSymmetric : public Error {
 public:
  NotSymmetric() : Error("matrix is not symmetric") {}
};

class CapExceeded : public Error {
 public:
  using Error::Error;
};

class NotInV0 : public Error {
 public:
  NotInV0() : Error("trace form T1 is singular (algebra outside V0)") {}
};

class FrameDeficient : public Error {
 public:
  explicit FrameDeficient(std::size_t achieved_rank)
      : Error("covariant rows span rank " + std::to_string(achieved_rank) + " only"),
        achieved_rank_(achieved_rank) {}

  std::size_t achieved_rank() const noexcept { return achieved_rank_; }

 private:
  std::size_t achieved_rank_;
};

class WrongField : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

// Raised when the invariants agree but the reconstructed witness does not
// verify. Never expected; the message carries the diagnostics.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

}  // namespace algequiv
