#pragma once

#include <stdexcept>
#include <string>

namespace pfq {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A vanishing factor in a denominator at the chosen evaluation point.
struct PoleError : Error {
  using Error::Error;
};

// A guard denominator of a checker vanished; the point is redrawn.
struct SkippedPoint : PoleError {
  using PoleError::PoleError;
};

// Series inversion of something with zero constant term.
struct NotAUnit : Error {
  using Error::Error;
};

// A formal sum or product that cannot be truncated to non-negative q-powers.
struct NonTruncatable : Error {
  using Error::Error;
};

struct DomainError : Error {
  using Error::Error;
};

struct OrderMismatch : Error {
  using Error::Error;
};

// Leading minor or leading subpfaffian vanished; index is 1-based.
struct PivotError : Error {
  PivotError(int i, const std::string& what)
      : Error(what + " (pivot " + std::to_string(i) + ")"), index(i) {}
  int index;
};

struct SkewViolation : Error {
  SkewViolation(int i, int j)
      : Error("matrix is not skew-symmetric at (" + std::to_string(i) + "," +
              std::to_string(j) + ")"),
        row(i), col(j) {}
  int row, col;
};

// Enumeration or subset guard exceeded.
struct GuardError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace pfq
